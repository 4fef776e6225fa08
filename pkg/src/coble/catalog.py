"""Catalog of worked constructions and the claim evaluation engine.

Each catalog entry is a JSON data file shipped with the package.  Static
entries embed their blow-up sequences, curve assignments, dual-graph
configurations, and claims with frozen expected values.  Parametric
entries store default parameters and the frozen expected values (as
integers or affine forms in the parameters); their sequences and claim
arguments are rebuilt by the matching constructor in ``constructions``.

``verify_example`` evaluates every claim of an entry and reports each
comparison.  The claim language:

  class-identity       {sequence, lhs, rhs}            -> bool
  combination-square   {sequence, terms}               -> int
  combination-genus    {sequence, terms}               -> int
  all-squares          {sequence, curves}              -> sorted distinct squares
  pairing              {sequence, a, b}                -> int
  k-squared            {sequence}                      -> int
  blow-down-chain      {sequence, contract, track?,
                        extra_blowups?}                -> {k_squared, track_square}
  disjoint-minus-ones  {sequence, curves}              -> bool
  section-pattern      {sequence, sections, fiber}     -> bool
  fiber-type           {configuration}                 -> name or None
  k3-type              {configuration}                 -> bool
  log-enriques         {configuration}                 -> bool
  terminal             {configuration}                 -> bool
  minimality           {configuration, member, e}      -> verdict string
  match-case           {input}                         -> matched case numbers
  jacobian-bound       {fiber, g}                      -> bool
  halphen-k3           {fibers}                        -> bool
  reduce               {vector}                        -> final shape description

Linear combinations use the (name, coefficient) term language of
``verify_class_identity``.  An expected value of the form
``{"affine": {"const": c, "<param>": a, ...}}`` means c + sum a*param;
inside a dict expected value, ``None`` marks a field as unchecked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import constructions
from .blowup import _resolve_term, sequence_from_json, sequence_to_json
from .classify import (
    halphen_k3_predicate,
    input_from_json,
    is_k3_type,
    jacobian_bound_check,
    log_enriques_shape,
    match_rational_case,
    minimality_check,
    terminal_shape,
)
from .config import config_from_json
from .cremona import noether_reduce, parse_vector
from .fibers import recognize_fiber
from .lattice import arithmetic_genus, pair


def _data_root():
    return resources.files("coble").joinpath("data", "catalog")


def catalog_names() -> list[str]:
    return sorted(
        p.name[: -len(".json")]
        for p in _data_root().iterdir()
        if p.name.endswith(".json")
    )


def load_entry(name: str) -> dict:
    path = _data_root().joinpath(f"{name}.json")
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise KeyError(f"no catalog entry named {name!r}") from None
    return json.loads(text)


def bundle_to_json(bundle) -> dict:
    """Serialize a built example as a catalog data file."""
    data = {
        "name": bundle.name,
        "description": bundle.description,
        "parametric": bundle.parametric,
        "parameters": dict(bundle.parameters),
    }
    if bundle.parametric:
        data["claims"] = [
            {**c, "args": "builder"} for c in bundle.claims
        ]
    else:
        data["sequences"] = {
            n: sequence_to_json(seq, asg) for n, (seq, asg) in bundle.sequences.items()
        }
        data["configurations"] = {
            n: cfg.to_json() for n, cfg in bundle.configurations.items()
        }
        data["claims"] = [dict(c) for c in bundle.claims]
    return data


def _affine_value(form: dict, params: dict) -> int:
    value = int(form.get("const", 0))
    for name, coeff in form.items():
        if name == "const":
            continue
        if name not in params:
            raise KeyError(f"affine expected value references unknown parameter {name!r}")
        value += int(coeff) * int(params[name])
    return value


def _resolve_expected(expected, params: dict):
    if isinstance(expected, dict) and set(expected) == {"affine"}:
        return _affine_value(expected["affine"], params)
    if isinstance(expected, dict):
        return {k: _resolve_expected(v, params) for k, v in expected.items()}
    if isinstance(expected, list):
        return [_resolve_expected(v, params) for v in expected]
    return expected


def _matches(actual, expected) -> bool:
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return False
        return all(
            v is None or (k in actual and _matches(actual[k], v))
            for k, v in expected.items()
        )
    if isinstance(expected, list):
        return isinstance(actual, list) and len(actual) == len(expected) and all(
            _matches(a, e) for a, e in zip(actual, expected)
        )
    return actual == expected


def _terms(raw):
    return [(str(name), int(coeff)) for name, coeff in raw]


def _combination(seq_pair, raw_terms):
    seq, assignments = seq_pair
    acc = seq.lattice.zero()
    for term in _terms(raw_terms):
        acc = acc + _resolve_term(seq, assignments, term)
    return acc


def _blow_down_chain(seq_pair, contract, track=None, extra_blowups=0):
    """Contract a list of curves in order, tracking one extra class.

    Each listed combination must have self-intersection -1 at its turn
    (earlier contractions transform the later classes), as for an
    iterated blow-down.  Returns the canonical self-intersection after
    the contractions (minus any further declared blow-ups) and the final
    self-intersection of the tracked class.
    """
    seq = seq_pair[0]
    done = []

    def push_down(cls):
        for e in done:
            cls = cls + pair(cls, e) * e
        return cls

    for raw in contract:
        cur = push_down(_combination(seq_pair, raw))
        if cur.self_intersection() != -1:
            raise ValueError(
                f"chain step {raw!r} has self-intersection "
                f"{cur.self_intersection()}, not -1"
            )
        done.append(cur)
    k_squared = seq.k_squared() + len(done) - int(extra_blowups)
    track_square = None
    if track is not None:
        track_square = push_down(_combination(seq_pair, track)).self_intersection()
    return {"k_squared": k_squared, "track_square": track_square}


def _section_pattern(seq_pair, sections, fiber) -> bool:
    f = _combination(seq_pair, fiber)
    if f.self_intersection() != 0:
        return False
    classes = [_combination(seq_pair, s) for s in sections]
    for i, s in enumerate(classes):
        if s.self_intersection() != -1 or pair(s, f) != 1:
            return False
        if any(pair(s, t) != 0 for t in classes[i + 1 :]):
            return False
    return True


def _disjoint_minus_ones(seq_pair, curves) -> bool:
    classes = [_combination(seq_pair, c) for c in curves]
    return all(c.self_intersection() == -1 for c in classes) and all(
        pair(a, b) == 0
        for i, a in enumerate(classes)
        for b in classes[i + 1 :]
    )


def run_check(check: str, args: dict, sequences: dict, configurations: dict):
    """Evaluate one claim; returns the actual value the claim compares."""
    if check == "class-identity":
        seq, asg = sequences[args["sequence"]]
        from .blowup import verify_class_identity

        return bool(
            verify_class_identity(seq, asg, _terms(args["lhs"]), _terms(args["rhs"]))
        )
    if check == "combination-square":
        return _combination(sequences[args["sequence"]], args["terms"]).self_intersection()
    if check == "combination-genus":
        return arithmetic_genus(_combination(sequences[args["sequence"]], args["terms"]))
    if check == "all-squares":
        pair_ = sequences[args["sequence"]]
        return sorted({_combination(pair_, c).self_intersection() for c in args["curves"]})
    if check == "pairing":
        pair_ = sequences[args["sequence"]]
        return pair(_combination(pair_, args["a"]), _combination(pair_, args["b"]))
    if check == "k-squared":
        return sequences[args["sequence"]][0].k_squared()
    if check == "blow-down-chain":
        return _blow_down_chain(
            sequences[args["sequence"]],
            args["contract"],
            args.get("track"),
            args.get("extra_blowups", 0),
        )
    if check == "disjoint-minus-ones":
        return _disjoint_minus_ones(sequences[args["sequence"]], args["curves"])
    if check == "section-pattern":
        return _section_pattern(
            sequences[args["sequence"]], args["sections"], args["fiber"]
        )
    if check == "fiber-type":
        return recognize_fiber(configurations[args["configuration"]])
    if check == "k3-type":
        return is_k3_type(configurations[args["configuration"]]).is_k3_type
    if check == "log-enriques":
        return log_enriques_shape(configurations[args["configuration"]]).ok
    if check == "terminal":
        return terminal_shape(configurations[args["configuration"]])
    if check == "minimality":
        verdict = minimality_check(
            configurations[args["configuration"]], args["member"], args["e"]
        )
        return verdict.verdict
    if check == "match-case":
        return list(match_rational_case(input_from_json(args["input"])).matched_cases)
    if check == "jacobian-bound":
        return jacobian_bound_check(args["fiber"], args["g"]).ok
    if check == "halphen-k3":
        return halphen_k3_predicate(*args["fibers"])
    if check == "reduce":
        return noether_reduce(parse_vector(args["vector"])).final.describe()
    raise KeyError(f"unknown check {check!r}")


@dataclass(frozen=True)
class ClaimResult:
    description: str
    check: str
    expected: object
    actual: object
    passed: bool

    def to_json(self) -> dict:
        return {
            "description": self.description,
            "check": self.check,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class ExampleReport:
    name: str
    parameters: dict
    results: tuple

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "parameters": dict(self.parameters),
            "ok": self.ok,
            "claims": [r.to_json() for r in self.results],
        }


def _materialize(entry: dict, params: dict | None):
    """Sequences, configurations, and claim list for an entry."""
    if entry.get("parametric"):
        merged = dict(entry.get("parameters", {}))
        merged.update(params or {})
        bundle = constructions.BUILDERS[entry["name"]](**merged)
        claims = []
        for frozen, built in zip(entry["claims"], bundle.claims, strict=True):
            if frozen["check"] != built["check"]:
                raise ValueError(
                    f"catalog data and constructor disagree on claim order for "
                    f"{entry['name']!r}: {frozen['check']} vs {built['check']}"
                )
            claims.append({**built, "expected": frozen["expected"]})
        return bundle.sequences, bundle.configurations, claims, merged
    if params:
        raise ValueError(f"catalog entry {entry['name']!r} takes no parameters")
    sequences = {
        n: sequence_from_json(d) for n, d in entry.get("sequences", {}).items()
    }
    configurations = {
        n: config_from_json(d) for n, d in entry.get("configurations", {}).items()
    }
    return sequences, configurations, list(entry["claims"]), {}


def verify_example(name: str, params: dict | None = None) -> ExampleReport:
    """Evaluate every claim of a catalog entry.

    TESTS::

        >>> verify_example("quintic-plus-line").ok
        True
        >>> rep = verify_example("scroll-fiber-tower", {"n": 4, "t": 1, "b": 11})
        >>> rep.ok, len(rep.results)
        (True, 5)
    """
    entry = load_entry(name)
    sequences, configurations, claims, merged = _materialize(entry, params)
    results = []
    for claim in claims:
        expected = _resolve_expected(claim["expected"], merged)
        actual = run_check(claim["check"], claim["args"], sequences, configurations)
        results.append(
            ClaimResult(
                description=claim["description"],
                check=claim["check"],
                expected=expected,
                actual=actual,
                passed=_matches(actual, expected),
            )
        )
    return ExampleReport(name=name, parameters=merged, results=tuple(results))


def catalog_summary() -> list[dict]:
    out = []
    for name in catalog_names():
        entry = load_entry(name)
        out.append(
            {
                "name": name,
                "description": entry["description"],
                "parametric": bool(entry.get("parametric")),
                "parameters": entry.get("parameters", {}),
                "claims": len(entry["claims"]),
            }
        )
    return out
