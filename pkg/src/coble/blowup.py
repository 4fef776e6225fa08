"""Blow-up sequences with infinitely near centers and transform calculus.

A sequence of point blow-ups over P2 or a Hirzebruch surface is recorded
as an ordered list of centers; a center either lies on the base surface
(parent None) or is infinitely near an earlier center (parent = that
center's id).  The resulting lattice has one orthogonal (-1)-vector per
center; that basis vector is the TOTAL transform class of the center's
exceptional curve, so the proper transform of a curve with multiplicity
m_p at each successive center p is

    lift(base class) - sum_p m_p e_p,

and the irreducible exceptional curve over p has class
e_p - sum(e_q : q an immediate child of p).

Multiplicities are data, not computed: the author states where a curve
passes and how singular it is there; the engine checks consistency
(child multiplicity never exceeds the parent's) and does the lattice
bookkeeping exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .config import CurveConfiguration, Edge, Node
from .lattice import (
    Base,
    DivisorClass,
    IntersectionLattice,
    LatticeMismatch,
    base_from_json,
    make_lattice,
    pair,
)


@dataclass(frozen=True)
class Center:
    id: str
    parent: str | None = None
    on_curves: tuple[str, ...] = ()


@dataclass(frozen=True)
class BlowUpSequence:
    base: Base
    centers: tuple[Center, ...]
    _lattice: IntersectionLattice = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seen: set[str] = set()
        for c in self.centers:
            if c.id in seen:
                raise ValueError(f"duplicate center id {c.id!r}")
            if c.parent is not None and c.parent not in seen:
                raise ValueError(
                    f"center {c.id!r}: parent {c.parent!r} must be an earlier center"
                )
            seen.add(c.id)
        lat = make_lattice(self.base, len(self.centers), tuple(c.id for c in self.centers))
        object.__setattr__(self, "_lattice", lat)

    @property
    def lattice(self) -> IntersectionLattice:
        return self._lattice

    @property
    def base_lattice(self) -> IntersectionLattice:
        return make_lattice(self.base, 0)

    def k_squared(self) -> int:
        """Canonical self-intersection after all blow-ups.

        TESTS::

            >>> from .lattice import P2
            >>> seq = BlowUpSequence(P2(), tuple(Center(f"p{i}") for i in range(10)))
            >>> seq.k_squared()
            -1
            >>> BlowUpSequence(P2(), ()).k_squared()
            9
        """
        return self._lattice.k_squared

    def center(self, cid: str) -> Center:
        for c in self.centers:
            if c.id == cid:
                return c
        raise KeyError(f"unknown center {cid!r}")

    def children(self, cid: str) -> tuple[str, ...]:
        return tuple(c.id for c in self.centers if c.parent == cid)

    def exceptional(self, cid: str) -> DivisorClass:
        """Total transform class of the exceptional curve over a center."""
        self.center(cid)
        return self._lattice.basis_class(cid)

    def exceptional_proper(self, cid: str) -> DivisorClass:
        """Class of the irreducible exceptional curve over a center."""
        cls = self.exceptional(cid)
        for child in self.children(cid):
            cls = cls - self._lattice.basis_class(child)
        return cls

    def lift(self, base_class: DivisorClass) -> DivisorClass:
        """Pull a base-lattice class back with zero exceptional coefficients."""
        if base_class.lattice != self.base_lattice:
            raise LatticeMismatch("class does not live in this sequence's base lattice")
        head = len(base_class.coeffs)
        coeffs = base_class.coeffs + (0,) * len(self.centers)
        assert len(coeffs) == self._lattice.rank and head == self._lattice.rank - len(
            self.centers
        )
        return self._lattice.make_class(coeffs)

    def to_json(self) -> dict:
        return {
            "base": self.base.json_descriptor(),
            "centers": [
                {"id": c.id, "parent": c.parent, "on": list(c.on_curves)}
                for c in self.centers
            ],
        }


@dataclass(frozen=True)
class CurveAssignment:
    label: str
    base_class: DivisorClass
    mults: dict

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "class": list(self.base_class.coeffs),
            "mults": dict(self.mults),
        }


def make_assignment(seq: BlowUpSequence, label: str, base_class: DivisorClass, mults=None) -> CurveAssignment:
    """Validated curve assignment for a sequence.

    Checks that every multiplicity names a known center, that a center
    infinitely near another never carries a larger multiplicity than its
    parent, and that centers declared to lie on this curve have
    multiplicity >= 1.
    """
    mults = {k: int(v) for k, v in (mults or {}).items()}
    known = {c.id for c in seq.centers}
    for cid, m in mults.items():
        if cid not in known:
            raise ValueError(f"curve {label!r}: unknown center {cid!r}")
        if m < 0:
            raise ValueError(f"curve {label!r}: negative multiplicity at {cid!r}")
    for c in seq.centers:
        m_here = mults.get(c.id, 0)
        if c.parent is not None and m_here > mults.get(c.parent, 0):
            raise ValueError(
                f"curve {label!r}: multiplicity {m_here} at {c.id!r} exceeds "
                f"parent {c.parent!r}'s multiplicity"
            )
        if label in c.on_curves and m_here < 1:
            raise ValueError(
                f"curve {label!r}: center {c.id!r} is declared on this curve "
                "but the multiplicity there is 0"
            )
    if base_class.lattice != seq.base_lattice:
        raise LatticeMismatch(f"curve {label!r}: base class lives in the wrong lattice")
    return CurveAssignment(label, base_class, mults)


def total_transform(seq: BlowUpSequence, c: CurveAssignment) -> DivisorClass:
    """Pullback of the curve's base class: exceptional coefficients all zero."""
    return seq.lift(c.base_class)


def proper_transform(seq: BlowUpSequence, c: CurveAssignment) -> DivisorClass:
    """lift(base class) minus multiplicity times each center's class.

    TESTS::

        >>> from .lattice import P2
        >>> seq = BlowUpSequence(P2(), tuple(Center(f"p{i}") for i in range(1, 11)))
        >>> deg6 = seq.base_lattice.make_class((6,))
        >>> c = make_assignment(seq, "C", deg6, {f"p{i}": 2 for i in range(1, 11)})
        >>> proper_transform(seq, c).self_intersection()
        -4
    """
    cls = seq.lift(c.base_class)
    for cid, m in c.mults.items():
        if m:
            cls = cls - m * seq.lattice.basis_class(cid)
    return cls


@dataclass(frozen=True)
class IdentityReport:
    holds: bool
    residual: DivisorClass

    def __bool__(self) -> bool:
        return self.holds


def _resolve_term(seq: BlowUpSequence, assignments: dict, term) -> DivisorClass:
    name, coeff = term
    coeff = int(coeff)
    lat = seq.lattice
    if name == "K":
        cls = lat.canonical
    elif name.startswith("t:"):
        cls = total_transform(seq, assignments[name[2:]])
    elif name.startswith("e:"):
        cls = seq.exceptional(name[2:])
    elif name.startswith("e':"):
        cls = seq.exceptional_proper(name[3:])
    elif name.startswith("b:"):
        label = name[2:]
        if label not in lat.basis_labels[: lat.rank - len(seq.centers)]:
            raise KeyError(f"{label!r} is not a base basis label")
        cls = lat.basis_class(label)
    elif name in assignments:
        cls = proper_transform(seq, assignments[name])
    else:
        raise KeyError(f"cannot resolve term {name!r}")
    return coeff * cls


def verify_class_identity(seq: BlowUpSequence, assignments, lhs, rhs) -> IdentityReport:
    """Check an integer-linear identity between divisor classes.

    ``lhs`` and ``rhs`` are lists of (name, coefficient) terms where a name
    is one of:

      "K"          canonical class of the blown-up lattice
      "<label>"    proper transform of the assignment with that label
      "t:<label>"  total transform of that assignment
      "e:<id>"     total exceptional class of a center
      "e':<id>"    irreducible exceptional curve over a center
      "b:<name>"   lifted base basis class (e0, or f / s0)

    Returns whether lhs - rhs vanishes, plus the residual for diagnostics.

    TESTS::

        >>> from .lattice import P2
        >>> seq = BlowUpSequence(P2(), (Center("p"),))
        >>> rep = verify_class_identity(seq, {}, [("b:e0", 1)], [("b:e0", 1), ("e:p", 1)])
        >>> rep.holds, str(rep.residual)
        (False, '-p')
    """
    if isinstance(assignments, (list, tuple)):
        assignments = {a.label: a for a in assignments}
    acc = seq.lattice.zero()
    for term in lhs:
        acc = acc + _resolve_term(seq, assignments, term)
    for term in rhs:
        acc = acc - _resolve_term(seq, assignments, term)
    return IdentityReport(all(v == 0 for v in acc.coeffs), acc)


def sequence_from_json(data):
    """Parse {"base":..., "centers":[...], "curves":[...]} into a sequence.

    Returns (BlowUpSequence, {label: CurveAssignment}).  The "curves" key is
    optional.  Round-trips with ``sequence_to_json``.
    """
    if isinstance(data, str):
        data = json.loads(data)
    base = base_from_json(data["base"])
    centers = tuple(
        Center(
            id=str(c["id"]),
            parent=c.get("parent"),
            on_curves=tuple(c.get("on", ())),
        )
        for c in data["centers"]
    )
    seq = BlowUpSequence(base, centers)
    base_lat = seq.base_lattice
    curves = {}
    for entry in data.get("curves", ()):
        label = str(entry["label"])
        cls = base_lat.make_class(tuple(int(x) for x in entry["class"]))
        curves[label] = make_assignment(seq, label, cls, entry.get("mults", {}))
    return seq, curves


def sequence_to_json(seq: BlowUpSequence, assignments=()) -> dict:
    data = seq.to_json()
    if assignments:
        if isinstance(assignments, dict):
            assignments = assignments.values()
        data["curves"] = [a.to_json() for a in assignments]
    return data


def configuration_from_classes(entries, overrides=None, triples=()) -> CurveConfiguration:
    """Build a dual-graph configuration from named divisor classes.

    ``entries`` is a list of (id, DivisorClass, genus, mult) or
    (id, DivisorClass, genus, mult, sing) tuples.  Self-intersections and
    pairwise intersection numbers come from the lattice; a positive pairing
    p between two ids becomes an edge with count p and tangency 1 unless
    ``overrides[(a, b)] = {"count": c, "tangency": t}`` (with c*t = p)
    says otherwise.  ``triples`` passes through to the configuration.
    """
    overrides = {frozenset(k): v for k, v in (overrides or {}).items()}
    nodes = []
    classes = {}
    for entry in entries:
        nid, cls, genus, mult = entry[:4]
        sing = entry[4] if len(entry) > 4 else None
        nodes.append(Node(nid, self_int=cls.self_intersection(), genus=genus, mult=mult, sing=sing))
        classes[nid] = cls
    edges = []
    ids = [n.id for n in nodes]
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            p = pair(classes[a], classes[b])
            if p < 0:
                raise ValueError(f"classes {a},{b} pair negatively ({p}); not distinct curves")
            if p == 0:
                continue
            ov = overrides.get(frozenset((a, b)))
            if ov:
                count, tangency = int(ov.get("count", 1)), int(ov.get("tangency", 1))
                if count * tangency != p:
                    raise ValueError(
                        f"override for {a},{b} gives {count}*{tangency} != pairing {p}"
                    )
            else:
                count, tangency = p, 1
            edges.append(Edge(a, b, count=count, tangency=tangency))
    return CurveConfiguration(tuple(nodes), tuple(edges), tuple(tuple(t) for t in triples))
