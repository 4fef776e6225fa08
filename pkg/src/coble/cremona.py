"""Plane-curve multiplicity vectors and Cremona degree reduction.

A vector (d; m1, ..., mk) records the degree of a plane curve and its
multiplicities at k points (simple points of multiplicity 1 may be kept:
they matter to the lattice embedding even though they do not contribute
to the genus).  Canonical form sorts multiplicities descending and drops
zeros.

The standard quadratic transformation based at three of the points sends
(d; m) to d' = 2d - mi - mj - mk with the three chosen multiplicities
replaced by d - mj - mk, d - mi - mk, d - mi - mj.  On the lattice side
this is the reflection in the root e0 - ei - ej - ek; the degree-5
transformation based at six points is likewise the reflection in
2 e0 - (e1 + ... + e6).

``noether_reduce`` runs the classical greedy descent: while the three
largest singular multiplicities (simple points do not count, missing ones
pad as general points) sum to more than the degree, transform there.  One
special step is recognized: a quintic with six double points maps to a
line under the degree-5 transformation based at the six nodes, and the
reducer takes that step whenever the singular part is exactly
(5; 2,2,2,2,2,2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import lattice as lat


class TransformNotAdmissible(ValueError):
    """The requested transformation does not act on an effective curve this way."""


@dataclass(frozen=True)
class MultiplicityVector:
    d: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        if self.d < 0:
            raise ValueError(f"degree must be >= 0, got {self.d}")
        if any(m < 1 for m in self.mults):
            raise ValueError("canonical multiplicities are >= 1; use make_vector")
        if list(self.mults) != sorted(self.mults, reverse=True):
            raise ValueError("multiplicities must be sorted descending; use make_vector")

    def genus_proxy(self) -> int:
        """(d-1)(d-2)/2 - sum m(m-1)/2; 0 for irreducible rational curves.

        TESTS::

            >>> parse_vector("(6;2,2,2,2,2,2,2,2,2,2)").genus_proxy()
            0
            >>> parse_vector("(3)").genus_proxy()
            1
        """
        g = (self.d - 1) * (self.d - 2) // 2
        return g - sum(m * (m - 1) // 2 for m in self.mults)

    def singular(self) -> "MultiplicityVector":
        """The vector with simple points dropped."""
        return MultiplicityVector(self.d, tuple(m for m in self.mults if m >= 2))

    def mult_at(self, i: int) -> int:
        """Multiplicity at index i; indices past the end are general points."""
        if i < 0:
            raise IndexError("negative index")
        return self.mults[i] if i < len(self.mults) else 0

    def __str__(self) -> str:
        if not self.mults:
            return f"({self.d})"
        return f"({self.d};{','.join(str(m) for m in self.mults)})"

    def describe(self) -> str:
        """Short english name for small degrees, else the vector string."""
        names = {0: "empty", 1: "line", 2: "conic"}
        if not self.singular().mults and self.d in names:
            return names[self.d]
        return str(self)

    def to_json(self) -> dict:
        return {"d": self.d, "mults": list(self.mults)}


def make_vector(d: int, mults) -> MultiplicityVector:
    """Canonicalize: sort descending, drop zeros, reject negatives."""
    ms = sorted((int(m) for m in mults), reverse=True)
    if ms and ms[-1] < 0:
        raise ValueError(f"multiplicities must be >= 0, got {min(ms)}")
    return MultiplicityVector(int(d), tuple(m for m in ms if m > 0))


_VEC_RE = re.compile(r"^\(\s*(\d+)\s*(?:;([\d\s,]*))?\)$")


def parse_vector(text: str) -> MultiplicityVector:
    """Parse "(d;m1,m2,...)" or "(d)"; whitespace allowed around numbers.

    TESTS::

        >>> parse_vector("(6; 3,3, 2,2,2,2)")
        MultiplicityVector(d=6, mults=(3, 3, 2, 2, 2, 2))
        >>> parse_vector("(1)")
        MultiplicityVector(d=1, mults=())
    """
    s = text.strip()
    m = _VEC_RE.match(s)
    if not m:
        for pos, ch in enumerate(s):
            if ch not in "();, \t0123456789":
                raise ValueError(
                    f"cannot parse multiplicity vector {text!r}: "
                    f"unexpected character {ch!r} at position {pos}"
                )
        raise ValueError(
            f"cannot parse multiplicity vector {text!r}: expected \"(d;m1,m2,...)\""
        )
    d = int(m.group(1))
    body = (m.group(2) or "").strip()
    if not body:
        return make_vector(d, ())
    parts = [p.strip() for p in body.split(",")]
    if any(not p for p in parts):
        raise ValueError(f"cannot parse multiplicity vector {text!r}: empty entry")
    return make_vector(d, (int(p) for p in parts))


def to_class(v: MultiplicityVector, n_points: int | None = None) -> lat.DivisorClass:
    """d e0 - sum mi e_i in the lattice of n_points blow-ups of the plane."""
    n = len(v.mults) if n_points is None else int(n_points)
    if n < len(v.mults):
        raise ValueError(f"need at least {len(v.mults)} points, got {n}")
    l = lat.make_lattice(lat.P2(), n)
    coeffs = (v.d,) + tuple(-m for m in v.mults) + (0,) * (n - len(v.mults))
    return l.make_class(coeffs)


def from_class(c: lat.DivisorClass) -> MultiplicityVector:
    """Inverse of to_class, canonicalized; sign conventions enforced."""
    if not isinstance(c.lattice.base, lat.P2):
        raise ValueError("multiplicity vectors live over the plane")
    d = c.coeffs[0]
    if d < 0:
        raise ValueError(f"degree coefficient must be >= 0, got {d}")
    tail = c.coeffs[1:]
    if any(x > 0 for x in tail):
        raise ValueError("exceptional coefficients must be <= 0")
    return make_vector(d, (-x for x in tail))


def _quadratic_raw(d: int, mults: list[int], i: int, j: int, k: int):
    """Positional transform; zeros kept in place.  Used for the involution law."""
    if len({i, j, k}) != 3 or min(i, j, k) < 0:
        raise ValueError("centers must be three distinct nonnegative indices")
    size = max(len(mults), i + 1, j + 1, k + 1)
    ms = list(mults) + [0] * (size - len(mults))
    mi, mj, mk = ms[i], ms[j], ms[k]
    d2 = 2 * d - mi - mj - mk
    ms[i] = d - mj - mk
    ms[j] = d - mi - mk
    ms[k] = d - mi - mj
    if d2 < 0 or min(ms[i], ms[j], ms[k]) < 0:
        raise TransformNotAdmissible(
            f"transformation not admissible for this vector: "
            f"({d};...) at multiplicities {mi},{mj},{mk}"
        )
    return d2, ms


def quadratic_transform(v: MultiplicityVector, i: int, j: int, k: int) -> MultiplicityVector:
    """Quadratic transformation based at points i, j, k (0-based indices).

    Indices past the end of the vector are general points of multiplicity
    zero.  The result is canonical (sorted, zeros dropped).

    TESTS::

        >>> str(quadratic_transform(parse_vector("(4;2,2,2)"), 0, 1, 2))
        '(2)'
        >>> str(quadratic_transform(parse_vector("(5;3,2,2,2)"), 0, 1, 2))
        '(3;2,1)'
        >>> str(quadratic_transform(parse_vector("(6;4,2,2,2,2)"), 0, 1, 2))
        '(4;2,2,2)'
    """
    d2, ms = _quadratic_raw(v.d, list(v.mults), i, j, k)
    return make_vector(d2, ms)


def quintic_transform(v: MultiplicityVector, indices) -> MultiplicityVector:
    """Degree-5 transformation based at six points, via the lattice reflection.

    The class d e0 - sum mi e_i is reflected in 2 e0 - (e_a + ... + e_f)
    for the six chosen indices and read back as a vector.

    TESTS::

        >>> str(quintic_transform(parse_vector("(5;2,2,2,2,2,2)"), range(6)))
        '(1)'
        >>> str(quintic_transform(parse_vector("(6;2,2,2,2,2,2)"), range(6)))
        '(6;2,2,2,2,2,2)'
    """
    idx = [int(i) for i in indices]
    if len(idx) != 6 or len(set(idx)) != 6 or min(idx) < 0:
        raise ValueError("need six distinct nonnegative point indices")
    n = max(len(v.mults), max(idx) + 1)
    cls = to_class(v, n)
    root_coeffs = [2] + [0] * n
    for i in idx:
        root_coeffs[i + 1] = -1
    root = cls.lattice.make_class(root_coeffs)
    image = lat.reflect(cls, root)
    d2 = image.coeffs[0]
    if d2 < 0 or any(x > 0 for x in image.coeffs[1:]):
        raise TransformNotAdmissible(
            "transformation not admissible for this vector: "
            f"degree-5 system at {sorted(idx)} gives {image}"
        )
    return from_class(image)


@dataclass(frozen=True)
class ReductionStep:
    op: str  # "quadratic" | "quintic"
    centers: tuple[int, ...]  # multiplicities at the chosen centers
    padded: bool  # True when a general (multiplicity-0) point was used
    result: MultiplicityVector

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "centers": list(self.centers),
            "padded": self.padded,
            "result": self.result.to_json(),
            "display": str(self.result.singular()),
        }


@dataclass(frozen=True)
class ReductionResult:
    start: MultiplicityVector
    steps: tuple[ReductionStep, ...]
    final: MultiplicityVector

    def display_trace(self) -> list[str]:
        return [str(self.start.singular())] + [str(s.result.singular()) for s in self.steps]

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "final": self.final.to_json(),
            "final_display": str(self.final.singular()),
            "describe": self.final.describe(),
        }


class ReductionError(ValueError):
    """Raised when a greedy step is inadmissible; carries the partial trace."""

    def __init__(self, message: str, start, steps):
        super().__init__(message)
        self.partial = ReductionResult(start, tuple(steps), steps[-1].result if steps else start)


_QUINTIC_SHAPE = (2, 2, 2, 2, 2, 2)


def noether_reduce(v: MultiplicityVector, force: bool = False, use_quintic: bool = True) -> ReductionResult:
    """Greedy degree reduction at the three largest singular points.

    Requires the genus proxy to vanish (an irreducible rational curve)
    unless ``force`` is set.  The degree strictly decreases at every step,
    so termination is immediate; the trace records each step with the
    multiplicities used as centers.

    TESTS::

        >>> noether_reduce(parse_vector("(6;3,3,3,2)")).display_trace()
        ['(6;3,3,3,2)', '(3;2)']
        >>> noether_reduce(parse_vector("(5;2,2,2,2,2,2)")).final.describe()
        'line'
        >>> noether_reduce(parse_vector("(5;2,2,2,2,2,2)"), use_quintic=False).final.describe()
        'conic'
    """
    if not force and v.genus_proxy() != 0:
        raise ValueError(
            f"{v} has genus proxy {v.genus_proxy()}, not an irreducible rational "
            "curve vector; pass force=True to reduce anyway"
        )
    steps: list[ReductionStep] = []
    cur = v
    while True:
        if use_quintic and cur.singular().mults == _QUINTIC_SHAPE and cur.d == 5:
            six = [i for i, m in enumerate(cur.mults) if m == 2][:6]
            try:
                nxt = quintic_transform(cur, six)
            except TransformNotAdmissible as exc:
                raise ReductionError(str(exc), v, steps) from exc
            steps.append(ReductionStep("quintic", (2,) * 6, False, nxt))
            cur = nxt
            continue
        n_sing = sum(1 for m in cur.mults if m >= 2)
        top = list(cur.mults[: min(3, n_sing)]) + [0] * max(0, 3 - n_sing)
        if sum(top) <= cur.d:
            break
        # canonical order puts singular points first; pad with fresh general points
        centers = tuple(range(min(3, n_sing))) + tuple(
            len(cur.mults) + t for t in range(3 - min(3, n_sing))
        )
        try:
            nxt = quadratic_transform(cur, *centers)
        except TransformNotAdmissible as exc:
            raise ReductionError(str(exc), v, steps) from exc
        steps.append(ReductionStep("quadratic", tuple(top), 0 in top, nxt))
        cur = nxt
    return ReductionResult(v, tuple(steps), cur)


def low_degree_rational_family() -> list[MultiplicityVector]:
    """All rational-curve vectors the greedy reducer is guaranteed to finish.

    Degrees 4 to 6, vanishing genus proxy, no point of multiplicity d - 1,
    any two multiplicities summing to at most d (two points of an
    irreducible curve lie on a line), and for degree 6 a point of
    multiplicity at least 3.

    TESTS::

        >>> [str(v) for v in low_degree_rational_family()]  # doctest: +NORMALIZE_WHITESPACE
        ['(4;2,2,2)', '(5;2,2,2,2,2,2)', '(5;3,2,2,2)', '(6;3,2,2,2,2,2,2,2)',
         '(6;3,3,2,2,2,2)', '(6;3,3,3,2)', '(6;4,2,2,2,2)']
    """
    out = []
    for d in (4, 5, 6):
        target = (d - 1) * (d - 2) // 2
        out.extend(_partitions_into_mults(d, target, d - 2, ()))
    vecs = sorted(set(out), key=lambda v: (v.d, v.mults))
    return [
        v
        for v in vecs
        if (v.d != 6 or any(m >= 3 for m in v.mults))
        and all(
            v.mults[i] + v.mults[j] <= v.d
            for i in range(len(v.mults))
            for j in range(i + 1, len(v.mults))
        )
    ]


def _partitions_into_mults(d, remaining, max_mult, acc):
    if remaining == 0:
        yield make_vector(d, acc)
        return
    for m in range(max_mult, 1, -1):
        w = m * (m - 1) // 2
        if w <= remaining:
            yield from _partitions_into_mults(d, remaining - w, m, acc + (m,))
