"""Enumeration of negative rational curve classes on blow-up lattices.

A numerical (-n)-class is a divisor class C with C^2 = -n and C.K = n - 2
(so the adjunction genus is 0).  On the plane blown up at k points, writing
C = d e0 - sum a_i e_i, the two conditions become the Diophantine pair

    sum a_i = 3d + n - 2,      sum a_i^2 = d^2 + n,

which prunes the coefficient box hard enough for exhaustive search at desk
scale.  Enumeration is by degree; within a degree, descending coefficient
multisets are found recursively and then expanded over the point indices.

Effectivity is NOT decided here: output classes are numerical candidates.
The default "effective-shape" filter keeps d >= 1 classes with all a_i >= 0
and, at d = 0, only the exceptional shapes e_i - (sum of later e_j); the
"lattice-only" flag admits every d = 0 integer solution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .lattice import DivisorClass, Hirzebruch, IntersectionLattice, P2, make_lattice

MAX_RANK = 15
MAX_CAP = 20


def _descending_tuples(total: int, total_sq: int, slots: int, max_part: int):
    """Descending tuples of nonnegative ints with given sum and sum of squares."""
    if slots == 0:
        if total == 0 and total_sq == 0:
            yield ()
        return
    top = min(max_part, total)
    while top * top > total_sq:
        top -= 1
    for first in range(top, -1, -1):
        rest, rest_sq = total - first, total_sq - first * first
        if rest < 0 or rest_sq < 0:
            continue
        # remaining slots each at most `first`, so sums are bounded
        if rest > first * (slots - 1) or rest_sq > first * first * (slots - 1):
            continue
        for tail in _descending_tuples(rest, rest_sq, slots - 1, first):
            yield (first,) + tail


def _distinct_arrangements(values):
    """All distinct orderings of a multiset (itertools.permutations dedup)."""
    seen = set()
    for p in itertools.permutations(values):
        if p not in seen:
            seen.add(p)
            yield p


def enumerate_negative_classes(
    lattice: IntersectionLattice,
    n: int,
    degree_cap: int,
    shape: str = "effective-shape",
) -> list[DivisorClass]:
    """All numerical (-n)-classes up to the degree cap, canonically sorted.

    ``shape`` is "effective-shape" (default) or "lattice-only"; see the
    module docstring.  Degree on a Hirzebruch lattice means the pair of
    ruling coefficients, both capped.

    TESTS::

        >>> lat = make_lattice(P2(), 3)
        >>> [str(c) for c in enumerate_negative_classes(lat, 1, 5)]
        ['e1', 'e2', 'e3', 'e0-e1-e2', 'e0-e1-e3', 'e0-e2-e3']
        >>> len(enumerate_negative_classes(make_lattice(P2(), 1), 1, 5))
        1
    """
    if n < 1:
        raise ValueError("self-intersection parameter n must be >= 1")
    if degree_cap < 0:
        raise ValueError("degree cap must be >= 0")
    if shape not in ("effective-shape", "lattice-only"):
        raise ValueError(f"unknown shape flag {shape!r}")
    if lattice.rank > MAX_RANK or degree_cap > MAX_CAP:
        raise ValueError(
            f"search budget exceeded: rank <= {MAX_RANK} and cap <= {MAX_CAP}"
        )
    if isinstance(lattice.base, P2):
        out = _enumerate_p2(lattice, n, degree_cap, shape)
        head = 1
    else:
        out = _enumerate_hirzebruch(lattice, n, degree_cap, shape)
        head = 2

    def canonical_key(c):
        tail = c.coeffs[head:]
        return (c.coeffs[:head], tuple((i, -v) for i, v in enumerate(tail) if v))

    out.sort(key=canonical_key)
    for c in out:
        assert c.self_intersection() == -n
        assert c.dot(lattice.canonical) == n - 2
    return out


def _exceptional_shape(arr) -> bool:
    """One coefficient -1, the rest 0 or 1 (e_center minus later points)."""
    return sorted(arr)[0] == -1 and all(a in (-1, 0, 1) for a in arr) and arr.count(-1) == 1


def _enumerate_p2(lattice, n, cap, shape):
    k = lattice.n_blowups
    out = []
    for d in range(cap + 1):
        s1 = 3 * d + n - 2
        s2 = d * d + n
        if d == 0:
            # classes supported on the exceptionals; signs may mix
            for arr in _signed_zero_degree(k, s1, s2):
                if shape == "lattice-only" or _exceptional_shape(list(arr)):
                    out.append(lattice.make_class((0,) + tuple(-a for a in arr)))
            continue
        if s1 < 0:
            continue
        for desc in _descending_tuples(s1, s2, k, s1):
            for arr in _distinct_arrangements(desc):
                out.append(lattice.make_class((d,) + tuple(-a for a in arr)))
    return out


def _signed_zero_degree(k, s1, s2):
    """Integer k-tuples with given sum and sum of squares, any signs."""
    if s2 < 0:
        return
    bound = int(s2**0.5)

    def rec(slots, total, total_sq, lo):
        # non-decreasing tuples with entries in [lo, bound]
        if slots == 0:
            if total == 0 and total_sq == 0:
                yield ()
            return
        for v in range(lo, bound + 1):
            if v * v > total_sq:
                continue
            if total - v > bound * (slots - 1):
                continue
            for tail in rec(slots - 1, total - v, total_sq - v * v, v):
                yield (v,) + tail

    for nondec in rec(k, s1, s2, -bound):
        yield from _distinct_arrangements(nondec)


def _enumerate_hirzebruch(lattice, n, cap, shape):
    b = lattice.base.b
    k = lattice.n_blowups
    out = []
    for beta in range(cap + 1):
        for alpha in range(cap + 1):
            if alpha == 0 and beta == 0:
                s1 = n - 2
                s2 = n
                for arr in _signed_zero_degree(k, s1, s2):
                    if shape == "lattice-only" or _exceptional_shape(list(arr)):
                        out.append(lattice.make_class((0, 0) + tuple(-a for a in arr)))
                continue
            s1 = n - 2 + 2 * alpha - (b - 2) * beta
            s2 = 2 * alpha * beta - b * beta * beta + n
            if s1 < 0 or s2 < 0:
                continue
            for desc in _descending_tuples(s1, s2, k, s1):
                for arr in _distinct_arrangements(desc):
                    out.append(
                        lattice.make_class((alpha, beta) + tuple(-a for a in arr))
                    )
    return out


@dataclass(frozen=True)
class PairingGrowthRow:
    cap: int
    class_count: int
    max_pairing: int


def exceptional_pairing_growth(caps, n_points: int = 9) -> list[PairingGrowthRow]:
    """Table of max E'.E over enumerated (-1)-classes E', for E the last point.

    For each cap (ascending), enumerates all numerical (-1)-classes with
    degree up to the cap and records how many there are and the largest
    pairing against the fixed exceptional class of the last blown-up point.
    For every ordered pair (A, B) of enumerated classes the difference
    identity (A - B)^2 = -2 - 2 A.B is asserted by direct evaluation.

    The max column never decreases, and over caps 1..8 it grows: there is
    no finite bound on how positively two (-1)-classes can meet once the
    ninth point makes the class family infinite.

    TESTS::

        >>> rows = exceptional_pairing_growth([1, 2, 3])
        >>> [(r.cap, r.max_pairing) for r in rows]
        [(1, 1), (2, 1), (3, 2)]
    """
    caps = list(caps)
    if caps != sorted(caps):
        raise ValueError("caps must be ascending")
    lattice = make_lattice(P2(), n_points)
    e_last = lattice.basis_class(lattice.basis_labels[-1])
    sign = np.array([1] + [-1] * n_points, dtype=np.int64)
    e_vec = np.array(e_last.coeffs, dtype=np.int64)
    rows = []
    for cap in caps:
        classes = enumerate_negative_classes(lattice, 1, cap)
        a = np.array([c.coeffs for c in classes], dtype=np.int64)
        pair_with_e = (a * sign) @ e_vec
        _assert_difference_identity(a, sign)
        rows.append(
            PairingGrowthRow(
                cap=cap,
                class_count=len(classes),
                max_pairing=int(pair_with_e.max()),
            )
        )
    return rows


def _assert_difference_identity(a: np.ndarray, sign: np.ndarray, chunk: int = 64):
    """(A - B)^2 = -2 - 2 A.B for all rows A, B, evaluated directly."""
    n = a.shape[0]
    a_signed = a * sign
    for lo in range(0, n, chunk):
        block = a[lo : lo + chunk]
        diffs = block[:, None, :] - a[None, :, :]
        lhs = (diffs * diffs * sign).sum(axis=-1)
        rhs = -2 - 2 * (block @ a_signed.T)
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            raise AssertionError(
                f"difference identity fails for pair ({lo + bad[0]}, {bad[1]})"
            )


@dataclass(frozen=True)
class BasicSurfaceReport:
    offenders: tuple[DivisorClass, ...]
    k_squared: int
    hypothesis_satisfied: bool
    k_squared_below_8: bool

    def summary(self) -> str:
        if self.hypothesis_satisfied:
            return (
                "no configured curve has self-intersection <= -3 "
                f"(K^2 = {self.k_squared})"
            )
        worst = min(c.self_intersection() for c in self.offenders)
        return (
            f"{len(self.offenders)} curve(s) with self-intersection <= -3 "
            f"(worst {worst}); the surface cannot be basic with these present"
        )


def basic_surface_check(classes) -> BasicSurfaceReport:
    """Flag configured curves with self-intersection <= -3.

    A surface dominating the plane cannot carry such rational curves among
    the curves contracted along the way, so any offender obstructs
    basicness; the K^2 < 8 side condition of the contraction argument is
    reported alongside.

    TESTS::

        >>> lat = make_lattice(P2(), 10)
        >>> sextic = lat.make_class([6] + [-2] * 10)
        >>> basic_surface_check([sextic]).hypothesis_satisfied
        False
    """
    classes = list(classes)
    if not classes:
        raise ValueError("need at least one class")
    lat0 = classes[0].lattice
    offenders = tuple(c for c in classes if c.self_intersection() <= -3)
    return BasicSurfaceReport(
        offenders=offenders,
        k_squared=lat0.k_squared,
        hypothesis_satisfied=not offenders,
        k_squared_below_8=lat0.k_squared < 8,
    )
