"""Integer intersection lattices of blown-up rational surfaces.

Two base surfaces are supported.  Blowing up n points on the projective
plane gives the odd unimodular lattice of signature (1, n) in the basis

    e0, e1, ..., en        e0^2 = 1,  ei^2 = -1,  mutually orthogonal

with canonical class K = -3 e0 + e1 + ... + en.  Blowing up n points on
the Hirzebruch surface F_b gives the basis

    f, s0, e1, ..., en     f^2 = 0,  f.s0 = 1,  s0^2 = -b,  ei^2 = -1

with K = -(b+2) f - 2 s0 + e1 + ... + en.  In both cases K^2 = (9 or 8) - n.

Every coefficient is an exact Python integer; a guard raises OverflowError
if any value leaves the signed 64-bit range, which the intended inputs
never approach.  Divisor classes are immutable and carry their lattice, so
mixing classes from different lattices is an error rather than a silent
mispairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

I64_MAX = 2**63 - 1


class LatticeMismatch(ValueError):
    """Raised when an operation combines classes from different lattices."""


def _check_i64(value: int) -> int:
    if value > I64_MAX or value < -I64_MAX - 1:
        raise OverflowError(f"value {value} leaves the signed 64-bit range")
    return value


@dataclass(frozen=True)
class P2:
    """The projective plane as a blow-up base."""

    def json_descriptor(self):
        return "P2"

    def __str__(self) -> str:
        return "P2"


@dataclass(frozen=True)
class Hirzebruch:
    """The Hirzebruch surface F_b as a blow-up base.  b >= 0; F_0 = P1 x P1."""

    b: int

    def __post_init__(self):
        if self.b < 0:
            raise ValueError(f"Hirzebruch parameter must be >= 0, got {self.b}")

    def json_descriptor(self):
        return {"Fb": self.b}

    def __str__(self) -> str:
        return f"F{self.b}"


Base = P2 | Hirzebruch


def base_from_json(descriptor) -> Base:
    if descriptor == "P2":
        return P2()
    if isinstance(descriptor, dict) and set(descriptor) == {"Fb"}:
        return Hirzebruch(int(descriptor["Fb"]))
    raise ValueError(f"not a base descriptor: {descriptor!r}")


@dataclass(frozen=True)
class IntersectionLattice:
    """Picard lattice of a base surface blown up at ``n_blowups`` points."""

    base: Base
    n_blowups: int
    basis_labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical_coeffs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    @property
    def canonical(self) -> "DivisorClass":
        return DivisorClass(self, self.canonical_coeffs)

    @property
    def k_squared(self) -> int:
        return pair(self.canonical, self.canonical)

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (0,) * self.rank)

    def basis_class(self, label: str) -> "DivisorClass":
        i = self.basis_labels.index(label)
        return self.unit(i)

    def unit(self, i: int) -> "DivisorClass":
        coeffs = [0] * self.rank
        coeffs[i] = 1
        return DivisorClass(self, tuple(coeffs))

    def make_class(self, coeffs) -> "DivisorClass":
        return DivisorClass(self, tuple(int(c) for c in coeffs))

    def json_descriptor(self) -> dict:
        return {"base": self.base.json_descriptor(), "n": self.n_blowups}

    def __repr__(self) -> str:
        return f"IntersectionLattice({self.base}, n={self.n_blowups})"


def make_lattice(base: Base, n_blowups: int, point_labels=None) -> IntersectionLattice:
    """Build the intersection lattice of ``base`` blown up at n points.

    TESTS::

        >>> make_lattice(P2(), 0).k_squared
        9
        >>> make_lattice(P2(), 10).k_squared
        -1
        >>> make_lattice(Hirzebruch(2), 0).k_squared
        8
    """
    if n_blowups < 0:
        raise ValueError("number of blow-ups must be >= 0")
    if point_labels is None:
        point_labels = tuple(f"e{i}" for i in range(1, n_blowups + 1))
    else:
        point_labels = tuple(point_labels)
        if len(point_labels) != n_blowups:
            raise ValueError("point_labels length must equal n_blowups")
    if isinstance(base, P2):
        labels = ("e0",) + point_labels
        head = [[1]]
        canonical = (-3,) + (1,) * n_blowups
    else:
        labels = ("f", "s0") + point_labels
        head = [[0, 1], [1, -base.b]]
        canonical = (-(base.b + 2), -2) + (1,) * n_blowups
    rank = len(labels)
    gram = [[0] * rank for _ in range(rank)]
    for i, row in enumerate(head):
        for j, v in enumerate(row):
            gram[i][j] = v
    for i in range(len(head), rank):
        gram[i][i] = -1
    return IntersectionLattice(
        base=base,
        n_blowups=n_blowups,
        basis_labels=labels,
        gram=tuple(tuple(r) for r in gram),
        canonical_coeffs=canonical,
    )


def lattice_from_json(descriptor: dict) -> IntersectionLattice:
    return make_lattice(base_from_json(descriptor["base"]), int(descriptor["n"]))


@dataclass(frozen=True)
class DivisorClass:
    """An element of an intersection lattice in its fixed basis."""

    lattice: IntersectionLattice
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.lattice.rank:
            raise ValueError(
                f"expected {self.lattice.rank} coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            _check_i64(c)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_lattice(self, other)
        return DivisorClass(
            self.lattice,
            tuple(_check_i64(a + b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _same_lattice(self, other)
        return DivisorClass(
            self.lattice,
            tuple(_check_i64(a - b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(self.lattice, tuple(_check_i64(k * a) for a in self.coeffs))

    __mul__ = __rmul__

    def dot(self, other: "DivisorClass") -> int:
        return pair(self, other)

    def self_intersection(self) -> int:
        return pair(self, self)

    def coefficient(self, label: str) -> int:
        return self.coeffs[self.lattice.basis_labels.index(label)]

    def to_json(self) -> dict:
        return {"lattice": self.lattice.json_descriptor(), "coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        terms = []
        for c, label in zip(self.coeffs, self.lattice.basis_labels):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = abs(c)
            terms.append(f"{sign}{'' if mag == 1 else mag}{label}")
        return "".join(terms) if terms else "0"


def class_from_json(data: dict) -> DivisorClass:
    lat = lattice_from_json(data["lattice"])
    return lat.make_class(data["coeffs"])


def _same_lattice(a: DivisorClass, b: DivisorClass) -> None:
    if a.lattice != b.lattice:
        raise LatticeMismatch(
            f"classes live in different lattices: {a.lattice!r} vs {b.lattice!r}"
        )


def pair(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection pairing a.b in the lattice both classes share.

    TESTS::

        >>> lat = make_lattice(P2(), 3)
        >>> a = lat.make_class([1, -1, -1, 0]); b = lat.make_class([1, -1, 0, -1])
        >>> pair(a, b)
        0
    """
    _same_lattice(a, b)
    gram = a.lattice.gram
    total = 0
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        row = gram[i]
        s = 0
        for j, bj in enumerate(b.coeffs):
            if bj:
                s += row[j] * bj
        total += ai * s
    return _check_i64(total)


def arithmetic_genus(c: DivisorClass) -> int:
    """Numerical arithmetic genus (C^2 + K.C)/2 + 1 of a curve class.

    The adjunction numerator is always even on these lattices; a parity
    failure means the class does not come from the lattice and is an error.

    TESTS::

        >>> lat = make_lattice(P2(), 0)
        >>> arithmetic_genus(lat.make_class([3]))
        1
        >>> arithmetic_genus(lat.make_class([6]))
        10
    """
    num = pair(c, c) + pair(c, c.lattice.canonical)
    if num % 2 != 0:
        raise ValueError(f"adjunction numerator {num} is odd for {c}")
    return num // 2 + 1


def riemann_roch_chi(d: DivisorClass) -> int:
    """Euler characteristic 1 + (D^2 - D.K)/2 on a rational surface.

    TESTS::

        >>> lat = make_lattice(P2(), 10)
        >>> riemann_roch_chi(-2 * lat.canonical)
        -2
    """
    num = pair(d, d) - pair(d, d.lattice.canonical)
    if num % 2 != 0:
        raise ValueError(f"Riemann-Roch numerator {num} is odd for {d}")
    return 1 + num // 2


def reflect(x: DivisorClass, root: DivisorClass) -> DivisorClass:
    """Reflection of x in a (-2)-class: x + (x.root) root.

    An involutive isometry; fixes the canonical class iff root.K = 0.

    TESTS::

        >>> lat = make_lattice(P2(), 3)
        >>> root = lat.make_class([1, -1, -1, -1])
        >>> reflect(lat.make_class([1, 0, 0, 0]), root).coeffs
        (2, -1, -1, -1)
    """
    if pair(root, root) != -2:
        raise ValueError(f"reflection root must have self-intersection -2, got {pair(root, root)}")
    return x + pair(x, root) * root


class CurveShape(Enum):
    SMOOTH_RATIONAL = "smooth-rational"
    GENUS1_IRREDUCIBLE = "genus1-irreducible"


def special_h0(l: DivisorClass, shape: CurveShape) -> int:
    """h^0 of the line bundle O(L) restricted by a known curve shape.

    A smooth rational curve with L^2 >= 0 carries h^0 = 2 + L^2; an
    irreducible curve of arithmetic genus one with L^2 >= 1 carries
    h^0 = L^2 + 1.

    TESTS::

        >>> lat = make_lattice(P2(), 1)
        >>> special_h0(lat.make_class([1, -1]), CurveShape.SMOOTH_RATIONAL)
        2
        >>> special_h0(lat.make_class([3, 0]), CurveShape.GENUS1_IRREDUCIBLE)
        10
    """
    sq = pair(l, l)
    if shape is CurveShape.SMOOTH_RATIONAL:
        if sq < 0:
            raise ValueError(f"smooth rational shape needs L^2 >= 0, got {sq}")
        return 2 + sq
    if shape is CurveShape.GENUS1_IRREDUCIBLE:
        if sq < 1:
            raise ValueError(f"genus-one shape needs L^2 >= 1, got {sq}")
        if arithmetic_genus(l) != 1:
            raise ValueError(
                f"genus-one shape needs arithmetic genus 1, got {arithmetic_genus(l)}"
            )
        return sq + 1
    raise ValueError(f"unknown shape {shape!r}")


def canonical_orthogonal_basis(lat: IntersectionLattice) -> list[DivisorClass]:
    """Integer basis of the sublattice K^perp (rank = rank - 1).

    Computed as the integer kernel of the pairing row (K.b_i)_i, so the
    basis is saturated: any lattice vector orthogonal to K is an integer
    combination of the returned classes.
    """
    row = [pair(lat.canonical, lat.unit(i)) for i in range(lat.rank)]
    kernel = _integer_kernel_of_row(row)
    return [lat.make_class(v) for v in kernel]


def _integer_kernel_of_row(row: list[int]) -> list[list[int]]:
    # Column-reduce (g | I) so that g U = (d, 0, ..., 0); kernel = columns 2..n of U.
    n = len(row)
    g = list(row)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def colop(dst, src, q):
        g[dst] -= q * g[src]
        for r in range(n):
            u[r][dst] -= q * u[r][src]

    def colswap(i, j):
        g[i], g[j] = g[j], g[i]
        for r in range(n):
            u[r][i], u[r][j] = u[r][j], u[r][i]

    while True:
        nonzero = [j for j in range(1, n) if g[j] != 0]
        if g[0] == 0 and nonzero:
            colswap(0, nonzero[0])
            continue
        if not nonzero:
            break
        for j in nonzero:
            q = g[j] // g[0]
            colop(j, 0, q)
        nonzero = [j for j in range(1, n) if g[j] != 0]
        if nonzero:
            jmin = min(nonzero, key=lambda j: abs(g[j]))
            colswap(0, jmin)
    if all(v == 0 for v in g):
        return [[u[r][j] for r in range(n)] for j in range(n)]
    return [[u[r][j] for r in range(n)] for j in range(1, n)]
