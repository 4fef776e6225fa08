"""Intersection lattice arithmetic against hand-checked oracles."""

import random
from fractions import Fraction

import pytest

from coble.lattice import (
    CurveShape,
    Hirzebruch,
    LatticeMismatch,
    P2,
    arithmetic_genus,
    canonical_orthogonal_basis,
    class_from_json,
    lattice_from_json,
    make_lattice,
    pair,
    reflect,
    riemann_roch_chi,
    special_h0,
)


def test_p2_gram_and_canonical():
    lat = make_lattice(P2(), 3)
    e0, e1, e2, e3 = (lat.unit(i) for i in range(4))
    assert pair(e0, e0) == 1
    assert all(pair(e, e) == -1 for e in (e1, e2, e3))
    assert all(pair(a, b) == 0 for a, b in [(e0, e1), (e0, e2), (e1, e2), (e2, e3)])
    assert lat.canonical.coeffs == (-3, 1, 1, 1)
    assert lat.k_squared == 9 - 3


def test_hirzebruch_gram_and_canonical():
    for b in (0, 1, 2, 3, 5):
        lat = make_lattice(Hirzebruch(b), 2)
        f, s0 = lat.unit(0), lat.unit(1)
        assert pair(f, f) == 0
        assert pair(f, s0) == 1
        assert pair(s0, s0) == -b
        k = lat.canonical
        assert k.coeffs[:2] == (-(b + 2), -2)
        assert k.coeffs[2:] == (1, 1)
        assert lat.k_squared == 8 - 2
        assert pair(k, k) == 8 - 2


def test_negative_hirzebruch_rejected():
    with pytest.raises(ValueError):
        Hirzebruch(-1)


def test_pair_bilinear_symmetric():
    rng = random.Random(7)
    lat = make_lattice(P2(), 6)
    for _ in range(50):
        a = lat.make_class([rng.randint(-9, 9) for _ in range(lat.rank)])
        b = lat.make_class([rng.randint(-9, 9) for _ in range(lat.rank)])
        c = lat.make_class([rng.randint(-9, 9) for _ in range(lat.rank)])
        assert pair(a, b) == pair(b, a)
        assert pair(a + b, c) == pair(a, c) + pair(b, c)
        assert pair(3 * a - 2 * b, c) == 3 * pair(a, c) - 2 * pair(b, c)


def test_cross_lattice_pairing_rejected():
    a = make_lattice(P2(), 2).make_class([1, 0, 0])
    b = make_lattice(P2(), 3).make_class([1, 0, 0, 0])
    with pytest.raises(LatticeMismatch):
        pair(a, b)
    with pytest.raises(LatticeMismatch):
        a + b


def test_plane_curve_genus_oracles():
    lat = make_lattice(P2(), 10)

    def plane(d, mults=()):
        coeffs = [d] + [-m for m in mults] + [0] * (10 - len(mults))
        return lat.make_class(coeffs)

    assert arithmetic_genus(plane(1)) == 0
    assert arithmetic_genus(plane(2)) == 0
    assert arithmetic_genus(plane(3)) == 1
    assert arithmetic_genus(plane(4)) == 3
    assert arithmetic_genus(plane(5)) == 6
    # ten-node sextic: the classical branch curve
    assert arithmetic_genus(plane(6, [2] * 10)) == 0
    # six-node quintic
    assert arithmetic_genus(plane(5, [2] * 6)) == 0
    # exceptional curve
    assert arithmetic_genus(lat.unit(1)) == 0


def test_hirzebruch_genus_oracles():
    lat = make_lattice(Hirzebruch(2), 0)
    fiber = lat.make_class([1, 0])
    section = lat.make_class([2, 1])
    assert arithmetic_genus(fiber) == 0
    assert arithmetic_genus(section) == 0
    assert arithmetic_genus(lat.make_class([0, 1])) == 0
    # anticanonical members have genus 1; p_a(-2K) = K^2 + 1
    assert arithmetic_genus(-1 * lat.canonical) == 1
    assert arithmetic_genus(-2 * lat.canonical) == lat.k_squared + 1
    p2 = make_lattice(P2(), 9)
    assert arithmetic_genus(-1 * p2.canonical) == 1
    assert arithmetic_genus(-2 * p2.canonical) == 1  # K^2 = 0 here


def test_riemann_roch_oracles():
    lat = make_lattice(P2(), 0)
    e0 = lat.unit(0)
    assert riemann_roch_chi(lat.zero()) == 1
    assert riemann_roch_chi(e0) == 3
    assert riemann_roch_chi(2 * e0) == 6
    assert riemann_roch_chi(3 * e0) == 10
    # chi(-K) = 1 + K^2 in general
    for n in (0, 5, 9, 12):
        latn = make_lattice(P2(), n)
        assert riemann_roch_chi(-1 * latn.canonical) == 1 + latn.k_squared


def test_reflect_is_involutive_isometry():
    rng = random.Random(11)
    lat = make_lattice(P2(), 9)
    roots = [
        lat.make_class([0, 1, -1] + [0] * 7),
        lat.make_class([1, -1, -1, -1] + [0] * 6),
        lat.make_class([2, -1, -1, -1, -1, -1, -1, 0, 0, 0]),
    ]
    for root in roots:
        assert pair(root, root) == -2
        assert pair(root, lat.canonical) == 0
    for _ in range(200):
        root = rng.choice(roots)
        x = lat.make_class([rng.randint(-8, 8) for _ in range(lat.rank)])
        y = lat.make_class([rng.randint(-8, 8) for _ in range(lat.rank)])
        rx, ry = reflect(x, root), reflect(y, root)
        assert reflect(rx, root) == x
        assert pair(rx, ry) == pair(x, y)
        assert reflect(lat.canonical, root) == lat.canonical


def test_reflect_requires_minus_two_root():
    lat = make_lattice(P2(), 1)
    with pytest.raises(ValueError):
        reflect(lat.unit(0), lat.unit(1))


def test_canonical_orthogonal_basis_spans_k_perp():
    for base, n in ((P2(), 9), (P2(), 4), (Hirzebruch(2), 3)):
        lat = make_lattice(base, n)
        basis = canonical_orthogonal_basis(lat)
        assert len(basis) == lat.rank - 1
        for v in basis:
            assert pair(v, lat.canonical) == 0
        # linear independence over Q: fraction-free row reduction
        rows = [[Fraction(c) for c in v.coeffs] for v in basis]
        rank = 0
        for col in range(lat.rank):
            piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            lead = rows[rank][col]
            for r in range(len(rows)):
                if r != rank and rows[r][col]:
                    factor = rows[r][col] / lead
                    rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
        assert rank == len(basis)


def test_special_h0_shapes():
    lat = make_lattice(P2(), 1)
    assert special_h0(lat.make_class([1, -1]), CurveShape.SMOOTH_RATIONAL) == 2
    assert special_h0(lat.make_class([1, 0]), CurveShape.SMOOTH_RATIONAL) == 3
    p2 = make_lattice(P2(), 0)
    assert special_h0(p2.make_class([3]), CurveShape.GENUS1_IRREDUCIBLE) == 10
    with pytest.raises(ValueError):
        special_h0(lat.make_class([0, 1]), CurveShape.GENUS1_IRREDUCIBLE)


def test_json_round_trips():
    lat = make_lattice(Hirzebruch(3), 2)
    cls = lat.make_class([4, 1, -2, 0])
    again = class_from_json(cls.to_json())
    assert again == cls
    assert lattice_from_json(lat.json_descriptor()) == lat
