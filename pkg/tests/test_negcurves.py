"""Bounded enumeration of negative classes and the pairing-growth table."""

import pytest

from coble.lattice import P2, Hirzebruch, make_lattice
from coble.negcurves import (
    basic_surface_check,
    enumerate_negative_classes,
    exceptional_pairing_growth,
)

# number of (-1)-curves on the plane blown up in n general points
DEL_PEZZO_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


def test_del_pezzo_minus_one_counts():
    # every (-1)-class on these surfaces has degree at most 6, so a cap of
    # 7 sees the whole list and nothing new appears at the margin
    for n, expected in DEL_PEZZO_COUNTS.items():
        lat = make_lattice(P2(), n)
        classes = enumerate_negative_classes(lat, 1, 7)
        assert len(classes) == expected, f"n={n}"
        assert len(set(classes)) == expected


def test_small_cases_explicit():
    lat = make_lattice(P2(), 3)
    assert [str(c) for c in enumerate_negative_classes(lat, 1, 5)] == [
        "e1",
        "e2",
        "e3",
        "e0-e1-e2",
        "e0-e1-e3",
        "e0-e2-e3",
    ]
    # roots (square -2, canonical degree 0) on four points: 6 differences
    # e_i - e_j with i < j both signs, 4 classes e0 - e_i - e_j - e_k
    roots = enumerate_negative_classes(make_lattice(P2(), 4), 2, 5)
    assert len(roots) == 12 + 4
    assert all(c.self_intersection() == -2 for c in roots)


def test_shape_flag_filters_degree_zero():
    # square -4 classes of degree 0 on four points: the effective shapes
    # are e_a - e_b - e_c - e_d; the lattice also contains -2 e_a
    lat = make_lattice(P2(), 4)
    eff = enumerate_negative_classes(lat, 4, 0)
    full = enumerate_negative_classes(lat, 4, 0, shape="lattice-only")
    assert len(eff) == 4
    assert len(full) == len(eff) + 4
    assert set(eff) <= set(full)


def test_hirzebruch_negative_section():
    # on the degree-2 scroll with no blow-ups the only numerical (-2) is s0
    lat = make_lattice(Hirzebruch(2), 0)
    classes = enumerate_negative_classes(lat, 2, 5)
    assert [str(c) for c in classes] == ["s0"]
    # after one blow-up on the section, f - e and s0 variants appear
    lat1 = make_lattice(Hirzebruch(2), 1)
    ones = enumerate_negative_classes(lat1, 1, 5)
    assert lat1.basis_class(lat1.basis_labels[-1]) in ones
    assert all(c.dot(lat1.canonical) == -1 for c in ones)


def test_budget_and_argument_guards():
    lat = make_lattice(P2(), 3)
    with pytest.raises(ValueError, match="n must be >= 1"):
        enumerate_negative_classes(lat, 0, 5)
    with pytest.raises(ValueError, match="cap must be >= 0"):
        enumerate_negative_classes(lat, 1, -1)
    with pytest.raises(ValueError, match="unknown shape"):
        enumerate_negative_classes(lat, 1, 5, shape="everything")
    with pytest.raises(ValueError, match="budget"):
        enumerate_negative_classes(make_lattice(P2(), 15), 1, 5)
    with pytest.raises(ValueError, match="budget"):
        enumerate_negative_classes(lat, 1, 21)


def test_pairing_growth_table():
    rows = exceptional_pairing_growth([1, 2, 3])
    assert [(r.cap, r.max_pairing) for r in rows] == [(1, 1), (2, 1), (3, 2)]
    counts = [r.class_count for r in rows]
    assert counts == sorted(counts) and counts[0] < counts[-1]
    with pytest.raises(ValueError, match="ascending"):
        exceptional_pairing_growth([3, 1])


def test_basic_surface_check():
    lat = make_lattice(P2(), 10)
    sextic = lat.make_class([6] + [-2] * 10)
    report = basic_surface_check([sextic])
    assert not report.hypothesis_satisfied
    assert report.offenders == (sextic,)
    assert report.k_squared == -1 and report.k_squared_below_8
    assert "cannot be basic" in report.summary()
    clean = basic_surface_check([lat.basis_class("e1"), lat.make_class([1, -1, -1] + [0] * 8)])
    assert clean.hypothesis_satisfied and clean.offenders == ()
    assert "K^2 = -1" in clean.summary()
    with pytest.raises(ValueError):
        basic_surface_check([])
