from fractions import Fraction

import pytest

from descentkit.analysis import convergents
from descentkit.constructions import (
    SQRT2,
    SQRT3,
    SQRT5,
    SQRT6,
    FigureKind,
    build_figure,
    expected_regions,
    parse_kind,
    pentagon_angle_chase,
    pentagon_lemma_side,
    pentagon_ray_check,
    side_formulas,
    triangular_kind,
    verify_figure,
)
from descentkit.exact import QuadExt
from descentkit.geometry import context, shoelace_area

KINDS = [SQRT2, SQRT3, SQRT5, SQRT6, triangular_kind(2), triangular_kind(3), triangular_kind(4)]


def domain_convergents(kind, limit):
    pairs = convergents(kind.k, 40).pairs
    return [(a, b) for a, b in pairs if a <= limit and b <= limit and kind.in_domain(a, b)]


def test_kind_basics():
    assert [k.k for k in KINDS] == [2, 3, 5, 6, 3, 6, 10]
    assert [k.small_count for k in KINDS] == [2, 3, 5, 6, 3, 6, 10]
    assert parse_kind("tri4") == triangular_kind(4)
    assert parse_kind("sqrt6") == SQRT6
    with pytest.raises(ValueError):
        triangular_kind(8)
    with pytest.raises(ValueError):
        FigureKind("sqrt7")


def test_figure_shapes():
    for kind in KINDS:
        a, b = domain_convergents(kind, 100)[1]
        fig = build_figure(kind, a, b)
        assert len(fig.smalls) == kind.small_count
        assert all(len(p) == kind.sides for p in fig.smalls + [fig.big])


@pytest.mark.parametrize(
    "kind, a, b",
    [(SQRT2, 10, 3), (SQRT2, 5, 5), (SQRT3, 7, 3), (SQRT5, 11, 4), (SQRT5, 7, 4), (triangular_kind(4), 4, 2), (triangular_kind(4), 9, 2)],
)
def test_out_of_range_rejected(kind, a, b):
    with pytest.raises(ValueError, match="valid range"):
        build_figure(kind, a, b)


def overlap_sides(fig, triples=False):
    rep = verify_figure(fig)
    regs = rep.coverage.regions
    polys = list(regs.triples.values()) if triples else regs.exact_doubles()
    return [s for p in polys for s in p.side_lengths()]


def test_sqrt3_sides():
    fig = build_figure(SQRT3, 7, 4)
    sides = overlap_sides(fig)
    assert len(sides) == 9 and all(abs(s - 1) < 1e-30 for s in sides)  # 2b - a
    rep = verify_figure(fig)
    # middle uncovered triangle of side 2a - 3b = 2
    c = SQRT3.shape_constant()
    assert abs(rep.uncovered - c * 4) < 1e-30


def test_sqrt6_sides():
    fig = build_figure(triangular_kind(3), 5, 2)
    assert all(abs(s - Fraction(1, 2).__float__()) < 1e-30 for s in overlap_sides(fig))
    assert all(abs(s - 0.5) < 1e-30 for s in overlap_sides(fig, triples=True))
    rep = verify_figure(fig)
    c = SQRT6.shape_constant()
    assert abs(rep.uncovered - 3 * c) < 1e-30  # three cells of side a - 2b = 1


def test_sqrt2_overlap():
    fig = build_figure(SQRT2, 7, 5)
    assert all(abs(s - 3) < 1e-30 for s in overlap_sides(fig))


def test_verify_examples():
    rep = verify_figure(build_figure(triangular_kind(3), 5, 2))
    c = SQRT6.shape_constant()
    assert rep.passed
    assert abs(rep.excess - 2 * c) < 1e-30
    assert abs(rep.residual - c * (25 - 24)) < 1e-30

    rep = verify_figure(build_figure(SQRT2, 3, 2))
    assert rep.passed
    assert abs(rep.excess - 1) < 1e-30 and abs(rep.uncovered - 2) < 1e-30

    rep = verify_figure(build_figure(SQRT5, 9, 4))
    assert rep.passed
    assert abs(rep.residual - SQRT5.shape_constant()) < 1e-9


@pytest.mark.parametrize("kind", KINDS, ids=str)
def test_all_identities_on_convergents(kind):
    pairs = domain_convergents(kind, 10**3)
    assert len(pairs) >= 3
    for a, b in pairs:
        rep = verify_figure(build_figure(kind, a, b))
        assert rep.passed, (kind.name, a, b, rep.failures())


@pytest.mark.parametrize("kind", KINDS, ids=str)
def test_pell_residual_to_1e4(kind):
    C = kind.shape_constant()
    for a, b in domain_convergents(kind, 10**4):
        rep = verify_figure(build_figure(kind, a, b))
        rhs = C * (a * a - kind.k * b * b)
        assert abs(rep.residual - rhs) <= 1e-9 * abs(rhs)


@pytest.mark.parametrize("kind", [SQRT2, SQRT3, SQRT6, triangular_kind(4)], ids=str)
def test_measured_overlap_sides_match_t(kind):
    for a, b in domain_convergents(kind, 10**3):
        t = side_formulas(kind).t(a, b)
        fig = build_figure(kind, a, b)
        for s in overlap_sides(fig) + overlap_sides(fig, triples=True):
            assert abs(s - float(t)) <= 1e-9 * float(t)


def test_non_solution_points_in_domain():
    # identities hold for any in-range pair, not only convergents
    for kind, a, b in [(SQRT2, 13, 8), (SQRT5, 11, 5), (triangular_kind(3), 11, 5), (triangular_kind(4), 29, 9)]:
        assert verify_figure(build_figure(kind, a, b)).passed


def test_report_dict():
    d = verify_figure(build_figure(SQRT2, 7, 5)).to_dict()
    assert d["kind"] == "sqrt2" and d["excess"] == 9.0 and d["uncovered"] == 8.0
    assert {c["name"] for c in d["identities"]} == {"accounting", "pell_residual", "excess_cells", "uncovered_cells"}


def test_expected_counts():
    for n in range(2, 20):
        if n == 8:
            continue
        e = expected_regions(triangular_kind(n))
        assert (e.doubly_count, e.triply_count, e.uncovered_count) == (3 * (n - 1), (n - 2) * (n - 1) // 2, (n - 1) * n // 2)
        # (n-1)(n+1) coverings of the t-cells in total
        assert e.doubly_count + 2 * e.triply_count == (n - 1) * (n + 1)


def test_side_formulas():
    sf = side_formulas(triangular_kind(3))
    assert str(sf.t) == "(-a+3b)/2" and str(sf.s) == "a-2b"
    sf = side_formulas(SQRT3)
    assert (sf.t.ca, sf.t.cb, sf.s.ca, sf.s.cb) == (-1, 2, 2, -3)
    sf = side_formulas(triangular_kind(4))
    assert (sf.t.ca, sf.t.cb) == (Fraction(-1, 3), Fraction(4, 3))
    assert (sf.s.ca, sf.s.cb) == (Fraction(2, 3), Fraction(-5, 3))
    for n in range(2, 101):
        if n in (8, 49):
            continue
        sf = side_formulas(triangular_kind(n))
        assert sf.s(0, 1) == 1 - 2 * sf.t(0, 1) and sf.s(1, 0) == -2 * sf.t(1, 0)
    assert str(side_formulas(SQRT2).t) == "-a+2b"
    assert str(side_formulas(SQRT5).s) == "-2a+5b"


def test_pentagon_lemma():
    x = pentagon_lemma_side()
    r5 = QuadExt.sqrt(5)
    assert x == r5 - 2
    c = QuadExt(5, Fraction(-1, 4), Fraction(1, 4))
    assert 4 * c * c + 2 * c - 1 == 0


def test_angle_chase():
    chase = dict(pentagon_angle_chase())
    assert chase["pentagon angle sum"] == 3
    assert chase["edge triangle base angle"] == Fraction(2, 5)
    assert chase["small pentagon top angle"] == Fraction(3, 5)


def test_pentagon_ray_check():
    r = pentagon_ray_check()
    assert r.passed()
    assert len(r.kite_short_sides) == 10
    ctx = context()
    assert abs(r.t_side - (ctx.sqrt(5) - 2)) < 1e-35


def test_sqrt5_kites_are_adjacent_pairs():
    for a, b in domain_convergents(SQRT5, 10**4):
        rep = verify_figure(build_figure(SQRT5, a, b))
        assert sorted(rep.coverage.regions.pairs) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        assert not rep.coverage.regions.triples
        assert all(shoelace_area(k) > 0 for k in rep.coverage.regions.pairs.values())
