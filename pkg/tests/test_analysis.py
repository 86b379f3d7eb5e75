from fractions import Fraction
from math import isqrt

import pytest

from descentkit.analysis import (
    brute_force_no_solution,
    convergents,
    descent_applicable,
    descent_applicable_exact,
    format_survey,
    run_survey,
    square_triangular,
)
from descentkit.descent import descend_sequence, form_multiplier, get_map, map_triangular


def test_descent_applicable_examples():
    assert descent_applicable(4) is True
    assert descent_applicable(5) is False
    assert descent_applicable(2) is True
    with pytest.raises(ValueError):
        descent_applicable(8)


def test_integer_and_field_tests_agree():
    for n in range(2, 1001):
        if square_triangular(n) is not None:
            continue
        assert descent_applicable(n) == descent_applicable_exact(n) == (n <= 4)


def test_square_triangular_examples():
    assert square_triangular(49) == 35 and 49 * 50 // 2 == 7**2 * 5**2
    assert square_triangular(8) == 6
    assert square_triangular(3) is None


def pell_square_triangular(limit):
    # T_n = m^2  <=>  (2n+1)^2 - 8 m^2 = 1; walk the solutions of x^2 - 8y^2 = 1
    out, x, y = [], 3, 1
    while (x - 1) // 2 <= limit:
        out.append((x - 1) // 2)
        x, y = 3 * x + 8 * y, x + 3 * y
    return out


def test_square_triangular_against_pell():
    scan = [n for n in range(1, 10**5 + 1) if square_triangular(n) is not None]
    assert scan == pell_square_triangular(10**5)
    assert scan[:5] == [1, 8, 49, 288, 1681]


def test_survey_small():
    rows = run_survey(4)
    assert [r.n for r in rows] == [2, 3, 4]
    assert all(r.descent_applicable for r in rows)
    assert rows[0].multiplier_c == 1


def test_survey_50():
    rows = run_survey(50)
    assert {r.n: r.is_square for r in rows if r.is_square is not None} == {8: 6, 49: 35}
    assert [r.n for r in rows if r.descent_applicable] == [2, 3, 4]
    for r in rows:
        assert r.T_n == r.n * (r.n + 1) // 2
        assert r.multiplier_c == Fraction(r.n * (r.n - 1), 2)
        if r.is_square is None:
            assert r.multiplier_c == form_multiplier(map_triangular(r.n))
            assert r.lam is not None
        else:
            assert r.lam is None and r.descent_applicable is None
    text = format_survey(rows)
    assert "6^2" in text and "35^2" in text
    assert rows[0].to_dict()["lambda"] == "0.2679491924"


def test_survey_bad_bound():
    with pytest.raises(ValueError):
        run_survey(1)


def test_oracle():
    assert brute_force_no_solution(2, 10**5)
    v = brute_force_no_solution(9, 1)
    assert not v and v.witness == (3, 1)
    assert brute_force_no_solution(10, 10**5).no_solution
    assert brute_force_no_solution(36, 50).witness == (6, 1)


def test_no_positive_solution_for_shipped_forms():
    for k in (2, 3, 5, 6, 10, 15, 21, 28):
        assert brute_force_no_solution(k, 10**4)


def test_convergent_examples():
    assert convergents(2, 4).pairs == [(1, 1), (3, 2), (7, 5), (17, 12)]
    assert convergents(5, 2).pairs == [(2, 1), (9, 4)]
    assert convergents(6, 2).pairs == [(2, 1), (5, 2)]
    with pytest.raises(ValueError):
        convergents(9, 3)
    with pytest.raises(ValueError):
        convergents(2, 0)


@pytest.mark.parametrize("k", [2, 3, 5, 6, 7, 10, 13, 15, 21, 28, 61, 94])
def test_convergent_quality(k):
    pairs = convergents(k, 25).pairs
    r = isqrt(k)
    bound = 2 * (r if r * r == k else r + 1) + 1
    bs = [b for _, b in pairs]
    # b_0 = b_1 = 1 when the first partial quotient after the integer part is 1
    assert bs[0] <= bs[1] and all(x < y for x, y in zip(bs[1:], bs[2:]))
    for a, b in pairs:
        assert abs(a * a - k * b * b) < bound


@pytest.mark.parametrize("name", ["sqrt2", "sqrt3", "sqrt5", "sqrt6", "tri2", "tri3", "tri4", "tri5", "tri7"])
def test_trajectory_geometric_law(name):
    m = get_map(name)
    c = form_multiplier(m)
    for a, b in convergents(m.k, 8).pairs:
        t = descend_sequence(m, a, b, 12)
        v0 = t.steps[0][2]
        assert t.form_values() == [c**i * v0 for i in range(len(t.steps))]
