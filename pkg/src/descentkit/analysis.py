"""Triangular-number survey, brute-force oracle and convergent generator."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .descent import form_multiplier, is_square, map_triangular, triangular
from .exact import QuadExt


def square_triangular(n: int) -> int | None:
    """sqrt(T_n) when T_n is a perfect square, else None."""
    t = triangular(n)
    r = isqrt(t)
    return r if r * r == t else None


def descent_applicable(n: int) -> bool:
    """Whether the triangular map shrinks b on the ray, i.e. n - sqrt(T_n) < 1.

    Both n - 1 and sqrt(T_n) are nonnegative, so the inequality squares to
    (n-1)^2 < T_n, or 2(n-1)^2 < n(n+1) in integers.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if square_triangular(n) is not None:
        raise ValueError(f"T_{n} = {triangular(n)} is a perfect square; descent is ill-posed")
    return 2 * (n - 1) ** 2 < n * (n + 1)


def descent_applicable_exact(n: int) -> bool:
    """The same test decided by sign in Q(sqrt T_n)."""
    lam = n - QuadExt.sqrt(triangular(n))
    return (lam - 1).sign() < 0


@dataclass(frozen=True)
class SurveyRow:
    n: int
    T_n: int
    is_square: int | None
    descent_applicable: bool | None
    multiplier_c: Fraction
    lam: QuadExt | None

    def to_dict(self) -> dict:
        c = self.multiplier_c
        return {
            "n": self.n,
            "T_n": self.T_n,
            "is_square": self.is_square,
            "descent_applicable": self.descent_applicable,
            "multiplier_c": f"{c.numerator}/{c.denominator}",
            "lambda": None if self.lam is None else self.lam.to_decimal(10),
        }


def run_survey(n_max: int) -> list[SurveyRow]:
    """One row per n in 2..n_max.

    Square rows carry no lambda and no applicability verdict.  The multiplier
    n(n-1)/2 is cross-checked against the symbolic expansion of the map.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    rows = []
    for n in range(2, n_max + 1):
        t = triangular(n)
        root = square_triangular(n)
        c = Fraction(n * (n - 1), 2)
        if root is None:
            expanded = form_multiplier(map_triangular(n))
            if expanded != c:
                raise AssertionError(f"n={n}: expansion gives c={expanded}, closed form {c}")
            rows.append(SurveyRow(n, t, None, descent_applicable(n), c, n - QuadExt.sqrt(t)))
        else:
            rows.append(SurveyRow(n, t, root, None, c, None))
    return rows


def format_survey(rows: list[SurveyRow]) -> str:
    header = f"{'n':>5} {'T_n':>9} {'square':>7} {'descent':>8} {'c':>8} {'lambda':>14}"
    lines = [header, "-" * len(header)]
    for r in rows:
        sq = "-" if r.is_square is None else f"{r.is_square}^2"
        ok = "n/a" if r.descent_applicable is None else ("yes" if r.descent_applicable else "no")
        lam = "-" if r.lam is None else r.lam.to_decimal(10)
        lines.append(f"{r.n:>5} {r.T_n:>9} {sq:>7} {ok:>8} {str(r.multiplier_c):>8} {lam:>14}")
    return "\n".join(lines)


@dataclass(frozen=True)
class OracleVerdict:
    k: int
    b_max: int
    no_solution: bool
    witness: tuple[int, int] | None = None

    def __bool__(self):
        return self.no_solution


def brute_force_no_solution(k: int, b_max: int) -> OracleVerdict:
    """Scan 1 <= b <= b_max for an integer a with a^2 = k b^2."""
    if k < 1 or b_max < 1:
        raise ValueError("k and b_max must be positive")
    for b in range(1, b_max + 1):
        t = k * b * b
        a = isqrt(t)
        if a * a == t:
            return OracleVerdict(k, b_max, False, (a, b))
    return OracleVerdict(k, b_max, True)


@dataclass(frozen=True)
class ConvergentSeq:
    k: int
    pairs: list[tuple[int, int]]


def sqrt_cf_terms(k: int):
    """Partial quotients of sqrt(k), an endless generator."""
    a0 = isqrt(k)
    m, d, a = 0, 1, a0
    yield a0
    while True:
        m = d * a - m
        d = (k - m * m) // d
        a = (a0 + m) // d
        yield a


def convergents(k: int, count: int) -> ConvergentSeq:
    if k < 2 or is_square(k):
        raise ValueError(f"convergents need a nonsquare k >= 2, got {k}")
    if count < 1:
        raise ValueError("count must be >= 1")
    pairs = []
    h0, h1 = 1, 0
    k0, k1 = 0, 1
    for a in sqrt_cf_terms(k):
        h0, h1 = a * h0 + h1, h0
        k0, k1 = a * k0 + k1, k0
        pairs.append((h0, k0))
        if len(pairs) == count:
            break
    return ConvergentSeq(k, pairs)
