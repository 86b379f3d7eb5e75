"""Descent maps on candidate solutions of a^2 = k*b^2.

Every map is an integer matrix with an explicit positive divisor ``d``::

    (a, b) -> ((alpha*a + beta*b) / d, (gamma*a + delta*b) / d)

Keeping the divisor explicit means integrality of the image is checked at
run time instead of being rounded away.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .exact import QuadExt, q_sign


class NonIntegral(ArithmeticError):
    """The image of an integer pair is not integral."""

    def __init__(self, name: str, a: int, b: int, image: tuple[Fraction, Fraction]):
        self.values = image
        super().__init__(f"{name} maps ({a}, {b}) to non-integral ({image[0]}, {image[1]})")


class NotADescentOfThisForm(ValueError):
    pass


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def triangular(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class PellForm:
    """The binary quadratic form a^2 - k*b^2 for nonsquare k >= 2."""

    k: int

    def __post_init__(self):
        if self.k < 2 or is_square(self.k):
            raise ValueError(f"Pell form needs a nonsquare k >= 2, got {self.k}")

    def __call__(self, a: int, b: int) -> int:
        return a * a - self.k * b * b

    def sqrt_k(self) -> QuadExt:
        return QuadExt.sqrt(self.k)


@dataclass(frozen=True)
class DescentMap:
    name: str
    form: PellForm
    alpha: int
    beta: int
    gamma: int
    delta: int
    d: int = 1

    def __post_init__(self):
        if self.d <= 0:
            raise ValueError("divisor must be positive")
        if self.alpha * self.delta - self.beta * self.gamma == 0:
            raise ValueError(f"{self.name}: singular matrix")

    @property
    def k(self) -> int:
        return self.form.k

    @property
    def matrix(self) -> tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        return apply(self, a, b)


def map_sqrt2() -> DescentMap:
    # (a, b) -> (2b - a, a - b)
    return DescentMap("sqrt2", PellForm(2), -1, 2, 1, -1)


def map_sqrt3() -> DescentMap:
    # (a, b) -> (2a - 3b, 2b - a)
    return DescentMap("sqrt3", PellForm(3), 2, -3, -1, 2)


def map_sqrt5() -> DescentMap:
    # (a, b) -> (5b - 2a, a - 2b)
    return DescentMap("sqrt5", PellForm(5), -2, 5, 1, -2)


def map_sqrt6() -> DescentMap:
    # (a, b) -> (2(3b - a), a - 2b), i.e. (4t, s) for the six-triangle picture
    return DescentMap("sqrt6", PellForm(6), -2, 6, 1, -2)


def map_triangular(n: int) -> DescentMap:
    """(a, b) -> (n(2a - (n+1)b)/2, nb - a) for the form a^2 - T_n b^2."""
    if n < 2:
        raise ValueError(f"triangular map needs n >= 2, got {n}")
    t = triangular(n)
    if is_square(t):
        raise ValueError(
            f"T_{n} = {t} = {isqrt(t)}^2 is a square triangular number; "
            "sqrt(T_n) is rational and no descent exists"
        )
    return DescentMap(f"tri{n}", PellForm(t), 2 * n, -n * (n + 1), -2, 2 * n, 2)


_NAMED = {
    "sqrt2": map_sqrt2,
    "sqrt3": map_sqrt3,
    "sqrt5": map_sqrt5,
    "sqrt6": map_sqrt6,
}


def get_map(name: str) -> DescentMap:
    """Look up a map by catalog name: sqrt2, sqrt3, sqrt5, sqrt6 or tri<n>."""
    if name in _NAMED:
        return _NAMED[name]()
    m = re.fullmatch(r"tri(\d+)", name)
    if m:
        return map_triangular(int(m.group(1)))
    raise KeyError(name)


def catalog(triangular_max: int = 8) -> list[DescentMap]:
    """The four named maps followed by tri2..tri<triangular_max> (square T_n skipped)."""
    maps = [f() for f in _NAMED.values()]
    maps += [map_triangular(n) for n in range(2, triangular_max + 1) if not is_square(triangular(n))]
    return maps


def apply(m: DescentMap, a: int, b: int) -> tuple[int, int]:
    x = m.alpha * a + m.beta * b
    y = m.gamma * a + m.delta * b
    if x % m.d or y % m.d:
        raise NonIntegral(m.name, a, b, (Fraction(x, m.d), Fraction(y, m.d)))
    return x // m.d, y // m.d


def image_form_coefficients(m: DescentMap) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (A, B, C) with a'^2 - k b'^2 = A a^2 + B ab + C b^2."""
    k, d2 = m.k, m.d * m.d
    A = Fraction(m.alpha**2 - k * m.gamma**2, d2)
    B = Fraction(2 * (m.alpha * m.beta - k * m.gamma * m.delta), d2)
    C = Fraction(m.beta**2 - k * m.delta**2, d2)
    return A, B, C


def form_multiplier(m: DescentMap) -> Fraction:
    """The constant c with a'^2 - k b'^2 == c (a^2 - k b^2) identically.

    Found by comparing coefficients against (1, 0, -k); raises
    NotADescentOfThisForm when the image form is not a scalar multiple.
    """
    A, B, C = image_form_coefficients(m)
    if B != 0 or C != -m.k * A:
        raise NotADescentOfThisForm(
            f"{m.name}: image form {A}a^2 + {B}ab + {C}b^2 is not a multiple of a^2 - {m.k}b^2"
        )
    return A


def ray_image(m: DescentMap) -> tuple[QuadExt, QuadExt]:
    """Image of the irrational point (sqrt k, 1), computed in Q(sqrt k)."""
    r = m.form.sqrt_k()
    return (m.alpha * r + m.beta) / m.d, (m.gamma * r + m.delta) / m.d


def decrease_factor(m: DescentMap) -> QuadExt:
    """lambda with b' = lambda * b on the ray a = sqrt(k) b.

    Since the map is linear and fixes the ray direction, a' = lambda * a too.
    """
    return ray_image(m)[1]


def is_valid_descent(m: DescentMap) -> bool:
    lam = decrease_factor(m)
    return q_sign(lam) > 0 and q_sign(lam - 1) < 0


class Termination(enum.Enum):
    NON_POSITIVE_B = "NonPositiveB"
    NON_INTEGRAL = "NonIntegral"
    MAX_STEPS = "MaxSteps"


@dataclass
class Trajectory:
    map_name: str
    k: int
    steps: list[tuple[int, int, int]] = field(default_factory=list)
    termination: Termination = Termination.MAX_STEPS

    def form_values(self) -> list[int]:
        return [v for _, _, v in self.steps]


def descend_sequence(m: DescentMap, a: int, b: int, max_steps: int = 100) -> Trajectory:
    """Iterate ``m`` from (a, b), recording (a, b, a^2 - k b^2) per state.

    ``max_steps`` bounds the number of recorded states, the start included.
    The state whose b is non-positive is recorded before stopping.
    """
    if a < 0 or b < 0:
        raise ValueError("descent starts from a nonnegative pair")
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    form = m.form
    traj = Trajectory(m.name, m.k, [(a, b, form(a, b))])
    while len(traj.steps) < max_steps:
        try:
            a, b = apply(m, a, b)
        except NonIntegral:
            traj.termination = Termination.NON_INTEGRAL
            return traj
        traj.steps.append((a, b, form(a, b)))
        if b <= 0:
            traj.termination = Termination.NON_POSITIVE_B
            return traj
    traj.termination = Termination.MAX_STEPS
    return traj


def catalog_entry(m: DescentMap) -> dict:
    """JSON-ready description of one map."""
    c = form_multiplier(m)
    return {
        "name": m.name,
        "k": m.k,
        "matrix": list(m.matrix),
        "d": m.d,
        "c": f"{c.numerator}/{c.denominator}",
        "lambda": decrease_factor(m).to_decimal(10),
        "valid_descent": is_valid_descent(m),
    }
