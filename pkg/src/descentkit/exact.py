"""Exact arithmetic in real quadratic fields Q(sqrt m).

Rationals are plain :class:`fractions.Fraction` values, which already keep a
positive denominator and reduced form.  :class:`QuadExt` adds one square root
on top of them.  The radicand travels with every value, so elements of
different fields can live side by side in one process; mixing them is an
error rather than a silent coercion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from numbers import Rational as _RationalABC

Rational = Fraction

MAX_RADICAND = 10**6


class RadicandMismatch(ValueError):
    pass


@lru_cache(maxsize=4096)
def square_split(k: int) -> tuple[int, int]:
    """Return ``(f, m)`` with ``k == f*f*m`` and ``m`` squarefree.

    Trial division only, so ``k`` is limited to ``MAX_RADICAND``.
    """
    if k < 1:
        raise ValueError(f"expected a positive integer, got {k}")
    if k > MAX_RADICAND:
        raise ValueError(f"radicand {k} exceeds supported bound {MAX_RADICAND}")
    f, m = 1, k
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            f *= p
        p += 1
    return f, m


def is_squarefree(m: int) -> bool:
    return square_split(m)[0] == 1


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, _RationalABC)):
        return Fraction(v)
    raise TypeError(f"cannot use {type(v).__name__} as an exact rational")


@dataclass(frozen=True, eq=False)
class QuadExt:
    """The real number ``p + q*sqrt(m)`` with rational ``p``, ``q``."""

    m: int
    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2 or not is_squarefree(self.m):
            raise ValueError(f"radicand must be a squarefree integer >= 2, got {self.m!r}")
        object.__setattr__(self, "p", _as_fraction(self.p))
        object.__setattr__(self, "q", _as_fraction(self.q))

    # construction helpers

    @classmethod
    def sqrt(cls, k: int) -> QuadExt:
        """sqrt(k) for a positive nonsquare integer k, written as f*sqrt(m)."""
        f, m = square_split(k)
        if m == 1:
            raise ValueError(f"{k} is a perfect square")
        return cls(m, 0, f)

    def _same_field(self, other) -> QuadExt:
        if isinstance(other, QuadExt):
            if other.m != self.m:
                raise RadicandMismatch(f"cannot combine Q(sqrt {self.m}) with Q(sqrt {other.m})")
            return other
        return QuadExt(self.m, _as_fraction(other), 0)

    # field operations

    def __add__(self, other):
        try:
            o = self._same_field(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self.m, self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.m, -self.p, -self.q)

    def __sub__(self, other):
        try:
            o = self._same_field(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self.m, self.p - o.p, self.q - o.q)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            o = self._same_field(other)
        except TypeError:
            return NotImplemented
        return QuadExt(
            self.m,
            self.p * o.p + self.q * o.q * self.m,
            self.p * o.q + self.q * o.p,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.m, self.p, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p - self.m * self.q * self.q

    def inverse(self) -> QuadExt:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        n = self.norm()
        # sqrt(m) is irrational, so a nonzero element has nonzero norm
        assert n != 0
        return QuadExt(self.m, self.p / n, -self.q / n)

    def __truediv__(self, other):
        try:
            o = self._same_field(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._same_field(other) * self.inverse()

    # comparisons

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def is_rational(self) -> bool:
        return self.q == 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.m == other.m and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.m, self.p, self.q))

    def sign(self) -> int:
        return q_sign(self)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.p) + float(self.q) * self.m**0.5

    def to_decimal(self, digits: int) -> str:
        return q_to_decimal(self, digits)

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        root = f"sqrt({self.m})" if self.q == 1 else f"{self.q}*sqrt({self.m})"
        if self.q == -1:
            root = f"-sqrt({self.m})"
        if self.p == 0:
            return root
        if root.startswith("-"):
            return f"{self.p} - {root[1:]}"
        return f"{self.p} + {root}"


def q_add(x: QuadExt, y: QuadExt) -> QuadExt:
    return x + y


def q_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    return x * y


def q_inv(x: QuadExt) -> QuadExt:
    return x.inverse()


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def q_sign(x: QuadExt) -> int:
    """Sign of ``p + q*sqrt(m)``, decided without any approximation."""
    sp, sq = _sgn(x.p), _sgn(x.q)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger magnitude wins; magnitudes never tie
    return sp if x.p * x.p > x.m * x.q * x.q else sq


def _floor_value(x: QuadExt, scale: int) -> int:
    """floor((p + q*sqrt(m)) * scale), exact."""
    p, q = x.p * scale, x.q * scale
    den = p.denominator * q.denominator // gcd(p.denominator, q.denominator)
    big_p = p.numerator * (den // p.denominator)
    big_q = q.numerator * (den // q.denominator)
    r2 = big_q * big_q * x.m
    if big_q >= 0:
        top = big_p + isqrt(r2)
    else:
        r = isqrt(r2)
        top = big_p - (r if r * r == r2 else r + 1)
    # floor(y / den) == floor(floor(y) / den) for positive integer den
    return top // den


def q_to_decimal(x: QuadExt, digits: int) -> str:
    """Decimal string with ``digits`` places, truncated toward zero."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10**digits
    s = q_sign(x)
    mag = _floor_value(-x if s < 0 else x, scale)
    whole, frac = divmod(mag, scale)
    sign = "-" if s < 0 and mag != 0 else ""
    return f"{sign}{whole}.{frac:0{digits}d}"
