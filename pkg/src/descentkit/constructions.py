"""The overlap figures, their coverage checks and the exact pentagon lemmas."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .descent import is_square, triangular
from .exact import QuadExt
from .geometry import (
    DEFAULT_PRECISION,
    ConvexPolygon,
    CoverageReport,
    Point,
    context,
    multiplicity_accounting,
    regular_ngon,
    shoelace_area,
)

REL_TOL = 1e-9


@dataclass(frozen=True)
class FigureKind:
    """One of sqrt2, sqrt3, sqrt5, sqrt6 or the triangular family tri<n>."""

    label: str
    n: int | None = None

    def __post_init__(self):
        if self.label not in ("sqrt2", "sqrt3", "sqrt5", "sqrt6", "tri"):
            raise ValueError(f"unknown figure kind {self.label!r}")
        if self.label == "tri":
            if self.n is None or self.n < 2:
                raise ValueError("triangular kind needs n >= 2")
            if is_square(triangular(self.n)):
                raise ValueError(f"T_{self.n} = {triangular(self.n)} is a perfect square")

    @property
    def name(self) -> str:
        return f"tri{self.n}" if self.label == "tri" else self.label

    @property
    def layout_n(self) -> int | None:
        """Row count when the figure uses the triangular layout."""
        return {"sqrt3": 2, "sqrt6": 3, "tri": self.n}.get(self.label)

    @property
    def k(self) -> int:
        if self.label == "sqrt2":
            return 2
        if self.label == "sqrt5":
            return 5
        return triangular(self.layout_n)

    @property
    def sides(self) -> int:
        return {"sqrt2": 4, "sqrt5": 5}.get(self.label, 3)

    @property
    def small_count(self) -> int:
        if self.label == "sqrt2":
            return 2
        if self.label == "sqrt5":
            return 5
        return triangular(self.layout_n)

    @property
    def max_multiplicity(self) -> int:
        n = self.layout_n
        return 3 if n is not None and n >= 3 else 2

    def shape_constant(self, prec: int = DEFAULT_PRECISION):
        """Area of the unit-side polygon of this kind."""
        ctx = context(prec)
        if self.sides == 4:
            return ctx.mpf(1)
        if self.sides == 3:
            return ctx.sqrt(3) / 4
        return ctx.sqrt(25 + 10 * ctx.sqrt(5)) / 4

    def domain(self, b) -> tuple[object, object]:
        """Closed range (lo, hi) for a, with b < a required in addition."""
        if self.label == "sqrt2":
            return b, 2 * b
        if self.label == "sqrt5":
            return 2 * b, Fraction(5, 2) * b
        n = self.layout_n
        return Fraction(n + 1, 2) * b, n * b

    def in_domain(self, a, b) -> bool:
        lo, hi = self.domain(b)
        return 0 < b < a and lo <= a <= hi

    def __str__(self):
        return self.name


SQRT2 = FigureKind("sqrt2")
SQRT3 = FigureKind("sqrt3")
SQRT5 = FigureKind("sqrt5")
SQRT6 = FigureKind("sqrt6")


def triangular_kind(n: int) -> FigureKind:
    return FigureKind("tri", n)


def parse_kind(name: str) -> FigureKind:
    m = re.fullmatch(r"tri(\d+)", name)
    if m:
        return triangular_kind(int(m.group(1)))
    return FigureKind(name)


@dataclass(frozen=True)
class LinearForm:
    """ca*a + cb*b with rational coefficients."""

    ca: Fraction
    cb: Fraction

    def __call__(self, a, b):
        return self.ca * a + self.cb * b

    def __sub__(self, o: LinearForm) -> LinearForm:
        return LinearForm(self.ca - o.ca, self.cb - o.cb)

    def scale(self, c) -> LinearForm:
        return LinearForm(self.ca * c, self.cb * c)

    def __str__(self):
        den = lcm(self.ca.denominator, self.cb.denominator)
        terms = []
        for coef, sym in ((self.ca * den, "a"), (self.cb * den, "b")):
            c = int(coef)
            if c:
                terms.append(("-" if c < 0 else "+") + ("" if abs(c) == 1 else str(abs(c))) + sym)
        body = "".join(terms).lstrip("+") or "0"
        return body if den == 1 else f"({body})/{den}"


B = LinearForm(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class SideForms:
    t: LinearForm
    s: LinearForm


def side_formulas(kind: FigureKind) -> SideForms:
    """Overlap side t and uncovered side s as linear forms in (a, b)."""
    if kind.label == "sqrt2":
        return SideForms(LinearForm(Fraction(-1), Fraction(2)), LinearForm(Fraction(1), Fraction(-1)))
    if kind.label == "sqrt5":
        return SideForms(LinearForm(Fraction(1), Fraction(-2)), LinearForm(Fraction(-2), Fraction(5)))
    n = kind.layout_n
    t = LinearForm(Fraction(-1, n - 1), Fraction(n, n - 1))
    s = LinearForm(Fraction(2, n - 1), Fraction(-(n + 1), n - 1))
    assert s == B - t.scale(2), f"s != b - 2t for n={n}"
    return SideForms(t, s)


@dataclass(frozen=True)
class ExpectedRegions:
    doubly_count: int
    triply_count: int
    uncovered_count: int
    t_side: LinearForm
    s_side: LinearForm


def expected_regions(kind: FigureKind) -> ExpectedRegions:
    sf = side_formulas(kind)
    if kind.label == "sqrt2":
        return ExpectedRegions(1, 0, 2, sf.t, sf.s)
    if kind.label == "sqrt5":
        # five kites; five edge triangles plus the middle pentagon
        return ExpectedRegions(5, 0, 6, sf.t, sf.s)
    n = kind.layout_n
    return ExpectedRegions(3 * (n - 1), (n - 2) * (n - 1) // 2, (n - 1) * n // 2, sf.t, sf.s)


@dataclass
class Figure:
    kind: FigureKind
    a: object
    b: object
    big: ConvexPolygon
    smalls: list[ConvexPolygon]
    expected: ExpectedRegions
    prec: int = DEFAULT_PRECISION


def _layout(kind: FigureKind, a, b, prec: int) -> tuple[ConvexPolygon, list[ConvexPolygon]]:
    ctx = context(prec)
    a, b = ctx.mpf(a), ctx.mpf(b)
    origin = Point(ctx.mpf(0), ctx.mpf(0))
    if kind.label == "sqrt2":
        big = regular_ngon(4, a, origin, 0, prec)
        smalls = [
            regular_ngon(4, b, origin, 0, prec),
            regular_ngon(4, b, Point(a - b, a - b), 0, prec),
        ]
    elif kind.label == "sqrt5":
        big = regular_ngon(5, a, origin, 0, prec)
        turn = 2 * ctx.pi / 5
        # homothetic copy at each corner: both corner edges run along the big edges
        smalls = [regular_ngon(5, b, v, i * turn, prec) for i, v in enumerate(big.vertices)]
    else:
        n = kind.layout_n
        big = regular_ngon(3, a, origin, 0, prec)
        h = (a - b) / (n - 1)
        half, height = h / 2, h * ctx.sqrt(3) / 2
        smalls = []
        for j in range(n):
            for i in range(n - j):
                anchor = Point(i * h + j * half, j * height)
                smalls.append(regular_ngon(3, b, anchor, 0, prec))
    return big, smalls


def build_figure(kind: FigureKind, a: int, b: int, prec: int = DEFAULT_PRECISION) -> Figure:
    if not kind.in_domain(a, b):
        lo, hi = kind.domain(b)
        raise ValueError(
            f"{kind.name}: (a, b) = ({a}, {b}) outside the valid range "
            f"b < a and {lo} <= a <= {hi}"
        )
    big, smalls = _layout(kind, a, b, prec)
    return Figure(kind, a, b, big, smalls, expected_regions(kind), prec)


@dataclass
class IdentityCheck:
    name: str
    passed: bool
    lhs: object
    rhs: object
    tol: float

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "lhs": float(self.lhs), "rhs": float(self.rhs), "tol": self.tol}


@dataclass
class VerificationReport:
    kind: str
    a: int
    b: int
    excess: object
    uncovered: object
    residual: object
    identities: list[IdentityCheck] = field(default_factory=list)
    coverage: CoverageReport | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.identities)

    def failures(self) -> list[str]:
        return [c.name for c in self.identities if not c.passed]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "a": self.a,
            "b": self.b,
            "excess": float(self.excess),
            "uncovered": float(self.uncovered),
            "residual": float(self.residual),
            "identities": [c.to_dict() for c in self.identities],
        }


def _close(name, lhs, rhs, scale, tol=REL_TOL) -> IdentityCheck:
    ok = abs(lhs - rhs) <= tol * max(abs(rhs), scale)
    return IdentityCheck(name, bool(ok), lhs, rhs, tol)


def verify_figure(fig: Figure) -> VerificationReport:
    """Coverage accounting for one figure against its expected identities.

    Relative tolerances use max(|rhs|, C_shape) as the scale, C_shape being
    the area of one unit cell.
    """
    kind, a, b = fig.kind, fig.a, fig.b
    C = kind.shape_constant(fig.prec)
    cov = multiplicity_accounting(fig.big, fig.smalls, kind.max_multiplicity)
    excess, uncovered = cov.excess_area, cov.uncovered_area
    residual = uncovered - excess
    checks = [
        _close("accounting", cov.small_area_total - cov.big_area, excess - uncovered, C),
        _close("pell_residual", residual, C * (a * a - kind.k * b * b), C),
    ]
    exp = fig.expected
    if kind.label == "sqrt5":
        # cell areas in terms of t, s only hold on the irrational ray; see pentagon_ray_check
        kites = [shoelace_area(r) for r in cov.regions.pairs.values()]
        checks.append(IdentityCheck("double_regions", len(kites) == exp.doubly_count, len(kites), exp.doubly_count, 0.0))
        spread = max(kites) - min(kites) if kites else 0
        checks.append(_close("kite_congruence", spread, 0, C))
    else:
        t, s = exp.t_side(a, b), exp.s_side(a, b)
        cells = exp.doubly_count + 2 * exp.triply_count
        checks.append(_close("excess_cells", excess, cells * C * _mp(t, fig.prec) ** 2, C))
        checks.append(_close("uncovered_cells", uncovered, exp.uncovered_count * C * _mp(s, fig.prec) ** 2, C))
    return VerificationReport(kind.name, a, b, excess, uncovered, residual, checks, cov)


def _mp(v: Fraction, prec: int):
    ctx = context(prec)
    return ctx.mpf(v.numerator) / v.denominator


@dataclass
class PentagonRayCheck:
    excess_minus_triangles: object
    doubly_pentagons: object
    uncovered_minus_triangles: object
    middle_pentagon: object
    kite_short_sides: list
    t_side: object

    def passed(self, tol: float = REL_TOL) -> bool:
        s = abs(self.doubly_pentagons) + abs(self.middle_pentagon)
        ok = abs(self.excess_minus_triangles - self.doubly_pentagons) <= tol * s
        ok &= abs(self.uncovered_minus_triangles - self.middle_pentagon) <= tol * s
        ok &= all(abs(x - self.t_side) <= tol * self.t_side for x in self.kite_short_sides)
        return bool(ok)


def pentagon_ray_check(prec: int = DEFAULT_PRECISION) -> PentagonRayCheck:
    """Clip the pentagon figure at the irrational point (a, b) = (sqrt 5, 1).

    There each kite is a regular pentagon of side a - 2b glued to an edge
    triangle, and the uncovered middle is a regular pentagon of side 5b - 2a.
    """
    ctx = context(prec)
    a, b = ctx.sqrt(5), ctx.mpf(1)
    big, smalls = _layout(SQRT5, a, b, prec)
    cov = multiplicity_accounting(big, smalls, 2)
    C = SQRT5.shape_constant(prec)
    t, s = a - 2 * b, 5 * b - 2 * a
    tri = (t / 2) ** 2 * ctx.tan(2 * ctx.pi / 5)
    short = []
    for kite in cov.regions.pairs.values():
        sides = sorted(kite.side_lengths())
        short.extend(sides[:2])
    return PentagonRayCheck(
        excess_minus_triangles=cov.excess_area - 5 * tri,
        doubly_pentagons=5 * C * t**2,
        uncovered_minus_triangles=cov.uncovered_area - 5 * tri,
        middle_pentagon=C * s**2,
        kite_short_sides=short,
        t_side=t,
    )


# --- exact lemmas ---------------------------------------------------------

COS_2PI_5 = QuadExt(5, Fraction(-1, 4), Fraction(1, 4))


class LemmaFailure(AssertionError):
    pass


def pentagon_lemma_side() -> QuadExt:
    """Side x of the small doubly covered pentagon with b = 1, a = sqrt 5.

    x = b - 2(a - 2b) / (2 cos(2 pi / 5)), evaluated twice: once through the
    field inverse and once with the known reciprocal 1/cos(2 pi/5) = sqrt5 + 1.
    """
    a = QuadExt.sqrt(5)
    b = QuadExt(5, 1)
    c = COS_2PI_5
    if 4 * c * c + 2 * c - 1 != 0:
        raise LemmaFailure("cos(2pi/5) is not a root of 4x^2 + 2x - 1")
    x = b - 2 * (a - 2 * b) * (2 * c).inverse()
    recip = QuadExt(5, 1, 1)
    if recip * c != 1:
        raise LemmaFailure("sqrt5 + 1 is not the reciprocal of cos(2pi/5)")
    x_direct = b - (a - 2 * b) * recip
    if x != x_direct:
        raise LemmaFailure(f"evaluation orders disagree: {x} vs {x_direct}")
    if x != a - 2 * b:
        raise LemmaFailure(f"x = {x}, expected a - 2b = sqrt5 - 2")
    return x


def pentagon_angle_chase() -> list[tuple[str, Fraction]]:
    """Interior angles around one small doubly covered pentagon, in units of pi."""
    angle_sum = Fraction(5 - 2)  # (n - 2) pi for a pentagon
    regular = angle_sum / 5
    base = 1 - regular  # supplementary to a regular angle
    next_to_base = 1 - base
    adjacent = regular  # interior angles of the big-side pentagons
    top = angle_sum - 2 * next_to_base - 2 * adjacent
    chase = [
        ("pentagon angle sum", angle_sum),
        ("regular pentagon angle", regular),
        ("edge triangle base angle", base),
        ("small pentagon angle next to base (left)", next_to_base),
        ("small pentagon angle next to base (right)", next_to_base),
        ("small pentagon adjacent angle (left)", adjacent),
        ("small pentagon adjacent angle (right)", adjacent),
        ("small pentagon top angle", top),
    ]
    five = [v for label, v in chase if label.startswith("small pentagon")]
    if len(five) != 5 or any(v != Fraction(3, 5) for v in five):
        raise LemmaFailure(f"small pentagon angles {five} are not all 3/5")
    if sum(five) != angle_sum:
        raise LemmaFailure("small pentagon angles do not sum to 3")
    return chase
