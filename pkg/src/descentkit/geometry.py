"""Convex polygons in high-precision binary floating point.

Coordinates are mpmath numbers from a private context per precision, so no
global ``mp.prec`` is touched.  Tolerances are scale relative:
``eps_geom = 2**-40 * max|coordinate|`` and ``eps_area = eps_geom**2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from mpmath.ctx_mp import MPContext

DEFAULT_PRECISION = 128
GEOM_REL = 2.0**-40


@lru_cache(maxsize=None)
def context(bits: int = DEFAULT_PRECISION) -> MPContext:
    if bits < 53:
        raise ValueError("precision below 53 bits is not supported")
    ctx = MPContext()
    ctx.prec = bits
    return ctx


class MultiplicityError(ValueError):
    """More small polygons overlap at one place than the construction allows."""


@dataclass(frozen=True)
class Point:
    x: object
    y: object

    def __sub__(self, o: Point) -> Point:
        return Point(self.x - o.x, self.y - o.y)

    def __add__(self, o: Point) -> Point:
        return Point(self.x + o.x, self.y + o.y)


def point(x, y, prec: int = DEFAULT_PRECISION) -> Point:
    ctx = context(prec)
    return Point(ctx.mpf(x), ctx.mpf(y))


def _cross(u: Point, v: Point):
    return u.x * v.y - u.y * v.x


def _l1(u: Point):
    return abs(u.x) + abs(u.y)


def _signed_area(vs) -> object:
    s = 0
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        s += p.x * q.y - q.x * p.y
    return s / 2


def eps_geom(*polys: ConvexPolygon) -> float:
    mag = max(max(abs(v.x), abs(v.y)) for p in polys for v in p.vertices)
    return GEOM_REL * max(float(mag), 1.0)


@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise convex polygon; validated on construction."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        eps = eps_geom(self)
        if _signed_area(vs) < -eps * eps:
            raise ValueError("vertices must be counterclockwise")
        n = len(vs)
        for i in range(n):
            e1 = vs[(i + 1) % n] - vs[i]
            e2 = vs[(i + 2) % n] - vs[(i + 1) % n]
            if _cross(e1, e2) < -eps * (_l1(e1) + _l1(e2)):
                raise ValueError("polygon is not convex")

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def side_lengths(self) -> list:
        return [((q.x - p.x) ** 2 + (q.y - p.y) ** 2) ** 0.5 for p, q in self.edges()]

    def contains(self, p: Point, eps: float = 0.0) -> bool:
        for s, e in self.edges():
            d = e - s
            if _cross(d, p - s) < -eps * _l1(d):
                return False
        return True


def regular_ngon(
    sides: int,
    side_length,
    anchor: Point | None = None,
    rotation=0,
    prec: int = DEFAULT_PRECISION,
) -> ConvexPolygon:
    """Regular polygon whose first vertex is ``anchor`` and whose first edge
    leaves it at angle ``rotation``; each later edge turns left by 2*pi/sides."""
    if sides < 3:
        raise ValueError(f"a regular polygon needs >= 3 sides, got {sides}")
    ctx = context(prec)
    s = ctx.mpf(side_length)
    if s <= 0:
        raise ValueError("side length must be positive")
    if anchor is None:
        anchor = point(0, 0, prec)
    x, y = ctx.mpf(anchor.x), ctx.mpf(anchor.y)
    turn = 2 * ctx.pi / sides
    verts = []
    for i in range(sides):
        verts.append(Point(x, y))
        theta = rotation + i * turn
        x += s * ctx.cos(theta)
        y += s * ctx.sin(theta)
    return ConvexPolygon(tuple(verts))


def shoelace_area(p: ConvexPolygon):
    return _signed_area(p.vertices)


def _bbox_overlap(p: ConvexPolygon, q: ConvexPolygon, eps: float) -> bool:
    ax0, ay0, ax1, ay1 = p.bbox()
    bx0, by0, bx1, by1 = q.bbox()
    return not (ax1 < bx0 - eps or bx1 < ax0 - eps or ay1 < by0 - eps or by1 < ay0 - eps)


def convex_clip(subject: ConvexPolygon, clip: ConvexPolygon) -> ConvexPolygon | None:
    """Intersection of two convex polygons by successive half-plane clipping.

    Returns None when the intersection has area below ``eps_area``.
    """
    eps = eps_geom(subject, clip)
    if not _bbox_overlap(subject, clip, eps):
        return None
    out = list(subject.vertices)
    for c1, c2 in clip.edges():
        if not out:
            break
        d = c2 - c1
        inp, out = out, []
        s = inp[-1]
        s_side = _cross(d, s - c1)
        for e in inp:
            e_side = _cross(d, e - c1)
            if e_side >= 0:
                if s_side < 0:
                    out.append(_intersect(s, e, s_side, e_side))
                out.append(e)
            elif s_side >= 0:
                out.append(_intersect(s, e, s_side, e_side))
            s, s_side = e, e_side
    return _finish(out, eps)


def _intersect(s: Point, e: Point, s_side, e_side) -> Point:
    t = s_side / (s_side - e_side)
    return Point(s.x + t * (e.x - s.x), s.y + t * (e.y - s.y))


def _finish(vs: list[Point], eps: float) -> ConvexPolygon | None:
    cleaned: list[Point] = []
    for v in vs:
        if cleaned and abs(v.x - cleaned[-1].x) <= eps and abs(v.y - cleaned[-1].y) <= eps:
            continue
        cleaned.append(v)
    while len(cleaned) > 1 and abs(cleaned[0].x - cleaned[-1].x) <= eps and abs(cleaned[0].y - cleaned[-1].y) <= eps:
        cleaned.pop()
    # drop vertices lying on the segment between their neighbours
    i = 0
    while len(cleaned) > 3 and i < len(cleaned):
        prev, cur, nxt = cleaned[i - 1], cleaned[i], cleaned[(i + 1) % len(cleaned)]
        e1, e2 = cur - prev, nxt - cur
        if abs(_cross(e1, e2)) <= eps * (_l1(e1) + _l1(e2)):
            del cleaned[i]
        else:
            i += 1
    if len(cleaned) < 3 or _signed_area(cleaned) < eps * eps:
        return None
    return ConvexPolygon(tuple(cleaned))


@dataclass
class OverlapRegions:
    """Nonempty pairwise and triple intersections, keyed by index tuples."""

    pairs: dict[tuple[int, int], ConvexPolygon] = field(default_factory=dict)
    triples: dict[tuple[int, int, int], ConvexPolygon] = field(default_factory=dict)

    def exact_doubles(self) -> list[ConvexPolygon]:
        """Pair regions that are not entirely triple covered.

        In the lattice constructions a pair region either misses every triple
        region or coincides with one, so this gives the multiplicity-2 cells.
        """
        out = []
        for (i, j), poly in self.pairs.items():
            covered = sum(
                (shoelace_area(t) for key, t in self.triples.items() if i in key and j in key), 0
            )
            eps = eps_geom(poly)
            if shoelace_area(poly) - covered > eps * eps:
                out.append(poly)
        return out


def overlap_regions(smalls: list[ConvexPolygon], max_multiplicity: int = 2) -> OverlapRegions:
    if max_multiplicity not in (2, 3):
        raise ValueError("max_multiplicity must be 2 or 3")
    regions = OverlapRegions()
    for i, j in combinations(range(len(smalls)), 2):
        r = convex_clip(smalls[i], smalls[j])
        if r is not None:
            regions.pairs[(i, j)] = r

    def partners(*idx):
        # candidates l > max(idx) overlapping every member
        start = max(idx) + 1
        return [l for l in range(start, len(smalls)) if all((x, l) in regions.pairs for x in idx)]

    for (i, j), r in regions.pairs.items():
        for l in partners(i, j):
            t = convex_clip(r, smalls[l])
            if t is None:
                continue
            if max_multiplicity == 2:
                raise MultiplicityError(f"polygons {i}, {j}, {l} overlap with positive area")
            regions.triples[(i, j, l)] = t
    if max_multiplicity == 3:
        for (i, j, l), t in regions.triples.items():
            for r_ in partners(i, j, l):
                if convex_clip(t, smalls[r_]) is not None:
                    raise MultiplicityError(f"polygons {i}, {j}, {l}, {r_} overlap with positive area")
    return regions


@dataclass
class CoverageReport:
    big_area: object
    small_area_total: object
    union_area: object
    excess_area: object
    uncovered_area: object
    regions: OverlapRegions


def multiplicity_accounting(
    big: ConvexPolygon, smalls: list[ConvexPolygon], max_multiplicity: int = 2
) -> CoverageReport:
    """Union, excess and uncovered areas of ``smalls`` inside ``big``.

    Inclusion-exclusion stops at triples; excess = sum of (multiplicity - 1)
    times area over the covered cells.
    """
    eps = eps_geom(big, *smalls)
    for k, s in enumerate(smalls):
        if not all(big.contains(v, eps) for v in s.vertices):
            raise ValueError(f"small polygon {k} is not inside the big polygon")
    regions = overlap_regions(smalls, max_multiplicity)
    total = sum((shoelace_area(s) for s in smalls), 0)
    pair_sum = sum((shoelace_area(r) for r in regions.pairs.values()), 0)
    triple_sum = sum((shoelace_area(r) for r in regions.triples.values()), 0)
    union = total - pair_sum + triple_sum
    big_area = shoelace_area(big)
    return CoverageReport(
        big_area=big_area,
        small_area_total=total,
        union_area=union,
        excess_area=total - union,
        uncovered_area=big_area - union,
        regions=regions,
    )
