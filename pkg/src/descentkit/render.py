"""Standalone SVG output for overlap figures."""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .constructions import Figure
from .geometry import ConvexPolygon, overlap_regions

# 0 uncovered white, 1 single cover light red, 2 double cover pink, 3 triple cover deep pink
DEFAULT_PALETTE = {0: "#ffffff", 1: "#f28b82", 2: "#f8bbd0", 3: "#c2185b"}


@dataclass(frozen=True)
class RenderStyle:
    canvas_px: int = 600
    palette: dict[int, str] = field(default_factory=lambda: dict(DEFAULT_PALETTE))
    stroke_width: float = 1.0
    stroke: str = "#000000"
    margin: float = 0.05

    def __post_init__(self):
        if self.canvas_px <= 0:
            raise ValueError("canvas_px must be positive")
        missing = {0, 1, 2, 3} - set(self.palette)
        if missing:
            raise ValueError(f"palette lacks multiplicities {sorted(missing)}")
        if not 0 <= self.margin < 0.5:
            raise ValueError("margin must be in [0, 0.5)")


def figure_to_svg(fig: Figure, style: RenderStyle | None = None) -> str:
    style = style or RenderStyle()
    regions = overlap_regions(fig.smalls, fig.kind.max_multiplicity)
    x0, y0, x1, y1 = (float(v) for v in fig.big.bbox())
    size = style.canvas_px
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = size * (1 - 2 * style.margin) / span
    off_x = (size - (x1 - x0) * scale) / 2
    off_y = (size - (y1 - y0) * scale) / 2

    def pts(poly: ConvexPolygon) -> str:
        out = []
        for v in poly.vertices:
            px = off_x + (float(v.x) - x0) * scale
            py = size - (off_y + (float(v.y) - y0) * scale)
            out.append(f"{px:.3f},{py:.3f}")
        return " ".join(out)

    def polygon(poly: ConvexPolygon, mult: int, cls: str) -> str:
        return (
            f'  <polygon class="{cls}" points="{pts(poly)}" fill="{style.palette[mult]}" '
            f'stroke="{style.stroke}" stroke-width="{style.stroke_width:g}"/>'
        )

    title = f"Overlap construction for sqrt({fig.kind.k}) with a={fig.a}, b={fig.b}"
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"  <title>{escape(title)}</title>",
        polygon(fig.big, 0, "big"),
    ]
    lines += [polygon(p, 1, "small") for p in fig.smalls]
    lines += [polygon(p, 2, "double") for p in regions.exact_doubles()]
    lines += [polygon(p, 3, "triple") for p in regions.triples.values()]
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def svg_filename(fig: Figure) -> str:
    return f"{fig.kind.name}_{fig.a}_{fig.b}.svg"
