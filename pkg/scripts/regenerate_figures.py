"""Write the five construction figures as SVG and print their verification summary.

    python3 scripts/regenerate_figures.py [OUTDIR]
"""

import sys
from pathlib import Path

from descentkit.constructions import SQRT2, SQRT3, SQRT5, SQRT6, build_figure, triangular_kind, verify_figure
from descentkit.render import figure_to_svg, svg_filename

FIGURES = [(SQRT2, 7, 5), (SQRT3, 7, 4), (SQRT5, 9, 4), (SQRT6, 5, 2), (triangular_kind(4), 19, 6)]


def main(outdir: Path) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    ok = True
    for kind, a, b in FIGURES:
        fig = build_figure(kind, a, b)
        rep = verify_figure(fig)
        path = outdir / svg_filename(fig)
        path.write_text(figure_to_svg(fig))
        ok &= rep.passed
        status = "ok" if rep.passed else "FAILED: " + ", ".join(rep.failures())
        print(f"{path}  excess={float(rep.excess):.6g} uncovered={float(rep.uncovered):.6g}  {status}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(Path(sys.argv[1] if len(sys.argv) > 1 else "figures")))
