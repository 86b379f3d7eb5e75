"""Coverage residual against the Pell form along the convergents of each kind.

The ratio (uncovered - excess) / (C * (a^2 - k b^2)) should print as 1.

    python3 scripts/convergent_residuals.py [COUNT]
"""

import sys

from descentkit.analysis import convergents
from descentkit.constructions import SQRT2, SQRT3, SQRT5, SQRT6, build_figure, triangular_kind, verify_figure

KINDS = [SQRT2, SQRT3, SQRT5, SQRT6, triangular_kind(2), triangular_kind(3), triangular_kind(4)]


def main(count: int = 8) -> None:
    for kind in KINDS:
        C = kind.shape_constant()
        pairs = [p for p in convergents(kind.k, 4 * count).pairs if kind.in_domain(*p)][:count]
        print(f"{kind.name} (k={kind.k})")
        for a, b in pairs:
            rep = verify_figure(build_figure(kind, a, b))
            pell = a * a - kind.k * b * b
            ratio = rep.residual / (C * pell)
            print(f"  a={a:<8} b={b:<8} pell={pell:+d}  ratio={float(ratio):.12f}")


if __name__ == "__main__":
    main(*(int(x) for x in sys.argv[1:2]))
