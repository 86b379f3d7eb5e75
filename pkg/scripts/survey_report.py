"""Triangular-number survey plus a longer square-triangular scan.

    python3 scripts/survey_report.py [N_MAX] [SCAN_MAX]
"""

import sys

from descentkit.analysis import format_survey, run_survey, square_triangular


def main(n_max: int = 50, scan_max: int = 10**6) -> None:
    print(format_survey(run_survey(n_max)))
    print()
    hits = [(n, square_triangular(n)) for n in range(1, scan_max + 1)]
    hits = [(n, r) for n, r in hits if r is not None]
    print(f"square triangular numbers with n <= {scan_max}:")
    for n, r in hits:
        print(f"  T_{n} = {n * (n + 1) // 2} = {r}^2")


if __name__ == "__main__":
    args = [int(x) for x in sys.argv[1:3]]
    main(*args)
