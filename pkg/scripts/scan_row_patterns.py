#!/usr/bin/env python3
"""Scan the predicted isotypic row patterns against computed tables.

Each pattern family predicts the degree-(n-1) row of one partition
shape.  GL shapes in a predicted row can be read as printed or with
every shape conjugated; for each family and each n the scan records
which readings hold.  The summary is a markdown matrix (one letter per
cell: ``p`` printed, ``t`` transposed, ``e`` either, ``X`` neither,
``-`` the family is undefined at that n).

Exit status 3 if a proven family fails under both readings — that
would mean the table computation itself is wrong.
"""

import argparse
import sys

from wedgeconf.closedform import ROW_FAMILIES, check_all_conjectures
from wedgeconf.decomp import full_decomposition

CELL = {
    "matches either reading": "e",
    "matches as printed": "p",
    "matches transposed": "t",
    "MISMATCH under both readings": "X",
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=7)
    args = ap.parse_args(argv)

    grid = {}
    broken = 0
    for n in range(args.n_min, args.n_max + 1):
        print(f"computing table n={n} ...", file=sys.stderr, flush=True)
        for report in check_all_conjectures(n, full_decomposition(n)):
            grid[(report.family, n)] = CELL[report.verdict]
            if report.proven and report.verdict.startswith("MISMATCH"):
                print(f"proven family {report.family!r} fails at n={n}",
                      file=sys.stderr)
                broken += 1

    ns = list(range(args.n_min, args.n_max + 1))
    width = max(len(f) for f in ROW_FAMILIES)
    print("| " + "family".ljust(width) + " | " +
          " | ".join(f"n={n}" for n in ns) + " |")
    print("|" + "-" * (width + 2) + "|" + "|".join("-----" for _ in ns) + "|")
    for family in ROW_FAMILIES:
        cells = [grid.get((family, n), "-").center(3) for n in ns]
        print("| " + family.ljust(width) + " | " +
              " | ".join(cells) + " |")
    return 3 if broken else 0


if __name__ == "__main__":
    sys.exit(main())
