#!/usr/bin/env python3
"""Build the circle-evaluated multiplicity tables and report timings.

One line per n with the entry count, wall time, and — when bundled
reference rows exist for that n — the verification outcome.  With
--out DIR the full two-degree table is also written as JSON, one file
per n, in the same format ``wedgeconf table --format json`` emits.

Exit status 1 if any bundled row disagrees with the computation.
"""

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from wedgeconf.cli import ReferenceTable, reference_from_decomposition
from wedgeconf.decomp import full_decomposition


@dataclass(frozen=True)
class RunConfig:
    n_min: int
    n_max: int
    out: Path | None
    scheme: str


def parse_args(argv) -> RunConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--out", type=Path, default=None,
                    help="directory for per-n JSON tables")
    ap.add_argument("--scheme", default="auto",
                    choices=["auto", "circle", "even", "mixed"],
                    help="which sphere parity computes each GL shape")
    args = ap.parse_args(argv)
    if not 1 <= args.n_min <= args.n_max:
        ap.error("need 1 <= n-min <= n-max")
    return RunConfig(args.n_min, args.n_max, args.out, args.scheme)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    mismatched = 0
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        dec = full_decomposition(n, scheme=cfg.scheme)
        elapsed = time.perf_counter() - t0
        entries = len(dec.coeffs)
        line = f"n={n}  entries={entries:4d}  {elapsed:7.2f}s"
        try:
            ref = ReferenceTable.load(n)
        except FileNotFoundError:
            line += "  (no bundled rows)"
        else:
            bad = ref.diff(dec)
            line += "  verified" if not bad else f"  MISMATCH x{len(bad)}"
            mismatched += len(bad)
        print(line, flush=True)
        if cfg.out is not None:
            cfg.out.mkdir(parents=True, exist_ok=True)
            doc = reference_from_decomposition(dec, source="fresh computation")
            (cfg.out / f"table_n{n}.json").write_text(doc.to_json())
    return 1 if mismatched else 0


if __name__ == "__main__":
    sys.exit(main())
