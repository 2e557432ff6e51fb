#!/usr/bin/env python3
"""Weight-column dimensions on one circle, by modular rank counting.

For each weight k the two window degrees should have dimensions
|s(n-1, k)| and |s(n-1, k-1)| (unsigned Stirling numbers of the first
kind).  The character route needs full trace tables; this script only
counts dimensions, via sparse elimination at two primes with matching
pivot structure, which reaches n = 8 in about a minute on one core.
n = 9 peaks around 8 GiB of memory — pass --n 9 only where that fits.

Exit status 1 on any dimension that misses its Stirling value.
"""

import argparse
import sys
import time

from wedgeconf.cecomplex import (
    WedgeSignature,
    differential_rows_transposed,
    enumerate_basis,
)
from wedgeconf.combinat import stirling1_unsigned
from wedgeconf.linalg import PRIMES, ModularRREF, integer_rows


def certified_rank(rows, ncols: int) -> int:
    """Rank by elimination at two primes; pivot columns must agree."""
    if not rows or ncols == 0:
        return 0
    rows = integer_rows(rows)
    first = ModularRREF(rows, ncols, PRIMES[0], reduce_above=False)
    second = ModularRREF(rows, ncols, PRIMES[1], reduce_above=False)
    if first.rank != second.rank or (first.pivot_cols != second.pivot_cols).any():
        raise RuntimeError(f"modular pivot disagreement at {PRIMES[:2]}")
    return first.rank


def window_dims(n: int, k: int) -> tuple:
    """(dim in degree n-1, dim in degree n) of the weight-k column.

    The chain spot past the window is empty at this weight, so two
    ranks pin both dimensions."""
    sig = WedgeSignature.uniform(1, 1)
    P = n - k - 1
    hi = enumerate_basis(sig, n, n - P - 1, (k,))
    lo = enumerate_basis(sig, n, n - P, (k,))
    pre = enumerate_basis(sig, n, n - P + 1, (k,)) if P >= 1 else []
    r_out = (certified_rank(differential_rows_transposed(sig, lo, hi), len(lo))
             if lo and hi else 0)
    r_in = (certified_rank(differential_rows_transposed(sig, pre, lo), len(pre))
            if pre and lo else 0)
    return len(lo) - r_out - r_in, len(hi) - r_out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=8)
    args = ap.parse_args(argv)
    n = args.n
    if n < 2:
        ap.error("need n >= 2")

    bad = 0
    print(f"{'k':>2}  {'deg n-1':>9}  {'deg n':>9}  {'time':>7}")
    for k in range(1, n + 1):
        t0 = time.perf_counter()
        lo, hi = window_dims(n, k)
        elapsed = time.perf_counter() - t0
        want = (stirling1_unsigned(n - 1, k), stirling1_unsigned(n - 1, k - 1))
        flag = "" if (lo, hi) == want else f"  EXPECTED {want}"
        bad += (lo, hi) != want
        print(f"{k:>2}  {lo:>9}  {hi:>9}  {elapsed:6.1f}s{flag}", flush=True)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
