"""Exact sparse linear algebra over Q, with a certified modular fast path.

Two engines with one interface:

* :func:`echelon_exact` -- straightforward sparse Gaussian elimination with
  GMP rationals.  Exact by construction; the reference implementation.
* :func:`echelon_mod` -- the same left-looking elimination over F_p with
  numpy int64 row arrays (31-bit primes, so products stay in int64).

Both produce an echelon object exposing rank, pivot columns and kernel
back-substitution with the identity-on-free-columns pattern.  On top of the
modular engine, :func:`certified_kernel` lifts kernel vectors by rational
reconstruction (CRT over the deterministic prime schedule on failure) and
re-verifies A v = 0 exactly over the integers, which certifies the rank from
both sides: a nonzero pivot minor mod p gives rank >= r over Q, and
ncols - r verified independent kernel vectors give rank <= r.  For oversized
problems :func:`rank_modular` computes ranks at two primes and insists on
identical pivot structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numba
import numpy as np
from gmpy2 import mpq, mpz

# 31-bit primes, deterministic schedule (largest first)
PRIMES = (
    2147483647,
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
    2147483497,
)


@dataclass(frozen=True)
class SparseRationalMatrix:
    """Rows-as-dicts sparse matrix; row i holds the image of basis vector i."""

    rows: tuple  # tuple of dicts {col: coefficient}
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def transpose(self) -> "SparseRationalMatrix":
        cols: list[dict] = [dict() for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                cols[j][i] = v
        return SparseRationalMatrix(tuple(cols), self.nrows)

    def matvec(self, vec: dict) -> dict:
        """Image of a (sparse) vector on the source side: sum v_i * row_i."""
        out: dict[int, object] = {}
        for i, c in vec.items():
            for j, v in self.rows[i].items():
                w = out.get(j, 0) + c * v
                if w:
                    out[j] = w
                else:
                    out.pop(j, None)
        return out


def integer_rows(rows) -> list:
    """Clear denominators row by row (row scaling preserves kernel/rank)."""
    out = []
    for row in rows:
        if all(isinstance(v, int) for v in row.values()):
            out.append(row)
            continue
        qrow = {j: mpq(v) for j, v in row.items()}
        denom = reduce(math.lcm, (int(v.denominator) for v in qrow.values()), 1)
        out.append({j: int(v * denom) for j, v in qrow.items()})
    return out


# --- exact engine ------------------------------------------------------------

class ExactEchelon:
    """Row echelon form over Q; rows keyed by pivot column, pivot value 1."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_cols(self) -> list:
        return sorted(self.pivots)

    def free_cols(self) -> list:
        return [j for j in range(self.ncols) if j not in self.pivots]

    def add_row(self, row: dict) -> None:
        row = {j: mpq(v) for j, v in row.items() if v}
        while row:
            j = min(row)
            hit = self.pivots.get(j)
            if hit is None:
                inv = 1 / row[j]
                self.pivots[j] = {c: v * inv for c, v in row.items()}
                return
            factor = row[j]
            for c, v in hit.items():
                w = row.get(c, mpq(0)) - factor * v
                if w:
                    row[c] = w
                else:
                    row.pop(c, None)

    def kernel_vector(self, free_col: int) -> dict:
        """The kernel vector with a 1 at ``free_col``, 0 at other free
        columns, solved by back-substitution over the pivot columns."""
        if free_col in self.pivots:
            raise ValueError(f"{free_col} is a pivot column")
        v: dict[int, mpq] = {free_col: mpq(1)}
        for p in sorted(self.pivots, reverse=True):
            row = self.pivots[p]
            acc = mpq(0)
            for c, w in row.items():
                if c != p and c in v:
                    acc -= w * v[c]
            if acc:
                v[p] = acc
        return v

    def kernel_basis(self) -> list:
        return [self.kernel_vector(f) for f in self.free_cols()]


def echelon_exact(rows, ncols: int) -> ExactEchelon:
    ech = ExactEchelon(ncols)
    for row in rows:
        ech.add_row(row)
    return ech


# --- modular engine ----------------------------------------------------------

class ModularEchelon:
    """Row echelon form over F_p with numpy (sorted col idx, value) rows."""

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.pivots: dict[int, tuple] = {}  # col -> (idx array, val array)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_cols(self) -> list:
        return sorted(self.pivots)

    def free_cols(self) -> list:
        return [j for j in range(self.ncols) if j not in self.pivots]

    def _axpy(self, idx, val, factor, bidx, bval):
        """(idx, val) - factor * (bidx, bval) over F_p, sorted-merge."""
        p = self.p
        allidx = np.union1d(idx, bidx)
        out = np.zeros(len(allidx), dtype=np.int64)
        out[np.searchsorted(allidx, idx)] = val
        pos = np.searchsorted(allidx, bidx)
        out[pos] = (out[pos] - factor * bval) % p
        keep = out != 0
        return allidx[keep], out[keep]

    def add_row(self, row) -> None:
        p = self.p
        if isinstance(row, dict):
            if not row:
                return
            idx = np.array(sorted(row), dtype=np.int64)
            val = np.array([row[j] % p for j in idx], dtype=np.int64)
            keep = val != 0
            idx, val = idx[keep], val[keep]
        else:
            idx, val = row
        while len(idx):
            j = int(idx[0])
            hit = self.pivots.get(j)
            if hit is None:
                inv = pow(int(val[0]), p - 2, p)
                self.pivots[j] = (idx, (val * inv) % p)
                return
            idx, val = self._axpy(idx, val, int(val[0]), *hit)

    def kernel_vector(self, free_col: int) -> dict:
        if free_col in self.pivots:
            raise ValueError(f"{free_col} is a pivot column")
        p = self.p
        v: dict[int, int] = {free_col: 1}
        for piv in sorted(self.pivots, reverse=True):
            idx, val = self.pivots[piv]
            acc = 0
            for c, w in zip(idx.tolist(), val.tolist()):
                if c != piv and c in v:
                    acc = (acc - w * v[c]) % p
            if acc:
                v[piv] = acc
        return v


def echelon_mod(rows, ncols: int, p: int) -> ModularEchelon:
    ech = ModularEchelon(ncols, p)
    for row in rows:
        ech.add_row(row)
    return ech


class ModularDisagreement(RuntimeError):
    """Raised when independent primes disagree; indicates an unlucky prime
    (or a bug) and is never silently swallowed."""


def rank_modular(rows, ncols: int, primes=None) -> int:
    """Rank via two primes with identical pivot structure required."""
    rows = integer_rows(rows)
    primes = tuple(primes) if primes else PRIMES[:2]
    results = []
    for p in primes:
        ech = echelon_mod(rows, ncols, p)
        results.append((ech.rank, ech.pivot_cols))
    if any(r != results[0] for r in results[1:]):
        raise ModularDisagreement(f"pivot structure differs across {primes}")
    return results[0][0]


# --- rational reconstruction and certification ------------------------------

def rational_reconstruct(a: int, m: int):
    """Find n/d = a (mod m) with |n|, d <= sqrt(m/2); None if impossible."""
    a %= m
    if a == 0:
        return mpq(0)
    bound = math.isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r1 == 0 or abs(s1) > bound or math.gcd(r1, abs(s1)) != 1:
        return None
    return mpq(r1, s1)


@dataclass(frozen=True)
class CertifiedKernel:
    """Exact, verified kernel data: rank is certified on both sides."""

    rank: int
    ncols: int
    pivot_cols: tuple
    free_cols: tuple
    vectors: tuple  # kernel vectors as dicts {col: mpq}, v[free_cols[i]] = 1


def certified_kernel(rows, ncols: int, max_primes: int = len(PRIMES)) -> CertifiedKernel:
    """Kernel basis over Q, modular with exact verification.

    Eliminates mod one prime, lifts the kernel vectors by rational
    reconstruction (CRT-ing in further primes while reconstruction fails) and
    verifies A v = 0 exactly; any failure restarts with the next prime."""
    rows = integer_rows(rows)
    for start in range(max_primes):
        p0 = PRIMES[start]
        ech = echelon_mod(rows, ncols, p0)
        free = ech.free_cols()
        residues = {f: ech.kernel_vector(f) for f in free}
        modulus = p0
        extra = start
        while True:
            lifted = _try_lift(residues, modulus)
            # a spurious lift (wrong fraction that happens to fit the bound)
            # fails exact verification; widen the modulus and retry
            if lifted is not None and _verify_kernel(rows, lifted.values()):
                return CertifiedKernel(
                    rank=ech.rank,
                    ncols=ncols,
                    pivot_cols=tuple(ech.pivot_cols),
                    free_cols=tuple(free),
                    vectors=tuple(lifted[f] for f in free),
                )
            extra += 1
            if extra >= max_primes:
                break
            p1 = PRIMES[extra]
            ech1 = echelon_mod(rows, ncols, p1)
            if ech1.pivot_cols != ech.pivot_cols:
                break  # inconsistent pivots: the start prime was unlucky
            for f in free:
                residues[f] = _crt_vec(residues[f], modulus, ech1.kernel_vector(f), p1)
            modulus *= p1
    raise ModularDisagreement("kernel certification failed on all primes")


def _crt_vec(v0: dict, m0: int, v1: dict, m1: int) -> dict:
    inv = pow(m0 % m1, m1 - 2, m1)
    out = {}
    for c in set(v0) | set(v1):
        a0, a1 = v0.get(c, 0), v1.get(c, 0)
        out[c] = (a0 + ((a1 - a0) * inv % m1) * m0) % (m0 * m1)
    return out


def _try_lift(residues: dict, modulus: int):
    lifted = {}
    for f, vec in residues.items():
        lv = {}
        for c, a in vec.items():
            q = rational_reconstruct(a, modulus)
            if q is None:
                return None
            if q:
                lv[c] = q
        lifted[f] = lv
    return lifted


def _verify_kernel(rows, vectors) -> bool:
    vecs = []
    for v in vectors:
        denom = reduce(math.lcm, (int(mpq(x).denominator) for x in v.values()), 1)
        vecs.append({c: mpz(mpq(x) * denom) for c, x in v.items()})
    for row in rows:
        for v in vecs:
            if len(row) > len(v):
                small, big = v, row
            else:
                small, big = row, v
            acc = 0
            for c, x in small.items():
                y = big.get(c)
                if y is not None:
                    acc += x * y
            if acc != 0:
                return False
    return True


# --- compiled modular RREF (the fast path for large eliminations) -----------

@numba.njit(cache=True)
def _modinv(a, p):  # pragma: no cover - exercised through _eliminate
    e = p - 2
    r = 1
    b = a % p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


@numba.njit(cache=True)
def _eliminate(rptr, ridx, rval, ncols, p, reduce_above):
    """Left-looking sparse elimination over F_p with a dense working row.

    Invariant: every stored row is normalized (leading value 1) and its
    leading column is its pivot, so one ascending sweep per incoming row
    suffices.  With reduce_above, a second descending pass clears pivot
    columns above each pivot; reduced rows then touch only free columns,
    so that pass is also a single ascending sweep per row."""
    nrows = rptr.shape[0] - 1
    maxrank = min(nrows, ncols)
    pivot_of_col = np.full(ncols, -1, np.int64)
    pivot_col_of_row = np.empty(maxrank, np.int64)
    cap = max(rptr[nrows] * 4 + 16, 1024)
    eidx = np.empty(cap, np.int64)
    evals = np.empty(cap, np.int64)
    eptr = np.zeros(maxrank + 1, np.int64)
    rank = 0
    buf = np.zeros(ncols, np.int64)
    for r in range(nrows):
        lo, hi = rptr[r], rptr[r + 1]
        if lo == hi:
            continue
        start = ncols
        for t in range(lo, hi):
            c = ridx[t]
            buf[c] = (buf[c] + rval[t]) % p
            if c < start:
                start = c
        c = start
        while c < ncols:
            v = buf[c]
            if v != 0:
                pr = pivot_of_col[c]
                if pr < 0:
                    break
                for t in range(eptr[pr], eptr[pr + 1]):
                    cc = eidx[t]
                    buf[cc] = (buf[cc] - v * evals[t]) % p
            c += 1
        if c < ncols:
            inv = _modinv(buf[c], p)
            cnt = 0
            for cc in range(c, ncols):
                if buf[cc] != 0:
                    cnt += 1
            while eptr[rank] + cnt > eidx.shape[0]:
                grown_i = np.empty(eidx.shape[0] * 2, np.int64)
                grown_i[: eptr[rank]] = eidx[: eptr[rank]]
                eidx = grown_i
                grown_v = np.empty(evals.shape[0] * 2, np.int64)
                grown_v[: eptr[rank]] = evals[: eptr[rank]]
                evals = grown_v
            w = eptr[rank]
            for cc in range(c, ncols):
                if buf[cc] != 0:
                    eidx[w] = cc
                    evals[w] = buf[cc] * inv % p
                    buf[cc] = 0
                    w += 1
            eptr[rank + 1] = w
            pivot_of_col[c] = rank
            pivot_col_of_row[rank] = c
            rank += 1
    order = np.argsort(pivot_col_of_row[:rank])
    if not reduce_above:
        # repack rows in ascending pivot order
        total = eptr[rank]
        fidx = np.empty(total, np.int64)
        fvals = np.empty(total, np.int64)
        fptr = np.zeros(rank + 1, np.int64)
        w = 0
        for s in range(rank):
            row = order[s]
            for t in range(eptr[row], eptr[row + 1]):
                fidx[w] = eidx[t]
                fvals[w] = evals[t]
                w += 1
            fptr[s + 1] = w
        for c in range(ncols):
            if pivot_of_col[c] >= 0:
                pivot_of_col[c] = np.searchsorted(
                    pivot_col_of_row[:rank][order], c
                )
        return rank, pivot_col_of_row[:rank][order], fptr, fidx, fvals, pivot_of_col
    # descending pass; rows written in descending pivot order, reversed after
    cap2 = eptr[rank] * 2 + 16
    fidx = np.empty(cap2, np.int64)
    fvals = np.empty(cap2, np.int64)
    fptr = np.zeros(rank + 1, np.int64)
    slot_of_col = np.full(ncols, -1, np.int64)
    w = 0
    for s in range(rank - 1, -1, -1):
        row = order[s]
        pc = pivot_col_of_row[row]
        for t in range(eptr[row], eptr[row + 1]):
            buf[eidx[t]] = evals[t]
        cc = pc + 1
        while cc < ncols:
            v = buf[cc]
            if v != 0:
                sl = slot_of_col[cc]
                if sl >= 0:
                    for t in range(fptr[sl], fptr[sl + 1]):
                        c2 = fidx[t]
                        buf[c2] = (buf[c2] - v * fvals[t]) % p
            cc += 1
        cnt = 0
        for cc in range(pc, ncols):
            if buf[cc] != 0:
                cnt += 1
        slot = rank - 1 - s
        while fptr[slot] + cnt > fidx.shape[0]:
            grown_i = np.empty(fidx.shape[0] * 2, np.int64)
            grown_i[: fptr[slot]] = fidx[: fptr[slot]]
            fidx = grown_i
            grown_v = np.empty(fvals.shape[0] * 2, np.int64)
            grown_v[: fptr[slot]] = fvals[: fptr[slot]]
            fvals = grown_v
        w = fptr[slot]
        for cc in range(pc, ncols):
            if buf[cc] != 0:
                fidx[w] = cc
                fvals[w] = buf[cc]
                buf[cc] = 0
                w += 1
        fptr[slot + 1] = w
        slot_of_col[pc] = slot
    # reverse into ascending pivot order
    total = fptr[rank]
    gidx = np.empty(total, np.int64)
    gvals = np.empty(total, np.int64)
    gptr = np.zeros(rank + 1, np.int64)
    w = 0
    for s in range(rank - 1, -1, -1):
        for t in range(fptr[s], fptr[s + 1]):
            gidx[w] = fidx[t]
            gvals[w] = fvals[t]
            w += 1
        gptr[rank - s] = w
    sorted_pivots = pivot_col_of_row[:rank][order]
    for c in range(ncols):
        if pivot_of_col[c] >= 0:
            pivot_of_col[c] = np.searchsorted(sorted_pivots, c)
    return rank, sorted_pivots, gptr, gidx, gvals, pivot_of_col


class ModularRREF:
    """Row-reduced echelon data over F_p with vectorized entry lookup.

    Rows are stored in ascending pivot order; with ``reduce_above`` the row
    for pivot column ``c`` is supported on ``{c}`` and free columns only, so
    kernel vectors read off directly:  v_f[c] = -row[c][f], v_f[f] = 1."""

    def __init__(self, rows, ncols, p, reduce_above=True):
        rows = [r for r in rows]
        nnz = sum(len(r) for r in rows)
        rptr = np.zeros(len(rows) + 1, dtype=np.int64)
        ridx = np.empty(nnz, dtype=np.int64)
        rval = np.empty(nnz, dtype=np.int64)
        w = 0
        for i, row in enumerate(rows):
            for c in sorted(row):
                ridx[w] = c
                rval[w] = row[c] % p
                w += 1
            rptr[i + 1] = w
        (self.rank, pivots, self.rowptr, self.rowidx, self.rowval,
         self.pivot_slot_of_col) = _eliminate(
            rptr, ridx, rval, ncols, p, reduce_above)
        self.pivot_cols = pivots
        self.ncols = ncols
        self.p = p
        self.reduced = reduce_above

    def free_cols(self):
        return np.setdiff1d(np.arange(self.ncols, dtype=np.int64),
                            self.pivot_cols)

    def lookup(self, slots, cols):
        """Values at (row slot, column) pairs, vectorized per distinct row."""
        out = np.zeros(len(slots), dtype=np.int64)
        if len(slots) == 0:
            return out
        slots = np.asarray(slots, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        order = np.argsort(slots, kind="stable")
        srt = slots[order]
        bounds = np.searchsorted(srt, np.arange(self.rank + 1))
        for s in range(self.rank):
            lo, hi = bounds[s], bounds[s + 1]
            if lo == hi:
                continue
            sel = order[lo:hi]
            ri = self.rowidx[self.rowptr[s]:self.rowptr[s + 1]]
            rv = self.rowval[self.rowptr[s]:self.rowptr[s + 1]]
            pos = np.searchsorted(ri, cols[sel])
            pos_ok = pos < len(ri)
            hit = np.zeros(len(sel), dtype=bool)
            hit[pos_ok] = ri[pos[pos_ok]] == cols[sel][pos_ok]
            out[sel[hit]] = rv[pos[hit]]
        return out

    def kernel_vector(self, f):
        if not self.reduced:
            raise ValueError("kernel vectors need reduce_above=True")
        if self.pivot_slot_of_col[f] >= 0:
            raise ValueError(f"{f} is a pivot column")
        v = {int(f): 1}
        for s in range(self.rank):
            ri = self.rowidx[self.rowptr[s]:self.rowptr[s + 1]]
            pos = np.searchsorted(ri, f)
            if pos < len(ri) and ri[pos] == f:
                val = int(self.rowval[self.rowptr[s] + pos])
                v[int(self.pivot_cols[s])] = (-val) % self.p
        return v
