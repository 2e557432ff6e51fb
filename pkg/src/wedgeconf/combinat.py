"""Partitions, Stirling numbers, Kostka numbers, small arithmetic helpers.

Everything here is exact integer combinatorics.  Partitions are modelled as
tuples of weakly decreasing positive ints; the :class:`Partition` wrapper only
adds validation and a couple of conveniences, and every function accepts plain
tuples.  The empty partition is ``()``.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        t = tuple(int(a) for a in parts)
        if any(a <= 0 for a in t):
            raise ValueError(f"partition parts must be positive: {t}")
        if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {t}")
        return super().__new__(cls, t)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return Partition(conjugate(self))


def conjugate(lam: Sequence[int]) -> tuple:
    """Transpose of the Young diagram."""
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a > i) for i in range(lam[0]))


def partitions_of(n: int, max_part: int | None = None) -> list:
    """All partitions of n in reverse lexicographic order, (n) first.

    ``max_part`` restricts the largest allowed part (used for truncated
    generating-function work)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partitions_of(n, n if max_part is None else min(max_part, n))


@lru_cache(maxsize=None)
def _partitions_of(n: int, max_part: int) -> list:
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order: partial sums of lam are >= those of mu (equal sizes)."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of the same size")
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def zee(lam: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    z = 1
    mult: dict[int, int] = {}
    for a in lam:
        mult[a] = mult.get(a, 0) + 1
    for a, m in mult.items():
        z *= a**m * math.factorial(m)
    return z


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, k: int) -> int:
    """Number of permutations of n with k cycles (c(n, k) >= 0)."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return stirling1_unsigned(n - 1, k - 1) + (n - 1) * stirling1_unsigned(n - 1, k)


def stirling1_signed(n: int, k: int) -> int:
    """Coefficient of x^k in the falling factorial x(x-1)...(x-n+1)."""
    return (-1) ** (n - k) * stirling1_unsigned(n, k)


def verify_stirling_identity(n: int, k: int) -> tuple:
    """Both sides of sum_h s(n,h)*binom(h,k) = s(n-1,k) + s(n-1,k-1).

    Signed Stirling numbers; returns (lhs, rhs) so callers can assert
    equality.  Requires n >= 1."""
    if n < 1:
        raise ValueError("identity needs n >= 1")
    lhs = sum(stirling1_signed(n, h) * math.comb(h, k) for h in range(k, n + 1))
    rhs = stirling1_signed(n - 1, k) + (stirling1_signed(n - 1, k - 1) if k >= 1 else 0)
    return lhs, rhs


def hook_dim(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = tuple(lam)
    n = sum(lam)
    conj = conjugate(lam)
    denom = 1
    for i, row in enumerate(lam):
        for j in range(row):
            denom *= row - j + conj[j] - i - 1
    q, r = divmod(math.factorial(n), denom)
    assert r == 0
    return q


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    mu may be any sequence of nonnegative integers (content vector); the count
    only depends on it up to reordering.  Zero parts are allowed and ignored.
    """
    lam = tuple(lam)
    content = tuple(int(a) for a in mu)
    if any(a < 0 for a in content):
        raise ValueError("content entries must be nonnegative")
    if sum(lam) != sum(content):
        raise ValueError("shape and content must have the same size")
    mu_sorted = tuple(sorted((a for a in content if a > 0), reverse=True))
    if lam and not dominates(lam, mu_sorted):
        return 0
    content = tuple(a for a in content if a > 0)

    memo: dict[tuple, int] = {}

    def count(shape: tuple, i: int) -> int:
        # SSYT of `shape` with content (content[0], ..., content[i]).
        if i < 0:
            return 1 if not shape else 0
        key = (shape, i)
        if key in memo:
            return memo[key]
        m = content[i]
        total = 0
        # enumerate inner shapes nu with shape/nu a horizontal strip of size m
        rows = len(shape)

        def strip(row: int, remaining: int, nu: tuple) -> None:
            nonlocal total
            if row == rows:
                if remaining == 0:
                    total += count(tuple(a for a in nu if a > 0), i - 1)
                return
            below = shape[row + 1] if row + 1 < rows else 0
            hi = shape[row]
            lo = max(below, hi - remaining)
            # nu must stay weakly decreasing; nu[row-1] >= nu[row] automatic
            # since nu[row] <= shape[row] <= nu[row-1] by the strip condition.
            for v in range(hi, lo - 1, -1):
                strip(row + 1, remaining - (hi - v), nu + (v,))

        strip(0, m, ())
        memo[key] = total
        return total

    return count(lam, len(content) - 1)


@lru_cache(maxsize=None)
def kostka_matrix(q: int) -> dict:
    """All Kostka numbers K[lam, mu] for lam, mu of size q, as a dict."""
    parts = partitions_of(q)
    return {
        (lam, mu): kostka(lam, mu)
        for lam in parts
        for mu in parts
    }


@lru_cache(maxsize=None)
def inverse_kostka_matrix(q: int) -> dict:
    """Inverse of the Kostka matrix for size q: m in terms of Schur.

    Returns dict[(mu, lam)] with m_mu = sum_lam inv[mu, lam] * s_lam.
    Computed by unitriangular back substitution in dominance-compatible
    (reverse lexicographic) order."""
    parts = partitions_of(q)
    K = kostka_matrix(q)
    inv: dict[tuple, int] = {}
    # K[lam, mu] is unitriangular: nonzero only for lam >= mu (dominance),
    # K[lam, lam] = 1.  Solve sum_nu K[nu, ?] ... row by row.
    for mu in parts:
        # solve K x = e_mu; then x[lam] = (K^-1)[lam, mu]
        x: dict[tuple, int] = {}
        for lam in reversed(parts):  # most dominated first
            val = (1 if lam == mu else 0) - sum(
                K[(lam, nu)] * c for nu, c in x.items() if K[(lam, nu)]
            )
            if val:
                x[lam] = val
        for lam, c in x.items():
            inv[(lam, mu)] = c
    return inv


def mobius(n: int) -> int:
    """Number-theoretic Möbius function."""
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list:
    """Positive divisors in increasing order."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# --- partition <-> string, exponent notation "(3,2^2,1)" ---------------------

def parse_partition(text: str) -> tuple:
    """Parse "(3,1)", "(2^2,1)", "(1^4)" or "()" into a partition tuple."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return ()
    parts: list[int] = []
    for chunk in s.split(","):
        chunk = chunk.strip()
        if "^" in chunk:
            base, exp = chunk.split("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(chunk))
    lam = tuple(parts)
    if any(a <= 0 for a in lam) or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ):
        raise ValueError(f"not a partition: {text!r}")
    return lam


def format_partition(lam: Sequence[int], exponents: bool = True) -> str:
    """Render a partition, optionally grouping repeats as "2^3"."""
    lam = tuple(lam)
    if not lam:
        return "()"
    if not exponents:
        return "(" + ",".join(str(a) for a in lam) + ")"
    chunks = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        chunks.append(str(lam[i]) if j - i == 1 else f"{lam[i]}^{j - i}")
        i = j
    return "(" + ",".join(chunks) + ")"


def monomial_eval(tau: Sequence[int], values: Sequence) -> object:
    """The monomial symmetric polynomial m_tau at the given values.

    Sums x^e over the distinct reorderings e of tau padded with zeros to
    len(values); zero when tau has more parts than there are values."""
    tau = tuple(a for a in tau if a)
    if len(tau) > len(values):
        return 0
    padded = tau + (0,) * (len(values) - len(tau))
    total = 0
    seen = set()
    for expo in itertools.permutations(padded):
        if expo in seen:
            continue
        seen.add(expo)
        term = 1
        for v, e in zip(values, expo):
            term *= v ** e
        total += term
    return total


def schur_eval(lam: Sequence[int], values: Sequence) -> object:
    """The Schur polynomial s_lam at the given values, via s = sum K m."""
    lam = tuple(lam)
    return sum(
        (kostka(lam, tau) * monomial_eval(tau, values)
         for tau in partitions_of(sum(lam))),
        0,
    )
