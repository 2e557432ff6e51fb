"""Class functions on symmetric groups; irreducible characters.

Characters are computed by the Murnaghan-Nakayama rule in its beta-set
(first-column hook lengths) form: removing a border strip of size r is
subtracting r from one beta entry so that the result is again a distinct
nonnegative set, with sign (-1)^(number of beta entries jumped over).
Values are exact integers; inner products are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from gmpy2 import mpq

from . import combinat as cb


@dataclass(frozen=True)
class ClassFunction:
    """An exact class function on S_n, stored by cycle type."""

    n: int
    values: tuple  # tuple of (cycle_type, value), sorted by cycle type

    @staticmethod
    def from_dict(n: int, values: dict) -> "ClassFunction":
        items = tuple(
            (tuple(mu), v) for mu, v in sorted(values.items()) if v != 0
        )
        for mu, _ in items:
            if sum(mu) != n:
                raise ValueError(f"cycle type {mu} does not have size {n}")
        return ClassFunction(n, items)

    def as_dict(self) -> dict:
        return dict(self.values)

    def __call__(self, mu) -> object:
        mu = tuple(mu)
        if sum(mu) != self.n:
            raise ValueError(f"cycle type {mu} does not have size {self.n}")
        return dict(self.values).get(mu, 0)

    def _binop(self, other: "ClassFunction", op) -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("class functions on different groups")
        a, b = dict(self.values), dict(other.values)
        keys = set(a) | set(b)
        return ClassFunction.from_dict(
            self.n, {mu: op(a.get(mu, 0), b.get(mu, 0)) for mu in keys}
        )

    def __add__(self, other):
        return self._binop(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._binop(other, lambda x, y: x - y)

    def __mul__(self, other):
        """Pointwise product = character of the tensor product."""
        if isinstance(other, ClassFunction):
            return self._binop(other, lambda x, y: x * y)
        return ClassFunction.from_dict(
            self.n, {mu: v * other for mu, v in self.values}
        )

    __rmul__ = __mul__

    def __neg__(self):
        return self * (-1)

    def is_zero(self) -> bool:
        return not self.values

    @property
    def dim(self):
        """Value at the identity class."""
        return self((1,) * self.n) if self.n else self(())


@lru_cache(maxsize=None)
def _mn_value(beta: tuple, mu: tuple) -> int:
    """Character value from a beta-set (ascending distinct tuple)."""
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    bset = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        crossed = sum(1 for c in beta if nb < c < b)
        new_beta = tuple(sorted(bset - {b} | {nb}))
        term = _mn_value(new_beta, rest)
        total += -term if crossed % 2 else term
    return total


def character_value(lam, mu) -> int:
    """chi^lam evaluated on the class of cycle type mu (|lam| = |mu|)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("shape and cycle type must have the same size")
    ell = len(lam)
    beta = tuple(sorted(lam[i] + (ell - 1 - i) for i in range(ell)))
    # largest cycles first keeps the recursion shallow
    return _mn_value(beta, tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def irreducible_character(lam) -> ClassFunction:
    lam = tuple(lam)
    n = sum(lam)
    return ClassFunction.from_dict(
        n, {mu: character_value(lam, mu) for mu in cb.partitions_of(n)}
    )


@lru_cache(maxsize=None)
def character_table(n: int) -> dict:
    """All irreducible characters of S_n, keyed by partition."""
    return {lam: irreducible_character(lam) for lam in cb.partitions_of(n)}


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction.from_dict(n, {mu: 1 for mu in cb.partitions_of(n)})


def sign_character(n: int) -> ClassFunction:
    return ClassFunction.from_dict(
        n, {mu: (-1) ** (n - len(mu)) for mu in cb.partitions_of(n)}
    )


def inner_product(f: ClassFunction, g: ClassFunction):
    """Exact <f, g> = (1/n!) sum_sigma f(sigma) g(sigma); characters are
    integer valued so no conjugation is needed."""
    if f.n != g.n:
        raise ValueError("class functions on different groups")
    fd, gd = dict(f.values), dict(g.values)
    acc = mpq(0)
    for mu in set(fd) & set(gd):
        acc += mpq(fd[mu] * gd[mu], cb.zee(mu))
    return acc


def decompose(f: ClassFunction) -> dict:
    """Multiplicities of f in the irreducible basis; must be integers.

    Multiplicities may be negative (virtual characters are allowed); a
    non-integer inner product raises ValueError."""
    out = {}
    for lam, chi in character_table(f.n).items():
        c = inner_product(f, chi)
        if c.denominator != 1:
            raise ValueError(f"non-integer multiplicity {c} at {lam}")
        c = int(c)
        if c:
            out[lam] = c
    return out


def frobenius_ch(f: ClassFunction):
    """Frobenius characteristic: sum_mu f(mu)/z_mu p_mu as a SymFunc."""
    from . import symfunc  # deferred: symfunc builds on this module

    terms = {
        mu: symfunc.LaurentPoly.constant(mpq(v, cb.zee(mu)))
        for mu, v in f.values
    }
    return symfunc.SymFunc("p", terms, degree_cap=f.n)


def class_size(mu) -> int:
    return factorial(sum(mu)) // cb.zee(mu)
