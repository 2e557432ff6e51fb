"""Symmetric functions with exact Laurent-polynomial coefficients.

A :class:`SymFunc` is a finite linear combination of basis elements indexed by
partitions, with coefficients in Z[t, t^-1] tensored with Q (class
:class:`LaurentPoly`), truncated at a mandatory symmetric-degree cap.  The
five classical bases are supported ('p', 's', 'h', 'e', 'm'); all conversions
route through the power-sum basis, where multiplication, Kronecker product,
Hall inner product and plethysm have closed forms.

The plethystic exponential/logarithm pair and the graded characters built from
them (genus-0 moduli via the residue-weighted product formula; the
second-level "hypercommutative/gravity" characters via the (1/t^2)-power
construction) live here as well, since they are pure symmetric-function
constructions.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from . import combinat as cb
from . import schar

BASES = ("p", "s", "h", "e", "m")


def _q(x) -> mpq:
    return x if isinstance(x, type(mpq(0))) else mpq(x)


class LaurentPoly:
    """Exact Laurent polynomial in one variable t over Q."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict | None = None):
        self.c: dict[int, mpq] = {}
        if coeffs:
            for e, v in coeffs.items():
                v = _q(v)
                if v != 0:
                    self.c[int(e)] = v

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def constant(v) -> "LaurentPoly":
        return LaurentPoly({0: v})

    @staticmethod
    def t(exp: int = 1, v=1) -> "LaurentPoly":
        return LaurentPoly({exp: v})

    def is_zero(self) -> bool:
        return not self.c

    def get(self, e: int) -> mpq:
        return self.c.get(e, mpq(0))

    def items(self):
        return sorted(self.c.items())

    @property
    def support(self) -> list:
        return sorted(self.c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.c == other.c
        return self.c == LaurentPoly.constant(other).c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __add__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, mpq(0)) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        r = LaurentPoly()
        r.c = out
        return r

    def __neg__(self):
        r = LaurentPoly()
        r.c = {e: -v for e, v in self.c.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        out: dict[int, mpq] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = out.get(e, mpq(0)) + v1 * v2
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        r = LaurentPoly()
        r.c = out
        return r

    __rmul__ = __mul__

    def scale_exponents(self, d: int) -> "LaurentPoly":
        """Substitute t -> t^d."""
        r = LaurentPoly()
        r.c = {e * d: v for e, v in self.c.items()}
        return r

    def truncate(self, lo: int | None = None, hi: int | None = None) -> "LaurentPoly":
        r = LaurentPoly()
        r.c = {
            e: v
            for e, v in self.c.items()
            if (lo is None or e >= lo) and (hi is None or e <= hi)
        }
        return r

    def exact_div_one_minus_t_power(self, k: int) -> "LaurentPoly":
        """Divide by (1 - t^k), requiring the quotient to be a (finite)
        Laurent polynomial; raises if the division leaves a tail."""
        if self.is_zero():
            return LaurentPoly.zero()
        lo, hi = min(self.c), max(self.c)
        out: dict[int, mpq] = {}
        # quotient T satisfies T(e) = N(e) + T(e - k)
        acc: dict[int, mpq] = {}
        for e in range(lo, hi + 1):
            v = self.c.get(e, mpq(0)) + acc.get(e - k, mpq(0))
            acc[e] = v
            if v:
                out[e] = v
        for e in range(hi + 1, hi + k + 1):
            if acc.get(e - k, mpq(0)) != 0:
                raise ValueError("not divisible by 1 - t^%d" % k)
        r = LaurentPoly()
        r.c = out
        return r

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for e, v in self.items():
            tv = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            bits.append(f"{v}{'*' if tv else ''}{tv}")
        return " + ".join(bits)


# --- expansions of single basis elements in the power-sum basis --------------

@lru_cache(maxsize=None)
def _h_in_p(n: int) -> tuple:
    # h_n = sum_{mu |- n} p_mu / z_mu
    return tuple((mu, mpq(1, cb.zee(mu))) for mu in cb.partitions_of(n))


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> tuple:
    return tuple(
        (mu, mpq((-1) ** (n - len(mu)), cb.zee(mu))) for mu in cb.partitions_of(n)
    )


def _convolve_p(vecs) -> dict:
    """Product of several p-expansions given as {mu: rational} dicts."""
    acc = {(): mpq(1)}
    for vec in vecs:
        nxt: dict[tuple, mpq] = {}
        for mu1, c1 in acc.items():
            for mu2, c2 in vec:
                mu = tuple(sorted(mu1 + mu2, reverse=True))
                nxt[mu] = nxt.get(mu, mpq(0)) + c1 * c2
        acc = nxt
    return acc


@lru_cache(maxsize=None)
def _term_in_p(basis: str, lam: tuple) -> tuple:
    """Expansion of one basis element as ((mu, rational), ...)."""
    if basis == "p":
        return ((lam, mpq(1)),)
    if basis == "h":
        return tuple(_convolve_p([_h_in_p(a) for a in lam]).items())
    if basis == "e":
        return tuple(_convolve_p([_e_in_p(a) for a in lam]).items())
    if basis == "s":
        n = sum(lam)
        return tuple(
            (mu, mpq(schar.character_value(lam, mu), cb.zee(mu)))
            for mu in cb.partitions_of(n)
            if schar.character_value(lam, mu)
        )
    if basis == "m":
        n = sum(lam)
        inv = cb.inverse_kostka_matrix(n)
        acc: dict[tuple, mpq] = {}
        for nu in cb.partitions_of(n):
            c = inv.get((lam, nu), 0)
            if not c:
                continue
            for mu, d in _term_in_p("s", nu):
                acc[mu] = acc.get(mu, mpq(0)) + c * d
        return tuple((mu, v) for mu, v in acc.items() if v)
    raise ValueError(f"unknown basis {basis!r}")


def _p_part_to_s(part: dict, n: int) -> dict:
    """Degree-n p-coefficient dict -> s-coefficient dict (<p_mu, s_lam> =
    character value)."""
    out: dict[tuple, LaurentPoly] = {}
    for lam in cb.partitions_of(n):
        acc = LaurentPoly.zero()
        for mu, poly in part.items():
            chi = schar.character_value(lam, mu)
            if chi:
                acc = acc + poly * chi
        if not acc.is_zero():
            out[lam] = acc
    return out


def _s_part_to_h(s_part: dict, n: int) -> dict:
    """Solve c_lam = sum_mu K[lam, mu] d_mu for d (h-coefficients); the
    Kostka matrix is unitriangular for the dominance order."""
    K = cb.kostka_matrix(n)
    d: dict[tuple, LaurentPoly] = {}
    for lam in reversed(cb.partitions_of(n)):  # most dominated first
        acc = s_part.get(lam, LaurentPoly.zero())
        for mu, poly in d.items():
            k = K[(lam, mu)]
            if k:
                acc = acc - poly * k
        if not acc.is_zero():
            d[lam] = acc
    return d


class SymFunc:
    """Truncated symmetric function with Laurent coefficients."""

    __slots__ = ("basis", "terms", "degree_cap")

    def __init__(self, basis: str, terms: dict, degree_cap: int):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if degree_cap < 0:
            raise ValueError("degree_cap must be nonnegative")
        self.basis = basis
        self.degree_cap = degree_cap
        self.terms: dict[tuple, LaurentPoly] = {}
        for lam, poly in terms.items():
            lam = tuple(lam)
            if sum(lam) > degree_cap:
                continue
            if not isinstance(poly, LaurentPoly):
                poly = LaurentPoly.constant(poly)
            if not poly.is_zero():
                self.terms[lam] = poly

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(degree_cap: int) -> "SymFunc":
        return SymFunc("p", {}, degree_cap)

    @staticmethod
    def one(degree_cap: int) -> "SymFunc":
        return SymFunc("p", {(): LaurentPoly.one()}, degree_cap)

    @staticmethod
    def gen(basis: str, lam, degree_cap: int, coeff=None) -> "SymFunc":
        poly = LaurentPoly.one() if coeff is None else coeff
        return SymFunc(basis, {tuple(lam): poly}, degree_cap)

    # -- basics ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam) -> LaurentPoly:
        return self.terms.get(tuple(lam), LaurentPoly.zero())

    def degrees(self) -> list:
        return sorted({sum(lam) for lam in self.terms})

    def degree_part(self, n: int) -> "SymFunc":
        return SymFunc(
            self.basis,
            {lam: p for lam, p in self.terms.items() if sum(lam) == n},
            self.degree_cap,
        )

    def map_coefficients(self, fn) -> "SymFunc":
        return SymFunc(
            self.basis, {lam: fn(p) for lam, p in self.terms.items()}, self.degree_cap
        )

    def truncate_t(self, lo=None, hi=None) -> "SymFunc":
        return self.map_coefficients(lambda p: p.truncate(lo, hi))

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.to_basis("p").terms == other.to_basis("p").terms

    def __repr__(self):
        if not self.terms:
            return "SymFunc(0)"
        bits = [
            f"({poly})*{self.basis}{lam}"
            for lam, poly in sorted(self.terms.items())
        ]
        return " + ".join(bits)

    # -- ring operations ------------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, SymFunc):
            return other
        return SymFunc("p", {(): LaurentPoly.constant(other)}, self.degree_cap)

    def __add__(self, other):
        other = self._coerced(other)
        cap = min(self.degree_cap, other.degree_cap)
        a = self.to_basis("p") if self.basis != other.basis else self
        b = other.to_basis("p") if self.basis != other.basis else other
        out = dict(a.terms)
        for lam, poly in b.terms.items():
            out[lam] = out.get(lam, LaurentPoly.zero()) + poly
        return SymFunc(a.basis, out, cap)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        return self + (self._coerced(other) * -1)

    def __rsub__(self, other):
        return self._coerced(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, type(mpq(0)), LaurentPoly)):
            poly = other if isinstance(other, LaurentPoly) else LaurentPoly.constant(other)
            return self.map_coefficients(lambda p: p * poly)
        a, b = self.to_basis("p"), other.to_basis("p")
        cap = min(a.degree_cap, b.degree_cap)
        out: dict[tuple, LaurentPoly] = {}
        for mu1, p1 in a.terms.items():
            s1 = sum(mu1)
            for mu2, p2 in b.terms.items():
                if s1 + sum(mu2) > cap:
                    continue
                mu = tuple(sorted(mu1 + mu2, reverse=True))
                prod = p1 * p2
                out[mu] = out.get(mu, LaurentPoly.zero()) + prod
        return SymFunc("p", out, cap)

    __rmul__ = __mul__

    # -- conversions ----------------------------------------------------------

    def to_basis(self, basis: str) -> "SymFunc":
        if basis == self.basis:
            return self
        f = self._to_p()
        if basis == "p":
            return f
        return f._p_to(basis)

    def _to_p(self) -> "SymFunc":
        if self.basis == "p":
            return self
        out: dict[tuple, LaurentPoly] = {}
        for lam, poly in self.terms.items():
            for mu, c in _term_in_p(self.basis, lam):
                add = poly * c
                out[mu] = out.get(mu, LaurentPoly.zero()) + add
        return SymFunc("p", out, self.degree_cap)

    def _p_to(self, basis: str) -> "SymFunc":
        assert self.basis == "p"
        out: dict[tuple, LaurentPoly] = {}
        for n in self.degrees():
            part = {lam: p for lam, p in self.terms.items() if sum(lam) == n}
            if basis == "s":
                converted = _p_part_to_s(part, n)
            elif basis == "m":
                s_part = _p_part_to_s(part, n)
                converted = {}
                K = cb.kostka_matrix(n)
                for lam, poly in s_part.items():
                    for mu in cb.partitions_of(n):
                        k = K[(lam, mu)]
                        if k:
                            converted[mu] = converted.get(mu, LaurentPoly.zero()) + poly * k
            elif basis == "h":
                converted = _s_part_to_h(_p_part_to_s(part, n), n)
            elif basis == "e":
                # omega then read off h-coefficients
                omega_part = {
                    mu: poly * ((-1) ** (sum(mu) - len(mu)))
                    for mu, poly in part.items()
                }
                converted = _s_part_to_h(_p_part_to_s(omega_part, n), n)
            else:
                raise ValueError(f"unknown basis {basis!r}")
            for lam, poly in converted.items():
                if not poly.is_zero():
                    out[lam] = poly
        return SymFunc(basis, out, self.degree_cap)

    # -- degreewise bilinear forms -------------------------------------------

    def kronecker(self, other: "SymFunc") -> "SymFunc":
        """Degreewise internal (Kronecker) product; diagonal on p_mu."""
        a, b = self.to_basis("p"), other.to_basis("p")
        out: dict[tuple, LaurentPoly] = {}
        for mu, p1 in a.terms.items():
            p2 = b.terms.get(mu)
            if p2 is not None:
                out[mu] = p1 * p2 * cb.zee(mu)
        return SymFunc("p", out, min(a.degree_cap, b.degree_cap))

    def hall_inner(self, other: "SymFunc") -> LaurentPoly:
        a, b = self.to_basis("p"), other.to_basis("p")
        acc = LaurentPoly.zero()
        for mu, p1 in a.terms.items():
            p2 = b.terms.get(mu)
            if p2 is not None:
                acc = acc + p1 * p2 * cb.zee(mu)
        return acc

    def omega(self) -> "SymFunc":
        """The standard involution (h <-> e, on p: p_k -> (-1)^(k-1) p_k)."""
        f = self.to_basis("p")
        return SymFunc(
            "p",
            {
                mu: poly * ((-1) ** (sum(mu) - len(mu)))
                for mu, poly in f.terms.items()
            },
            f.degree_cap,
        )

    def dim_poly(self, n: int) -> LaurentPoly:
        """t-graded dimension of the degree-n part (n! times the p_(1^n)
        coefficient)."""
        f = self.to_basis("p")
        import math

        return f.coefficient((1,) * n) * math.factorial(n)

    def schur_decomposition(self, n: int) -> dict:
        """Degree-n part as {t_exponent: {lam: int}}; requires integrality."""
        s = self.degree_part(n).to_basis("s")
        out: dict[int, dict] = {}
        for lam, poly in s.terms.items():
            for e, v in poly.items():
                if v.denominator != 1:
                    raise ValueError(f"non-integer Schur coefficient {v} at {lam}")
                out.setdefault(e, {})[lam] = int(v)
        return out


def convert(f: SymFunc, basis: str) -> SymFunc:
    return f.to_basis(basis)


def schur_gl_dimension(lam, g: int) -> int:
    """dim of the Schur functor S_lam applied to a g-dimensional space
    (hook content formula); zero when lam has more than g rows."""
    lam = tuple(lam)
    if len(lam) > g:
        return 0
    num = den = 1
    conj = cb.conjugate(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            num *= g + j - i
            den *= row - j + conj[j] - i - 1
    q, r = divmod(num, den)
    assert r == 0
    return q


# --- plethysm ----------------------------------------------------------------

def plethysm_pd(f: SymFunc, d: int) -> SymFunc:
    """p_d composed with f: multiply all p-indices and t-exponents by d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    f = f.to_basis("p")
    out: dict[tuple, LaurentPoly] = {}
    for mu, poly in f.terms.items():
        if d * sum(mu) > f.degree_cap:
            continue
        out[tuple(a * d for a in mu)] = poly.scale_exponents(d)
    return SymFunc("p", out, f.degree_cap)


def plethystic_exp(f: SymFunc) -> SymFunc:
    """Exp[f] = sum_k h_k[f]; f must have no degree-0 term."""
    f = f.to_basis("p")
    if () in f.terms:
        raise ValueError("plethystic exponential needs a degree-0-free input")
    cap = f.degree_cap
    pds = {d: plethysm_pd(f, d) for d in range(1, cap + 1)}
    h = [SymFunc.one(cap)]
    for k in range(1, cap + 1):
        acc = SymFunc.zero(cap)
        for i in range(1, k + 1):
            acc = acc + pds[i] * h[k - i]
        h.append(acc * mpq(1, k))
    total = SymFunc.zero(cap)
    for part in h:
        total = total + part
    return total


def plethystic_log(f: SymFunc) -> SymFunc:
    """Log[f] for f = 1 + (positive degree); inverse of plethystic_exp."""
    f = f.to_basis("p")
    if f.coefficient(()) != LaurentPoly.one():
        raise ValueError("plethystic logarithm needs constant term exactly 1")
    cap = f.degree_cap
    x = f - 1
    # ordinary log series; x has minimum symmetric degree >= 1
    log_f = SymFunc.zero(cap)
    power = SymFunc.one(cap)
    for m in range(1, cap + 1):
        power = power * x
        if power.is_zero():
            break
        log_f = log_f + power * mpq((-1) ** (m + 1), m)
    out = SymFunc.zero(cap)
    for d in range(1, cap + 1):
        mb = cb.mobius(d)
        if mb:
            out = out + plethysm_pd(log_f, d) * mpq(mb, d)
    return out


def plethystic_power(a: SymFunc, b) -> SymFunc:
    """a^b = Exp[b * Log a]; b may be a SymFunc, LaurentPoly or scalar."""
    log_a = plethystic_log(a)
    if isinstance(b, SymFunc):
        prod = b * log_a
    else:
        prod = log_a * b
    return plethystic_exp(prod)


# --- graded characters of the genus-0 operad pair ---------------------------

def getzler_m0n(n: int) -> dict:
    """S_n-equivariant Poincare characters of the open genus-0 moduli space.

    Returns {i: SymFunc in the s basis, degree n} for i = 0..n-3, where entry
    i is the character of the i-th homology.  Computed from the weighted
    product formula: apply the "kill monomials 1, p_1, p_1^2, p_2" projector
    to
      (1+t*p_1)/(1-t^2) * prod_m (1 + t^m p_m)^(R_m(t)),
    R_m(t) = (1/m) sum_{d | m} mobius(m/d) t^(-d), then read the degree-n
    part as sum_i (-t)^i ch H_i.  The R_m-powers here are ordinary
    power-series exponentials, A^R = exp(R*log A), with no plethysm on p or t
    (the plethystic reading fails integrality already at n=3); the division
    by 1-t^2 is performed exactly and must leave no tail."""
    if n < 3:
        raise ValueError("need n >= 3")
    cap = n
    z = SymFunc.zero(cap)
    for m in range(1, n + 1):
        r_m = LaurentPoly(
            {-d: mpq(cb.mobius(m // d), m) for d in cb.divisors(m)}
        )
        # ordinary log(1 + t^m p_m) = sum_j (-1)^(j+1) t^(mj) p_(m^j) / j
        log_base = SymFunc(
            "p",
            {
                (m,) * j: LaurentPoly.t(m * j, mpq((-1) ** (j + 1), j))
                for j in range(1, n // m + 1)
            },
            cap,
        )
        z = z + log_base * r_m
    # ordinary exp(z); z has no degree-0 term
    prod = SymFunc.one(cap)
    power = SymFunc.one(cap)
    fact = 1
    for k in range(1, n + 1):
        power = power * z
        if power.is_zero():
            break
        fact *= k
        prod = prod + power * mpq(1, fact)
    prefactor = SymFunc.one(cap) + SymFunc.gen("p", (1,), cap, LaurentPoly.t(1))
    numerator = prefactor * prod
    # kappa kills the monomials of degree <= 2 (whose coefficients are the
    # only non-(1-t^2)-divisible ones); the rest divides exactly.
    kappa = SymFunc(
        "p",
        {
            lam: poly.exact_div_one_minus_t_power(2)
            for lam, poly in numerator.to_basis("p").terms.items()
            if sum(lam) > 2
        },
        cap,
    )
    by_t = kappa.schur_decomposition(n)
    if any(e < 0 or e > n - 3 for e in by_t):
        raise AssertionError(f"unexpected t-degrees {sorted(by_t)} at n={n}")
    out = {}
    for i in range(0, n - 2):
        coeffs = by_t.get(i, {})
        sign = (-1) ** i
        terms = {lam: LaurentPoly.constant(sign * v) for lam, v in coeffs.items()}
        f = SymFunc("s", terms, cap)
        for lam, poly in f.terms.items():
            v = poly.get(0)
            if v < 0:
                raise AssertionError(f"negative multiplicity {v} at {lam}, i={i}")
        out[i] = f
    return out


def m0n_poincare(n: int) -> list:
    """Betti numbers of the open genus-0 moduli space of n marked points."""
    if n < 3:
        raise ValueError("need n >= 3")
    coeffs = [1]
    for i in range(2, n - 1):
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j] += c
            nxt[j + 1] += c * i
        coeffs = nxt
    return coeffs


def whitehouse_characters(n: int) -> dict:
    """Characters of the second-level (hypercommutative-type) S_n-sequence.

    Build C(t) = (1/(1 - t^2 p_1))^(1/t^2), take its degree-n part
    C_n(t) = sum_k c_{2k} t^{2k}, and peel off the Kronecker factor
    (s_(n) + t^2 s_(n-1,1)):   d_0 = c_0,
    d_{2k} = c_{2k} - s_(n-1,1) (x) d_{2k-2}.
    Returns {2k: SymFunc, s basis, degree n}, entries for 0 <= 2k <= 2(n-2);
    all further d's are checked to vanish and every entry is checked to have
    nonnegative integer Schur multiplicities."""
    if n < 1:
        raise ValueError("need n >= 1")
    cap = n
    a = SymFunc(
        "p",
        {(1,) * j: LaurentPoly.t(2 * j) for j in range(0, n + 1)},
        cap,
    )
    c = plethystic_exp(plethystic_log(a) * LaurentPoly.t(-2))
    cn = c.degree_part(n).to_basis("s")
    by_t = cn.schur_decomposition(n)
    if any(e < 0 or e % 2 for e in by_t):
        raise AssertionError(f"unexpected t-degrees {sorted(by_t)} at n={n}")
    max_e = max(by_t) if by_t else 0

    def schur_piece(e: int) -> SymFunc:
        return SymFunc(
            "s",
            {lam: LaurentPoly.constant(v) for lam, v in by_t.get(e, {}).items()},
            cap,
        )

    if n == 1:
        return {0: schur_piece(0)}
    std = SymFunc.gen("s", (n - 1, 1), cap)
    out: dict[int, SymFunc] = {}
    prev = SymFunc.zero(cap)
    for e in range(0, 2 * (n - 2) + 1, 2):
        d = schur_piece(e) - std.kronecker(prev)
        prev = d
        out[e] = d
    # the peeled series must reconstruct C_n exactly:
    # c_{2k} = d_{2k} + std (x) d_{2k-2}, and nothing beyond 2(n-1)
    recon: dict[int, SymFunc] = {}
    for e, d in out.items():
        recon[e] = recon.get(e, SymFunc.zero(cap)) + d
        shifted = std.kronecker(d)
        recon[e + 2] = recon.get(e + 2, SymFunc.zero(cap)) + shifted
    for e in range(0, max(max_e, 2 * (n - 1)) + 2, 2):
        if recon.get(e, SymFunc.zero(cap)) != schur_piece(e):
            raise AssertionError(f"factorization fails at t^{e}, n={n}")
    for e, f in out.items():
        for lam, poly in f.to_basis("s").terms.items():
            v = poly.get(0)
            if v.denominator != 1 or v < 0:
                raise AssertionError(
                    f"bad multiplicity {v} at {lam}, t^{e}, n={n}"
                )
    return out
