"""Isotypic decomposition of the stratum homology under S_n x GL.

The label torus splits the homology of the complex for F(ve_g S^d, n) into
weight strata; the GL_g-structure assembles the dominant-weight strata into
Schur functors.  Writing H = sum_mu S_mu(Q^g) (x) N_mu with mu running over
partitions of the label count k, the weight-tau subspace has S_n-character

    chi_tau = sum_{mu >= tau} K_{mu,tau} char(N_mu)        (Kostka numbers)

which is unitriangular in dominance order, so the N_mu are recovered by a
top-down solve over any up-closed set of weights.

Table normalization.  Coefficients are reported as multiplicities of
S^lambda (x) S_mu(Q^g) at horizontal degree p, in the normalization of the
even-sphere complex; an odd-sphere (circle) run computes the same table
after conjugating the GL shape, mu <-> mu'.  Single blocks of the table can
therefore be reached along two independent routes, and the choice is made
per shape by a cost estimate: a shape whose conjugate has few distinct
parts is cheap through the circle run and expensive through the even run,
and vice versa.  ``table_coefficients(..., scheme=...)`` pins the route
globally ("circle", "even") or per shape ("mixed"); the default "auto"
uses the circle route everywhere through n = 6 and the mixed rule beyond.

The two routes are deliberately kept runnable on the same input so their
agreement stays a checkable statement rather than an assumption; see
``cross_validate``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cecomplex import StratumHomology, stratum_dim, stratum_homology
from .combinat import conjugate, dominates, kostka, partitions_of
from .schar import ClassFunction, decompose

MIXED_THRESHOLD = 7


class DecompositionError(RuntimeError):
    """A character failed to decompose with nonnegative integer parts."""


def schur_multiplicities(cf: ClassFunction) -> dict:
    """Multiplicities of the irreducible S_n-characters in cf.

    Raises DecompositionError unless all are nonnegative integers, which is
    the end-to-end consistency check of the trace pipeline."""
    try:
        mults = decompose(cf)
    except ValueError as exc:
        raise DecompositionError(str(exc)) from exc
    out = {}
    for lam, m in mults.items():
        if m == 0:
            continue
        if m < 0:
            raise DecompositionError(
                f"multiplicity of {lam} is {m}, not a nonnegative integer"
            )
        out[lam] = int(m)
    return out


def dominance_upset(rho: tuple) -> list:
    """Partitions of |rho| dominating rho, most dominant first."""
    return [tau for tau in partitions_of(sum(rho)) if dominates(tau, rho)]


def stratum_cost(n: int, tau: tuple) -> int:
    """Proxy for the work of one stratum: the kernel computation is bilinear
    in the two relevant chain dimensions."""
    k = sum(tau)
    P = n - k - 1
    if P < 0:
        return stratum_dim(n, n, tau)
    lo = stratum_dim(n, n - P, tau)
    hi = stratum_dim(n, n - P - 1, tau)
    return lo * (hi + 1)


def route_for_shape(n: int, rho: tuple) -> str:
    """Cheaper of the two routes to the table coefficients at GL shape rho."""
    even = sum(stratum_cost(n, tau) for tau in dominance_upset(rho))
    circ = sum(stratum_cost(n, tau) for tau in dominance_upset(conjugate(rho)))
    return "circle" if circ <= even else "even"


def kostka_solve(chars: dict) -> dict:
    """Invert chi_tau = sum_{mu >= tau} K_{mu,tau} N_mu over the keys.

    ``chars`` maps an up-closed (under dominance) set of partitions of a
    common size to S_n-characters; returns N on the same set."""
    if not chars:
        return {}
    k = sum(next(iter(chars)))
    solved: dict = {}
    for mu in partitions_of(k):
        if mu not in chars:
            continue
        acc = chars[mu]
        for eta, val in solved.items():
            coeff = kostka(eta, mu)
            if coeff:
                acc = acc - coeff * val
        solved[mu] = acc
    missing = set(chars) - set(solved)
    if missing:
        raise ValueError(f"weights of mixed sizes: {missing}")
    return solved


def weight_stratum_characters(n: int, d: int, taus, engine: str = "auto") -> dict:
    """stratum_homology for each dominant weight, as {tau: StratumHomology}."""
    return {tuple(tau): stratum_homology(n, d, tuple(tau), engine=engine)
            for tau in taus}


@dataclass(frozen=True)
class EquivDecomposition:
    """Table of multiplicities of S^lambda (x) S_mu(Q^g) at degree p.

    coeffs is a sorted tuple of ((p, lam, mu), mult) with lam a partition
    of n, mu a partition of the label count of the slot, and mult > 0.

    Two renderings of the same table are in use.  In the "coefficient"
    convention mu is the GL shape of the even-sphere normalization and the
    cohomological degree on a wedge of d-spheres is p + d * |mu| after
    conjugating mu for odd d.  In the "circle-evaluated" convention
    (produced by ``parity_transpose``) mu is already the shape seen on
    wedges of ``sphere_dim``-spheres and the degree is p + sphere_dim *
    |mu| as stored."""

    n: int
    coeffs: tuple
    convention: str = "coefficient"
    sphere_dim: int = 1

    @staticmethod
    def from_dict(n: int, coeffs: dict, convention: str = "coefficient",
                  sphere_dim: int = 1) -> "EquivDecomposition":
        items = tuple(sorted((key, m) for key, m in coeffs.items() if m))
        return EquivDecomposition(n, items, convention, sphere_dim)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def multiplicity(self, p: int, lam, mu) -> int:
        return self.as_dict().get((p, tuple(lam), tuple(mu)), 0)

    def weights(self) -> list:
        return sorted({sum(mu) for (_, _, mu), _ in self.coeffs})

    def entries(self):
        """Yield (p, i, lam, mu, mult) with i the cohomological degree."""
        d = self.sphere_dim
        for (p, lam, mu), m in self.coeffs:
            yield p, p + d * sum(mu), lam, mu, m

    def isotypic(self, lam) -> dict:
        """The GL-side of the lam-isotypic part: {(p, mu): mult}."""
        lam = tuple(lam)
        return {(p, mu): m for (p, l, mu), m in self.coeffs if l == lam}

    def character(self, p: int, k: int) -> dict:
        """{mu |- k at degree p: S_n-character of the multiplicity space}."""
        out: dict = {}
        for (q, lam, mu), m in self.coeffs:
            if q == p and sum(mu) == k:
                out.setdefault(mu, {})[lam] = m
        return out


def _accumulate(coeffs: dict, solved: dict, transposed: bool) -> None:
    for mu, hom in solved.items():
        shape = conjugate(mu) if transposed else mu
        for p, cf in hom:
            for lam, m in schur_multiplicities(cf).items():
                key = (p, lam, shape)
                coeffs[key] = coeffs.get(key, 0) + m


def _window_pairs(h: StratumHomology):
    """The two (degree, character) slots of one stratum."""
    return ((h.P, h.chi_low), (h.P + 1, h.chi_high))


def table_coefficients(n: int, scheme: str = "auto", engine: str = "auto",
                       weights=None) -> EquivDecomposition:
    """The full decomposition table for F(wedge of spheres, n).

    scheme: "circle" runs every stratum on odd spheres, "even" on even
    spheres, "mixed" picks the cheaper route per GL shape, "auto" defers
    to "circle" for small n and "mixed" from n = MIXED_THRESHOLD up.
    weights restricts the label counts k (default: all of 0..n)."""
    if scheme == "auto":
        scheme = "circle" if n < MIXED_THRESHOLD else "mixed"
    if scheme not in ("circle", "even", "mixed"):
        raise ValueError(f"unknown scheme {scheme!r}")
    if n == 0:
        return EquivDecomposition.from_dict(0, {(0, (), ()): 1})

    ks = range(n + 1) if weights is None else sorted(set(weights))
    coeffs: dict = {}
    for k in ks:
        shapes = partitions_of(k)
        if scheme == "mixed":
            routed = {rho: route_for_shape(n, rho) for rho in shapes}
        else:
            routed = {rho: scheme for rho in shapes}

        circle_taus: set = set()
        even_taus: set = set()
        for rho, route in routed.items():
            if route == "circle":
                circle_taus.update(dominance_upset(conjugate(rho)))
            else:
                even_taus.update(dominance_upset(rho))

        for d, taus, transposed in ((1, circle_taus, True),
                                    (2, even_taus, False)):
            if not taus:
                continue
            homs = weight_stratum_characters(n, d, taus, engine=engine)
            low = kostka_solve({t: h.chi_low for t, h in homs.items()})
            high = kostka_solve({t: h.chi_high for t, h in homs.items()})
            wanted = {conjugate(r) if transposed else r
                      for r, route in routed.items()
                      if (route == "circle") == transposed}
            solved = {mu: ((homs[mu].P, low[mu]), (homs[mu].P + 1, high[mu]))
                      for mu in homs if mu in wanted}
            _accumulate(coeffs, solved, transposed)
    return EquivDecomposition.from_dict(n, coeffs)


@lru_cache(maxsize=None)
def cached_table(n: int, scheme: str = "auto", engine: str = "auto") -> EquivDecomposition:
    return table_coefficients(n, scheme=scheme, engine=engine)


def cross_validate(n: int, engine: str = "auto") -> EquivDecomposition:
    """Run both routes on every shape and insist on identical tables.

    This is the two-sided consistency check between the odd- and
    even-sphere complexes; it costs roughly both runs."""
    a = table_coefficients(n, scheme="circle", engine=engine)
    b = table_coefficients(n, scheme="even", engine=engine)
    if a != b:
        da, db = a.as_dict(), b.as_dict()
        diff = {key: (da.get(key, 0), db.get(key, 0))
                for key in set(da) | set(db)
                if da.get(key, 0) != db.get(key, 0)}
        raise DecompositionError(f"route disagreement at n={n}: {diff}")
    return a


def parity_transpose(dec: EquivDecomposition, d: int) -> EquivDecomposition:
    """Convert between the coefficient table and its value on d-spheres.

    Evaluating the coefficient table on a wedge of d-spheres conjugates
    every GL shape when d is odd and keeps it when d is even; degrees are
    re-read as p + d * |mu|.  Applying the map to an evaluated table (with
    matching d) undoes it, so the odd case is an involution."""
    if d < 1:
        raise ValueError(f"sphere dimension must be >= 1: {d}")
    coeffs = {}
    for (p, lam, mu), m in dec.coeffs:
        shape = conjugate(mu) if d % 2 else mu
        coeffs[(p, lam, shape)] = m
    if dec.convention == "coefficient":
        return EquivDecomposition.from_dict(
            dec.n, coeffs, convention="circle-evaluated", sphere_dim=d)
    if dec.sphere_dim != d:
        raise ValueError(
            f"table was evaluated at d={dec.sphere_dim}, cannot undo at d={d}")
    return EquivDecomposition.from_dict(dec.n, coeffs)


def full_decomposition(n: int, scheme: str = "auto",
                       engine: str = "auto") -> EquivDecomposition:
    """The decomposition of H_c(F(wedge of circles, n)) in evaluated form.

    Every nonzero entry sits in degree i = p + |mu| with i in {n-1, n}."""
    return parity_transpose(cached_table(n, scheme=scheme, engine=engine), 1)


def weightspace_character(n: int, mu, p: int = None, i: int = None,
                          engine: str = "auto") -> ClassFunction:
    """S_n-character of the multidegree-mu part of H^{i,p} on circles.

    mu is a label multidegree on a wedge of len(mu) circles; i is the
    total degree p + |mu|.  Omitting p (or i) sums the window slots that
    match the remaining constraint."""
    mu = tuple(mu)
    h = stratum_homology(n, 1, mu, engine=engine)
    q = sum(mu)
    out = ClassFunction.from_dict(n, {})
    for slot_p, cf in ((h.P, h.chi_low), (h.P + 1, h.chi_high)):
        if p is not None and slot_p != p:
            continue
        if i is not None and slot_p + q != i:
            continue
        out = out + cf
    return out


def kostka_invert(n: int, chars: dict, p: int, i: int) -> dict:
    """Solve the weight characters at one (p, i) slot for Schur rows.

    chars maps every partition mu of i - p to the character returned by
    ``weightspace_character(n, mu, p, i)``; the result maps (lam, nu) to
    the multiplicity of S^lam (x) S_nu, obtained by the unitriangular
    dominance solve followed by S_n-decomposition.  Raises
    DecompositionError if any multiplicity is negative or fractional."""
    k = i - p
    for mu in chars:
        if sum(mu) != k:
            raise ValueError(f"weight {mu} does not sit in degree {i} at p={p}")
    missing = {tuple(mu) for mu in partitions_of(k)} - set(chars)
    if missing:
        raise ValueError(f"need every weight of size {k}: missing {missing}")
    out = {}
    for nu, cf in kostka_solve(chars).items():
        for lam, m in schur_multiplicities(cf).items():
            out[(lam, nu)] = m
    return out


def isotypic(dec: EquivDecomposition, lam) -> dict:
    """One row of the evaluated table: {(i, mu): mult} for fixed lam.

    Requires the circle-evaluated convention so that the degree keying
    i = p + sphere_dim * |mu| is meaningful."""
    if dec.convention != "circle-evaluated":
        raise ValueError("isotypic rows are read off the evaluated table")
    lam = tuple(lam)
    return {(i, mu): m for p, i, l, mu, m in dec.entries() if l == lam}
