"""Closed-form counterparts of the computed decomposition tables.

Each function here evaluates a formula on its own — Stirling-number
multiplicities, first-page dimensions of the weight complex, Euler
characteristics, moduli-space characters through symmetric-function
identities, the genus-2 weight-0 dimensions, the ranks of the short free
resolution, and the conjectural row patterns.  None of them touch the
kernel/homology pipeline, so every agreement with a computed table is
evidence for both sides.  The one partial exception, euler_equivariant,
reuses the chain *basis* bookkeeping (where no linear algebra happens)
and is itself cross-checked against the homology tables.

Degree conventions match the evaluated tables on wedges of circles:
rows are concentrated in cohomological degrees n-1 and n, and a GL
shape mu sits in degree p + |mu|.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

from .cecomplex import (
    WedgeSignature,
    enumerate_basis,
    permutation_of_cycle_type,
    stratum_trace,
)
from .combinat import conjugate, hook_dim, partitions_of, stirling1_unsigned
from .schar import ClassFunction, decompose, irreducible_character, sign_character
from .symfunc import getzler_m0n, whitehouse_characters


class ClosedFormError(RuntimeError):
    """Two independent evaluation routes disagreed."""


# ---------------------------------------------------------------------------
# Stirling multiplicities and chain-level dimensions


def sym_multiplicity_stirling(n: int, k: int, codim: int) -> int:
    """Multiplicity of the k-th symmetric power of H~^1 on circle wedges.

    The count is nonequivariant: it is the number of copies of Sym^k in
    H^{n-codim}_c, which equals the number of permutations of n-1
    letters with k cycles (codim 1), shifted by one cycle for codim 0."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0: {(n, k)}")
    if codim not in (0, 1):
        raise ValueError(f"codim must be 0 or 1: {codim}")
    j = k if codim == 1 else k - 1
    if j < 0:
        return 0
    return stirling1_unsigned(n - 1, j)


class E1Dimension(NamedTuple):
    copies: int
    total: int


def e1_dimension(n: int, p: int, q: int, d: int, g: int) -> E1Dimension:
    """Size of the (p, q) spot of the weight complex before any homology.

    On a wedge of g d-spheres the spot is |s(n, n-p)| * binom(n-p, k)
    copies of the k-th tensor power of the g-dimensional label space,
    where q = d*k; it vanishes unless d divides q and p + k <= n."""
    if q < 0 or p < 0 or p > n or q % d:
        return E1Dimension(0, 0)
    k = q // d
    if p + k > n:
        return E1Dimension(0, 0)
    copies = stirling1_unsigned(n, n - p) * math.comb(n - p, k)
    return E1Dimension(copies, copies * g**k)


# ---------------------------------------------------------------------------
# Euler characteristics


def euler_nonequivariant(n: int, lam) -> int:
    """(-1)^i-weighted count of the Schur functor S_lam across degrees.

    Concentration in the top two degrees makes the Euler characteristic
    equal (-1)^n (count in H^n minus count in H^{n-1}); it factors as a
    Stirling-number gap times the number of standard tableaux of lam."""
    lam = tuple(lam)
    q = sum(lam)
    if q > n:
        raise ValueError(f"shape {lam} is too big for n={n}")
    gap = stirling1_unsigned(n - 1, q) - (
        stirling1_unsigned(n - 1, q - 1) if q >= 1 else 0
    )
    return (-1) ** (n - 1) * gap * hook_dim(lam)


@dataclass(frozen=True)
class SignedDecomposition:
    """Integer (possibly negative) multiplicities of S^lam (x) S_mu.

    coeffs is a sorted tuple of ((lam, mu), m) with m a nonzero integer
    and mu an evaluated (circle) GL shape."""

    n: int
    coeffs: tuple

    @staticmethod
    def from_dict(n: int, coeffs: dict) -> "SignedDecomposition":
        items = tuple(sorted((key, m) for key, m in coeffs.items() if m))
        return SignedDecomposition(n, items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def multiplicity(self, lam, mu) -> int:
        return self.as_dict().get((tuple(lam), tuple(mu)), 0)


def _chain_character(n: int, tau: tuple, p: int, cycle_types) -> dict:
    """Trace of each cycle type on the multidegree-tau chain spot."""
    sig = WedgeSignature.uniform(len(tau), 1)
    basis = list(enumerate_basis(sig, n, n - p, tau))
    if not basis:
        return {c: 0 for c in cycle_types}
    return {
        c: stratum_trace(sig, basis, permutation_of_cycle_type(c, n))
        for c in cycle_types
    }


def euler_equivariant(n: int) -> SignedDecomposition:
    """Alternating sum of chain characters, as a signed S_n x GL table.

    Computed entirely at chain level (no kernels), so it serves as an
    oracle for the homology route: the result must equal the evaluated
    decomposition at degree n minus the one at degree n-1."""
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    cycle_types = [tuple(c) for c in partitions_of(n)]
    out: dict = {}
    for k in range(n + 1):
        weights = {}
        for tau in map(tuple, partitions_of(k)):
            acc = {c: 0 for c in cycle_types}
            for p in range(n - k + 1):
                sign = -1 if p % 2 else 1
                for c, t in _chain_character(n, tau, p, cycle_types).items():
                    acc[c] += sign * t
            sign = -1 if (n - k) % 2 else 1
            weights[tau] = ClassFunction.from_dict(
                n, {c: sign * v for c, v in acc.items()}
            )
        for mu, cf in _dominance_solve(weights).items():
            for lam, m in decompose(cf).items():
                if m:
                    out[(lam, mu)] = out.get((lam, mu), 0) + m
    return SignedDecomposition.from_dict(n, out)


def _dominance_solve(chars: dict) -> dict:
    """Unitriangular Kostka solve, kept local so the oracle stands alone."""
    from .combinat import kostka

    solved: dict = {}
    if not chars:
        return solved
    k = sum(next(iter(chars)))
    for mu in map(tuple, partitions_of(k)):
        acc = chars[mu]
        for eta, val in solved.items():
            c = kostka(eta, mu)
            if c:
                acc = acc - c * val
        solved[mu] = acc
    return solved


# ---------------------------------------------------------------------------
# Exterior and symmetric multiplicity characters via symmetric functions


def _as_character(sf, n: int) -> ClassFunction:
    """A t-free symmetric function of degree n, read as an S_n-character."""
    out = ClassFunction.from_dict(n, {})
    for e, layer in sf.schur_decomposition(n).items():
        if e != 0 and layer:
            raise ValueError(f"unexpected t-power {e} in {sf}")
        for lam, m in layer.items():
            out = out + m * irreducible_character(lam)
    return out


def exterior_multiplicity_char(n: int, m: int, codim: int) -> ClassFunction:
    """S_n-character of the m-th exterior-power multiplicity on circles.

    Equal to the homology of the genus-0 moduli space of (n+1)-pointed
    curves in degree n - m - 2*codim; zero outside its range."""
    if codim not in (0, 1):
        raise ValueError(f"codim must be 0 or 1: {codim}")
    i = n - m - 2 * codim
    if n < 3 or i < 0 or i > n - 3:
        return ClassFunction.from_dict(n, {})
    return _as_character(getzler_m0n(n)[i], n)


def sym_multiplicity_char(n: int, m: int, codim: int) -> ClassFunction:
    """S_n-character of the m-th symmetric-power multiplicity on circles.

    A sign twist of the even homology of n-1 points in R^3 (with its
    twisted S_n-action) in degree 2(n-m) - 2*codim; zero outside."""
    if codim not in (0, 1):
        raise ValueError(f"codim must be 0 or 1: {codim}")
    i = 2 * (n - m) - 2 * codim
    if n < 2 or i < 0 or i > 2 * (n - 2):
        return ClassFunction.from_dict(n, {})
    return _as_character(whitehouse_characters(n)[i], n) * sign_character(n)


def m0n_betti(n: int) -> list:
    """Betti numbers of the genus-0 moduli space: prod_{j=2}^{n-2}(1+jt)."""
    coeffs = [1]
    for j in range(2, n - 1):
        nxt = [0] * (len(coeffs) + 1)
        for e, c in enumerate(coeffs):
            nxt[e] += c
            nxt[e + 1] += j * c
        coeffs = nxt
    return coeffs


def whitehouse_betti(n: int) -> list:
    """Dims of the twisted even homology: prod_{j=1}^{n-2}(1+j*t^2)."""
    coeffs = [1]
    for j in range(1, n - 1):
        nxt = coeffs + [0, 0]
        for e, c in enumerate(coeffs):
            nxt[e + 2] += j * c
        coeffs = nxt
    return coeffs


# ---------------------------------------------------------------------------
# Genus-2 weight-0 cohomology


def r_lambda(a: int, b: int) -> int:
    """Number of weight-0 copies contributed by the two-row shape (a, b)."""
    if b > a or b < 0:
        raise ValueError(f"need a >= b >= 0: {(a, b)}")
    if a % 2 != b % 2:
        return 0
    if a % 2 == 1:
        return (a - b) // 6 + 1
    return (a - b) // 6


def weight0_invariant_dim(a: int, b: int) -> int:
    """The same count as an honest invariant computation.

    Restrict the GL_2 Schur functor S_(a,b) along the 12-element group
    generated by -1 and the 2-dimensional reflection representation of
    the symmetric group on 3 letters, twist by the sign of the
    3-letter factor, and take invariants.  Traces per class come from
    the eigenvalue pairs (1,1), (1,-1), (zeta, zeta-bar)."""
    if b > a or b < 0:
        raise ValueError(f"need a >= b >= 0: {(a, b)}")
    width = a - b + 1
    # s_(a,b)(x,y) at the three eigenvalue pairs, exactly
    t_id = width
    t_swap = ((-1) ** a + (-1) ** b) // 2
    t_rot = (0, 1, -1)[width % 3]
    # classes: (sign scaling eps, 3-letter class) with sizes 1, 3, 2
    total = 0
    for eps in (0, 1):
        scale = (-1) ** (eps * (a + b))
        total += scale * (t_id - 3 * t_swap + 2 * t_rot)
    if total % 12:
        raise ClosedFormError(f"non-integral invariant count at {(a, b)}")
    return total // 12


@dataclass(frozen=True)
class WeightZeroPiece:
    """Weight-0 compactly supported cohomology of the genus-2 moduli
    space with n marked points, concentrated in degrees n+2 and n+3."""

    n: int
    characters: tuple  # ((degree, ClassFunction), ...)

    def character(self, degree: int) -> ClassFunction:
        return dict(self.characters).get(
            degree, ClassFunction.from_dict(self.n, {})
        )

    def total(self, degree: int) -> int:
        return self.character(degree).dim

    @property
    def totals(self) -> dict:
        return {deg: cf.dim for deg, cf in self.characters}


def m2n_weight0(n: int, dec) -> WeightZeroPiece:
    """Assemble the genus-2 weight-0 characters from a coefficient table.

    Each two-row evaluated shape (a, b) contributes r_(a,b) copies of
    its S_n-multiplicity space, placed three degrees above the circle
    reading.  The count r is evaluated along two independent routes (a
    floor formula and an invariant-theoretic trace) and any mismatch is
    a hard error."""
    if dec.n != n:
        raise ValueError(f"table is for n={dec.n}, not {n}")
    if dec.convention != "coefficient":
        raise ValueError("need the coefficient table; evaluation is internal")
    chars = {n + 2: ClassFunction.from_dict(n, {}),
             n + 3: ClassFunction.from_dict(n, {})}
    for (p, lam, mu), m in dec.coeffs:
        shape = conjugate(mu)
        if len(shape) > 2:
            continue
        a, b = (shape + (0, 0))[:2]
        r = r_lambda(a, b)
        if r != weight0_invariant_dim(a, b):
            raise ClosedFormError(
                f"weight-0 count mismatch at shape {shape}: "
                f"floor formula {r}, invariants {weight0_invariant_dim(a, b)}"
            )
        if not r:
            continue
        degree = p + sum(shape) + 3
        chars[degree] = chars[degree] + (m * r) * irreducible_character(lam)
    return WeightZeroPiece(n, tuple(sorted(chars.items())))


M2N_WEIGHT0_DIMS = (0, 0, 0, 0, 1, 5, 26, 155, 1066, 8666, 81012)


# ---------------------------------------------------------------------------
# The two-step free resolution on circle wedges


def two_step_ranks(n: int, g: int) -> tuple:
    """Free ranks of the two-step complex computing H_c on circle wedges.

    For g >= 2 the compactly supported cohomology of the configuration
    space of a wedge of g circles is presented by free modules over the
    group ring with binom(n+g-2, g-1) generators in degree n-1 and
    binom(n+g-1, g-1) in degree n.  At g=1 the modules are not free
    (both cohomology groups are (n-1)!-dimensional) and the returned
    pair (1, 1) counts the single induced generator in each degree; use
    two_step_dims for the honest dimensions."""
    if n < 1 or g < 1:
        raise ValueError(f"need n >= 1 and g >= 1: {(n, g)}")
    if g == 1:
        return (1, 1)
    return (math.comb(n + g - 2, g - 1), math.comb(n + g - 1, g - 1))


def two_step_dims(n: int, g: int) -> tuple:
    """Total dimensions of the two-step complex, (degree n-1, degree n)."""
    if g == 1:
        return (math.factorial(n - 1), math.factorial(n - 1))
    lo, hi = two_step_ranks(n, g)
    return (math.factorial(n) * lo, math.factorial(n) * hi)


def configuration_euler(n: int, g: int) -> int:
    """(-1)^n times the compactly supported Euler characteristic of the
    configuration space of n points on a wedge of g circles:
    (g-1) g (g+1) ... (g+n-2)."""
    out = 1
    for j in range(n):
        out *= g - 1 + j
    return out


# ---------------------------------------------------------------------------
# Conjectural and proven row patterns (evaluated convention, degree n-1)


def _add(dest: dict, src: dict, mult: int = 1) -> None:
    for shape, m in src.items():
        dest[shape] = dest.get(shape, 0) + mult * m
        if not dest[shape]:
            del dest[shape]


def mult_triv(q: int) -> dict:
    """The standard degree-q bundle of shapes: one conjugated hook
    T(a, 1^b) for every solution of 2a + b = q with a >= 1, b >= 0."""
    out: dict = {}
    for a in range(1, q // 2 + 1):
        b = q - 2 * a
        _add(out, {conjugate((a,) + (1,) * b): 1})
    return out


def _tshape(*parts) -> dict:
    shape = tuple(p for p in parts if p)
    return {conjugate(shape): 1}


_PERIODIC_A = (-1, 0, -1, 0, 0, 0)
_PERIODIC_B = (-1, -1, -1, 0, -1, 0)
_PERIODIC_C = (0, 0, 0, 0, 1, 0)
_PERIODIC_D = (0, -1, 0, 0, 0, 0)


def _row_label(n: int, *parts) -> tuple:
    """Validate a family's printed row label at this n.

    Zero parts are rejected rather than dropped: a family whose printed
    label degenerates (like (n-2, 1, 1) at n = 2) is out of its stated
    range, not a statement about the smaller partition."""
    label = tuple(parts)
    if any(p < 1 for p in label) or list(label) != sorted(label, reverse=True):
        raise ValueError(f"row {parts} is not a partition; family needs larger n")
    if sum(label) != n:
        raise ValueError(f"row {parts} does not have size {n}")
    return label


def row_formula(n: int, family: str) -> tuple:
    """The predicted degree-(n-1) row for one family, as printed.

    Returns (row label, {shape: mult}); both are in the notation of the
    written-out patterns, where some labels and shapes carry an explicit
    transpose.  The checker compares them to tables under both readings
    of that transpose."""
    out: dict = {}
    if family == "top":                       # lam = (n): proven
        return _row_label(n, n), mult_triv(n - 1)
    if family == "sign":                      # lam = (1^n): proven
        return _row_label(n, *((1,) * n)), dict(_tshape(*((1,) * (n - 1))))
    if family == "almost-sign":               # lam = (2, 1^{n-2}): proven
        return _row_label(n, 2, *((1,) * (n - 2))), {}
    if family == "hook-one":                  # lam = (n-1, 1)
        if n % 2 == 0:
            _add(out, _tshape(n // 2))
        return _row_label(n, n - 1, 1), out
    if family == "two-row":                   # lam = (n-2, 2)
        for k in range(n // 4):
            _add(out, mult_triv(n - 2 - 4 * k))
        for k in range((n - 7) // 4 + 1):
            _add(out, mult_triv(n - 5 - 4 * k))
        if n % 2 == 0:
            for k in range(n // 4 - 1):
                _add(out, _tshape((n - 4) // 2 - 2 * k))
        else:
            for k in range((n - 5) // 4 + 1):
                _add(out, _tshape((n - 1) // 2 - 2 * k))
        return _row_label(n, n - 2, 2), out
    if family == "hook-two":                  # lam = (n-2, 1, 1)
        for k in range((n - 5) // 4 + 1):
            _add(out, mult_triv(n - 3 - 4 * k))
        for k in range((n - 6) // 4 + 1):
            _add(out, mult_triv(n - 4 - 4 * k))
        if n % 2 == 0:
            for k in range((n - 6) // 4 + 1):
                _add(out, _tshape((n - 2) // 2 - 2 * k))
        else:
            for k in range((n - 3) // 4 + 1):
                _add(out, _tshape((n + 1) // 2 - 2 * k))
        return _row_label(n, n - 2, 1, 1), out
    if family == "t-three-row":               # lam = T(n-3, 3)
        for k in range(n - 5):
            _add(out, _tshape(n - 4 - k), (k + 3) // 3)
        _add(out, _tshape(1, 1), n // 6 + _PERIODIC_A[n % 6])
        _add(out, _tshape(1), n // 6 + _PERIODIC_B[n % 6])
        return conjugate(_row_label(n, n - 3, 3)), out
    if family == "t-mixed":                   # lam = T(n-3, 2, 1)
        for k in range(n - 4):
            _add(out, _tshape(n - 3 - k), (2 * k + 3) // 3)
        _add(out, _tshape(1, 1), (n - 2) // 3)
        _add(out, _tshape(1), (n - 4) // 3)
        return conjugate(_row_label(n, n - 3, 2, 1)), out
    if family == "t-hook-three":              # lam = T(n-3, 1, 1, 1)
        for k in range(n - 5):
            _add(out, _tshape(n - 4 - k), (k + 3) // 3)
        _add(out, _tshape(1, 1), n // 6 + _PERIODIC_C[n % 6])
        _add(out, _tshape(1), n // 6 + _PERIODIC_D[n % 6])
        return conjugate(_row_label(n, n - 3, 1, 1, 1)), out
    if family == "t-two-row":                 # lam = T(n-2, 2)
        for k in range(n // 2 - 1):
            _add(out, _tshape(n - 3 - 2 * k))
        return conjugate(_row_label(n, n - 2, 2)), out
    if family == "t-hook-two":                # lam = T(n-2, 1, 1)
        for k in range((n - 3) // 2 + 1):
            _add(out, _tshape(n - 2 - 2 * k))
        return conjugate(_row_label(n, n - 2, 1, 1)), out
    raise ValueError(f"unknown family {family!r}")


ROW_FAMILIES = (
    "top", "sign", "almost-sign", "hook-one", "two-row", "hook-two",
    "t-three-row", "t-mixed", "t-hook-three", "t-two-row", "t-hook-two",
)

PROVEN_FAMILIES = ("top", "sign", "almost-sign")


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    family: str
    proven: bool
    row: tuple
    prediction_printed: tuple          # sorted ((shape, mult), ...)
    prediction_transposed: tuple
    table: tuple
    matches_printed: bool
    matches_transposed: bool

    @property
    def verdict(self) -> str:
        if self.matches_printed and self.matches_transposed:
            return "matches either reading"
        if self.matches_printed:
            return "matches as printed"
        if self.matches_transposed:
            return "matches transposed"
        return "MISMATCH under both readings"


def _codim1_row(dec, lam: tuple) -> dict:
    n = dec.n
    return {
        mu: m
        for (p, l, mu), m in dec.coeffs
        if l == lam and p + sum(mu) == n - 1
    }


def conjecture_check(n: int, family: str, dec) -> ConjectureReport:
    """Compare one predicted row against a computed evaluated table.

    The row label is an S_n-irreducible and unambiguous, but the
    written patterns and the tables do not pin a common transpose
    convention for the GL shapes, so the prediction is evaluated both
    as printed and with every shape conjugated; nothing is asserted."""
    if dec.convention != "circle-evaluated" or dec.sphere_dim != 1:
        raise ValueError("conjectured rows live in the evaluated table")
    if dec.n != n:
        raise ValueError(f"table is for n={dec.n}, not {n}")
    row, pred = row_formula(n, family)
    pred_t = {conjugate(shape): m for shape, m in pred.items()}
    table = _codim1_row(dec, row)
    return ConjectureReport(
        n=n,
        family=family,
        proven=family in PROVEN_FAMILIES,
        row=row,
        prediction_printed=tuple(sorted(pred.items())),
        prediction_transposed=tuple(sorted(pred_t.items())),
        table=tuple(sorted(table.items())),
        matches_printed=pred == table,
        matches_transposed=pred_t == table,
    )


def check_all_conjectures(n: int, dec) -> list:
    """Reports for every family that is defined at this n."""
    reports = []
    for family in ROW_FAMILIES:
        try:
            row_formula(n, family)
        except ValueError:
            continue
        reports.append(conjecture_check(n, family, dec))
    return reports


def phi1_subtop_block(n: int) -> dict:
    """Predicted p=1 block at GL-degree n-2 of the coefficient table:
    {(lam, mu): mult}, conjectural for n >= 4."""
    if n < 4:
        raise ValueError(f"the pattern starts at n=4: {n}")
    return {
        ((3,) + (1,) * (n - 3), (1,) * (n - 2)): 1,
        ((n,), (n - 2,)): 1,
    }
