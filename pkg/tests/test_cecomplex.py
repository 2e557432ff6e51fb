"""Complex for configuration spaces of wedges: structure, signs, homology."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wedgeconf import cecomplex as ce
from wedgeconf.cecomplex import (
    WedgeSignature,
    apply_differential,
    apply_permutation,
    diagonal_coefficient,
    diagonal_trace,
    differential_rows_transposed,
    element_p,
    element_q,
    element_weight,
    enumerate_basis,
    inverse_permutation,
    multidegree_homology,
    multidegrees_of_internal_degree,
    multiset_arrangements,
    permutation_of_cycle_type,
    ranks_below_window,
    set_partitions,
    stratum_dim,
    stratum_homology,
    stratum_trace,
    transition_coefficient,
    validate_element,
)
from wedgeconf.combinat import partitions_of, stirling1_unsigned
from wedgeconf.schar import ClassFunction, decompose, sign_character, trivial_character


def all_weights(g, kmax):
    for k in range(kmax + 1):
        for w in itertools.product(range(k + 1), repeat=g):
            if sum(w) == k:
                yield w


def stratum_elements(sig, n, weight):
    for nblocks in range(1, n + 1):
        yield from enumerate_basis(sig, n, nblocks, weight)


class TestSignature:
    def test_validation(self):
        with pytest.raises(ValueError):
            WedgeSignature((0,))
        with pytest.raises(ValueError):
            WedgeSignature((1, -2))
        assert WedgeSignature.uniform(3, 2).dims == (2, 2, 2)
        assert WedgeSignature((1, 2)).degree(0) == 0
        assert WedgeSignature((1, 2)).degree(2) == 2


class TestSetPartitions:
    @pytest.mark.parametrize("n,k,count", [
        (4, 2, 7), (4, 3, 6), (5, 3, 25), (6, 3, 90), (1, 1, 1), (3, 3, 1),
    ])
    def test_counts_are_stirling2(self, n, k, count):
        got = list(set_partitions(n, k))
        assert len(got) == count
        assert len(set(got)) == count

    def test_block_structure(self):
        for blocks in set_partitions(5, 3):
            mins = [b[0] for b in blocks]
            assert mins == sorted(mins)
            assert all(b == tuple(sorted(b)) for b in blocks)
            assert sorted(itertools.chain(*blocks)) == [1, 2, 3, 4, 5]

    def test_degenerate(self):
        assert list(set_partitions(3, 0)) == []
        assert list(set_partitions(3, 4)) == []


class TestMultisetArrangements:
    def test_small(self):
        got = list(multiset_arrangements((0, 1, 1)))
        assert got == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]

    def test_count(self):
        got = list(multiset_arrangements((0, 0, 1, 2)))
        assert len(got) == math.factorial(4) // 2
        assert len(set(got)) == len(got)
        assert got == sorted(got)

    def test_empty(self):
        assert list(multiset_arrangements(())) == [()]


class TestBasis:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_dims_match_formula(self, n):
        sig = WedgeSignature.uniform(2, 1)
        for weight in all_weights(2, min(n, 3)):
            for nblocks in range(0, n + 2):
                basis = enumerate_basis(sig, n, nblocks, weight)
                assert len(basis) == stratum_dim(n, nblocks, weight)
                for e in basis:
                    validate_element(sig, n, e)
                    assert element_weight(sig, e) == weight
                    assert element_p(n, e) == n - nblocks

    def test_single_label_dims(self):
        # |s(n, j)| * C(j, k) * g^k summed over weights of total k
        n, g, k = 5, 2, 2
        sig = WedgeSignature.uniform(g, 1)
        for nblocks in range(k, n + 1):
            total = sum(
                len(enumerate_basis(sig, n, nblocks, w))
                for w in all_weights(g, k) if sum(w) == k
            )
            expect = (stirling1_unsigned(n, nblocks)
                      * math.comb(nblocks, k) * g ** k)
            assert total == expect

    def test_element_q_mixed_dims(self):
        sig = WedgeSignature((1, 2))
        assert enumerate_basis(sig, 3, 1, (1, 1)) == []  # more labels than blocks
        basis = enumerate_basis(sig, 4, 2, (1, 1))
        assert basis
        for e in basis:
            assert element_q(sig, e) == 3


class TestDifferentialAnchors:
    def test_two_units_merge(self):
        sig = WedgeSignature.uniform(1, 1)
        e = (((1,), 0), ((2,), 0))
        assert apply_differential(sig, e) == {(((1, 2), 0),): -1}

    @pytest.mark.parametrize("d", [1, 2])
    def test_one_label(self, d):
        sig = WedgeSignature.uniform(1, d)
        e1 = (((1,), 1), ((2,), 0))
        e2 = (((1,), 0), ((2,), 1))
        s = (-1) ** (1 + d)
        assert apply_differential(sig, e1) == {(((1, 2), 1),): s}
        assert apply_differential(sig, e2) == {(((1, 2), 1),): s}

    def test_two_labels_no_merge(self):
        sig = WedgeSignature.uniform(2, 1)
        e = (((1,), 1), ((2,), 2))
        assert apply_differential(sig, e) == {}

    def test_top_degree_zero(self):
        sig = WedgeSignature.uniform(1, 1)
        assert apply_differential(sig, (((1, 2, 3), 0),)) == {}

    def test_grading(self):
        sig = WedgeSignature((1, 2))
        for e in stratum_elements(sig, 4, (1, 0)):
            for img, c in apply_differential(sig, e).items():
                validate_element(sig, 4, img)
                assert element_p(4, img) == element_p(4, e) + 1
                assert element_q(sig, img) == element_q(sig, e)
                assert element_weight(sig, img) == element_weight(sig, e)
                assert c


@pytest.mark.parametrize("dims", [(1,), (2,), (1, 1), (2, 2), (1, 2), (3, 2)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_differential_squares_to_zero(dims, n):
    sig = WedgeSignature(dims)
    for weight in all_weights(sig.g, n):
        for e in stratum_elements(sig, n, weight):
            acc = {}
            for mid, c in apply_differential(sig, e).items():
                for out, c2 in apply_differential(sig, mid).items():
                    acc[out] = acc.get(out, 0) + c * c2
            assert all(v == 0 for v in acc.values()), (e, acc)


def test_differential_squares_to_zero_n5():
    sig = WedgeSignature.uniform(1, 1)
    for weight in [(1,), (2,)]:
        for e in stratum_elements(sig, 5, weight):
            acc = {}
            for mid, c in apply_differential(sig, e).items():
                for out, c2 in apply_differential(sig, mid).items():
                    acc[out] = acc.get(out, 0) + c * c2
            assert all(v == 0 for v in acc.values())


def test_parity_shift_invariance():
    # the differential only sees sphere dimensions mod 2
    for n in (3, 4):
        for d, d2 in ((1, 3), (2, 4)):
            a, b = WedgeSignature.uniform(1, d), WedgeSignature.uniform(1, d2)
            for weight in [(1,), (2,)]:
                for ea, eb in zip(stratum_elements(a, n, weight),
                                  stratum_elements(b, n, weight)):
                    assert ea == eb
                    assert apply_differential(a, ea) == apply_differential(b, eb)


class TestPermutationAction:
    def test_identity(self):
        sig = WedgeSignature.uniform(2, 1)
        for e in stratum_elements(sig, 3, (1, 0)):
            assert apply_permutation(sig, e, (1, 2, 3)) == {e: 1}

    def test_swap_on_bracket_word(self):
        # odd generators: [u2, u1] = +[u1, u2]
        sig = WedgeSignature.uniform(1, 1)
        assert apply_permutation(sig, (((1, 2), 0),), (2, 1)) == {(((1, 2), 0),): 1}

    def test_swap_on_labeled_singletons(self):
        d1 = WedgeSignature.uniform(1, 1)
        d2 = WedgeSignature.uniform(1, 2)
        e = (((1,), 1), ((2,), 1))
        assert apply_permutation(d1, e, (2, 1)) == {e: -1}
        assert apply_permutation(d2, e, (2, 1)) == {e: 1}

    def test_composition(self):
        sig = WedgeSignature((1, 2))
        sigma = (2, 3, 1, 4)
        tau = (1, 3, 4, 2)
        composed = tuple(tau[sigma[i] - 1] for i in range(4))
        for e in itertools.islice(stratum_elements(sig, 4, (1, 0)), 40):
            step = {}
            for mid, c in apply_permutation(sig, e, sigma).items():
                for out, c2 in apply_permutation(sig, mid, tau).items():
                    step[out] = step.get(out, 0) + c * c2
            step = {k: v for k, v in step.items() if v}
            assert step == apply_permutation(sig, e, composed)

    def test_equivariance(self):
        for dims in [(1,), (2,), (1, 2)]:
            sig = WedgeSignature(dims)
            n = 4
            for sigma in [(2, 1, 3, 4), (2, 3, 4, 1), (3, 1, 2, 4)]:
                for weight in all_weights(sig.g, 2):
                    for e in stratum_elements(sig, n, weight):
                        lhs = {}
                        for mid, c in apply_permutation(sig, e, sigma).items():
                            for out, c2 in apply_differential(sig, mid).items():
                                lhs[out] = lhs.get(out, 0) + c * c2
                        rhs = {}
                        for mid, c in apply_differential(sig, e).items():
                            for out, c2 in apply_permutation(sig, mid, sigma).items():
                                rhs[out] = rhs.get(out, 0) + c * c2
                        lhs = {k: v for k, v in lhs.items() if v}
                        rhs = {k: v for k, v in rhs.items() if v}
                        assert lhs == rhs, (dims, e, sigma)

    def test_transition_matches_expansion(self):
        sig = WedgeSignature.uniform(2, 1)
        sigma = (3, 1, 4, 2)
        for e in stratum_elements(sig, 4, (1, 1)):
            full = apply_permutation(sig, e, sigma)
            for t in stratum_elements(sig, 4, (1, 1)):
                if len(t) == len(e):
                    assert transition_coefficient(sig, e, sigma, t) == full.get(t, 0)

    def test_diagonal_matches_expansion(self):
        sig = WedgeSignature.uniform(1, 2)
        sigma = (2, 3, 1, 4)
        for e in stratum_elements(sig, 4, (2,)):
            assert diagonal_coefficient(sig, e, sigma) == \
                apply_permutation(sig, e, sigma).get(e, 0)


class TestPermutationUtilities:
    def test_representative(self):
        assert permutation_of_cycle_type((3, 2), 5) == (2, 3, 1, 5, 4)
        assert permutation_of_cycle_type((1, 1, 1), 3) == (1, 2, 3)
        with pytest.raises(ValueError):
            permutation_of_cycle_type((3,), 4)

    def test_inverse(self):
        sigma = (2, 3, 1, 5, 4)
        inv = inverse_permutation(sigma)
        assert tuple(sigma[inv[i] - 1] for i in range(5)) == (1, 2, 3, 4, 5)

    def test_trace_is_class_function(self):
        sig = WedgeSignature.uniform(1, 1)
        basis = enumerate_basis(sig, 4, 2, (1,))
        sigma = (2, 3, 1, 4)  # 3-cycle
        for tau in itertools.permutations(range(1, 5)):
            inv = inverse_permutation(tau)
            conj = tuple(tau[sigma[inv[i] - 1] - 1] for i in range(4))
            assert stratum_trace(sig, basis, conj) == \
                stratum_trace(sig, basis, sigma)

    def test_identity_trace_is_dimension(self):
        sig = WedgeSignature.uniform(2, 2)
        basis = enumerate_basis(sig, 5, 3, (1, 1))
        assert stratum_trace(sig, basis, (1, 2, 3, 4, 5)) == len(basis)


class TestWeightSymmetry:
    def test_permuted_weights_isomorphic(self):
        for n, wa, wb in [(4, (2, 1), (1, 2)), (4, (1, 0), (0, 1)),
                          (5, (2, 1, 0), (0, 1, 2))]:
            g = len(wa)
            sig = WedgeSignature.uniform(g, 1)
            for nblocks in range(1, n + 1):
                ba = enumerate_basis(sig, n, nblocks, wa)
                bb = enumerate_basis(sig, n, nblocks, wb)
                assert len(ba) == len(bb)
                for sigma in [permutation_of_cycle_type(ct, n)
                              for ct in partitions_of(n)]:
                    assert stratum_trace(sig, ba, sigma) == \
                        stratum_trace(sig, bb, sigma)


def as_multiplicities(chi):
    return {lam: m for lam, m in decompose(chi).items() if m}


class TestHomologyAnchors:
    @pytest.mark.parametrize("d", [1, 2])
    def test_n2_weight1(self, d):
        h = stratum_homology(2, d, (1,))
        assert h.P == 0
        assert h.q == d
        assert as_multiplicities(h.chi_low) == {(1, 1): 1}
        assert h.chi_high.is_zero()

    def test_n2_weight2_sign_flips_with_parity(self):
        sgn = {(1, 1): 1}
        triv = {(2,): 1}
        h1 = stratum_homology(2, 1, (2,))
        h2 = stratum_homology(2, 2, (2,))
        assert h1.P == -1 and h1.chi_low.is_zero()
        assert as_multiplicities(h1.chi_high) == sgn
        assert as_multiplicities(h2.chi_high) == triv

    @pytest.mark.parametrize("d", [1, 2])
    def test_n2_weight_1_1(self, d):
        h = stratum_homology(2, d, (1, 1))
        assert as_multiplicities(h.chi_high) == {(2,): 1, (1, 1): 1}

    def test_n2_weight0_acyclic(self):
        h = stratum_homology(2, 1, ())
        assert h.chi_low.is_zero() and h.chi_high.is_zero()

    def test_n1(self):
        h = stratum_homology(1, 1, ())
        assert as_multiplicities(h.chi_low) == {(1,): 1}
        h = stratum_homology(1, 2, (1,))
        assert as_multiplicities(h.chi_high) == {(1,): 1}

    def test_weight_exceeds_n(self):
        h = stratum_homology(2, 1, (3,))
        assert h.chi_low.is_zero() and h.chi_high.is_zero()

    def test_circle_n3_total_dims(self):
        # F(S^1, 3) is (3-1)! = 2 copies of S^1 x R^2: total compactly
        # supported cohomology is 2 in degree 2 and 2 in degree 3
        dims = {}
        for k in range(1, 4):
            h = stratum_homology(3, 1, (k,))
            q = h.q
            dims[h.P + q] = dims.get(h.P + q, 0) + h.chi_low.dim
            dims[h.P + 1 + q] = dims.get(h.P + 1 + q, 0) + h.chi_high.dim
        dims = {i: v for i, v in dims.items() if v}
        assert dims == {2: 2, 3: 2}

    def test_nonnegative_small(self):
        for d in (1, 2):
            for n in (2, 3, 4):
                for k in range(1, n + 1):
                    for weight in partitions_of(k):
                        if len(weight) > n:
                            continue
                        h = stratum_homology(n, d, tuple(weight))
                        for chi in (h.chi_low, h.chi_high):
                            for lam, m in decompose(chi).items():
                                assert m >= 0


class TestEngineAgreement:
    @pytest.mark.parametrize("n,d,weight", [
        (4, 1, (1,)), (4, 2, (2,)), (4, 1, (1, 1)), (5, 1, (1,)),
        (5, 2, (2, 1)), (5, 1, (3,)),
    ])
    def test_exact_vs_modular(self, n, d, weight):
        he = stratum_homology(n, d, weight, engine="exact")
        hm = stratum_homology(n, d, weight, engine="modular")
        assert he.chi_low == hm.chi_low
        assert he.chi_high == hm.chi_high


class TestWindow:
    def test_exact_below_window_small(self):
        for d in (1, 2):
            for n in (2, 3, 4, 5):
                for k in range(1, n + 1):
                    for weight in partitions_of(k):
                        if len(weight) > k:
                            continue
                        ranks = ranks_below_window(n, d, tuple(weight))
                        assert all(v == 0 for v in ranks.values()), (n, d, weight)

    def test_weight0_tail(self):
        # with no labels the whole complex is exact for n >= 2
        for n in (2, 3, 4):
            ranks = ranks_below_window(n, 1, ())
            assert all(v == 0 for v in ranks.values())
            h = stratum_homology(n, 1, ())
            assert h.chi_low.is_zero() and h.chi_high.is_zero()


class TestMultidegree:
    def test_enumeration_uniform_circles(self):
        sig = WedgeSignature.uniform(2, 1)
        got = sorted(multidegrees_of_internal_degree(sig, 2))
        assert got == [(0, 2), (1, 1), (2, 0)]

    def test_enumeration_mixed(self):
        sig = WedgeSignature((1, 2))
        assert sorted(multidegrees_of_internal_degree(sig, 2)) == [(0, 1), (2, 0)]
        assert list(multidegrees_of_internal_degree(sig, -1)) == []

    def test_enumeration_exhaustive(self):
        sig = WedgeSignature((1, 2, 3))
        for q in range(7):
            got = set(multidegrees_of_internal_degree(sig, q))
            want = {
                a for a in itertools.product(range(q + 1), repeat=3)
                if sum(x * d for x, d in zip(a, sig.dims)) == q
            }
            assert got == want

    def test_swap_summands_is_homeomorphism(self):
        # reordering the wedge summands permutes labels but fixes the space
        for n in (2, 3):
            for a in [(1, 0), (0, 1), (1, 1), (2, 1)]:
                lhs = multidegree_homology(n, WedgeSignature((1, 2)), a)
                rhs = multidegree_homology(n, WedgeSignature((2, 1)), a[::-1])
                assert lhs.chi_low == rhs.chi_low
                assert lhs.chi_high == rhs.chi_high

    @pytest.mark.parametrize("dims,n", [
        ((1, 2), 2), ((1, 2), 3), ((2, 1), 2), ((1, 1, 2), 2), ((1, 3), 3),
    ])
    def test_euler_characteristic_mixed(self, dims, n):
        # chi_c of the configuration space is the falling factorial of chi_c(X)
        sig = WedgeSignature(dims)
        chi_x = 1 + sum((-1) ** d for d in dims)
        want = 1
        for j in range(n):
            want *= chi_x - j
        total = 0
        for q in range(n * max(dims) + 1):
            for a in multidegrees_of_internal_degree(sig, q):
                if sum(a) > n:
                    continue
                h = multidegree_homology(n, sig, a)
                total += (-1) ** (h.P + q) * h.chi_low.dim
                total += (-1) ** (h.P + 1 + q) * h.chi_high.dim
        assert total == want

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            multidegree_homology(3, WedgeSignature((1, 2)), (1,))


class TestDiagonalTrace:
    def test_all_ones_recovers_dimension(self):
        for dims in [(1,), (2,), (1, 1), (1, 2)]:
            sig = WedgeSignature(dims)
            for n in (2, 3):
                for i in range(n + n * max(dims) + 1):
                    for p in range(n):
                        want = 0
                        for a in multidegrees_of_internal_degree(sig, i - p):
                            if sum(a) > n:
                                continue
                            h = multidegree_homology(n, sig, a)
                            if p == h.P:
                                want += h.chi_low.dim
                            elif p == h.P + 1:
                                want += h.chi_high.dim
                        assert diagonal_trace(n, sig, (1,) * len(dims), p, i) == want

    def test_two_points_on_circle(self):
        # H^{1,0} and H^{2,0} of the two-point space each have label weight
        # equal to the internal degree
        sig = WedgeSignature.uniform(1, 1)
        assert diagonal_trace(2, sig, (2,), 0, 1) == 2
        assert diagonal_trace(2, sig, (2,), 0, 2) == 4
        assert diagonal_trace(2, sig, (2,), 1, 2) == 0

    def test_rational_scale(self):
        sig = WedgeSignature.uniform(1, 1)
        got = diagonal_trace(2, sig, (Fraction(1, 2),), 0, 1)
        assert got == Fraction(1, 2)

    def test_scale_symmetry_two_circles(self):
        sig = WedgeSignature.uniform(2, 1)
        for n in (2, 3):
            for p in range(n):
                for i in range(2 * n + 1):
                    assert diagonal_trace(n, sig, (2, 3), p, i) == \
                        diagonal_trace(n, sig, (3, 2), p, i)

    def test_sphere_weight_is_half_internal_degree(self):
        sig = WedgeSignature.uniform(1, 2)
        for n in (2, 3, 4):
            for p in range(n):
                for i in range(2 * n + 1):
                    dim = diagonal_trace(n, sig, (1,), p, i)
                    assert diagonal_trace(n, sig, (5,), p, i) == \
                        dim * 5 ** ((i - p) // 2)

    def test_scale_length_mismatch(self):
        with pytest.raises(ValueError):
            diagonal_trace(2, WedgeSignature((1, 2)), (1,), 0, 1)
