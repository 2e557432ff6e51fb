import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from wedgeconf import combinat as cb


partitions_st = st.lists(st.integers(1, 8), max_size=6).map(
    lambda parts: tuple(sorted(parts, reverse=True))
)


class TestPartitionBasics:
    def test_partition_validation(self):
        assert cb.Partition((3, 1)) == (3, 1)
        assert cb.Partition(()) == ()
        with pytest.raises(ValueError):
            cb.Partition((1, 3))
        with pytest.raises(ValueError):
            cb.Partition((2, 0))

    def test_partitions_of_order(self):
        assert cb.partitions_of(4) == [
            (4,),
            (3, 1),
            (2, 2),
            (2, 1, 1),
            (1, 1, 1, 1),
        ]
        assert cb.partitions_of(0) == [()]
        assert len(cb.partitions_of(10)) == 42

    def test_partitions_of_max_part(self):
        assert cb.partitions_of(4, max_part=2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]

    @given(partitions_st)
    def test_conjugate_involution(self, lam):
        assert cb.conjugate(cb.conjugate(lam)) == lam

    def test_conjugate_values(self):
        assert cb.conjugate((3, 1)) == (2, 1, 1)
        assert cb.conjugate((2, 2)) == (2, 2)
        assert cb.conjugate(()) == ()

    @given(partitions_st)
    def test_conjugate_size(self, lam):
        assert sum(cb.conjugate(lam)) == sum(lam)

    def test_zee(self):
        assert cb.zee((2, 1)) == 2
        assert cb.zee((1, 1, 1)) == 6
        assert cb.zee((3,)) == 3
        assert cb.zee(()) == 1

    def test_zee_sums_to_factorial(self):
        # sum over classes of n!/z gives n! distributed over class sizes
        for n in range(7):
            assert sum(
                math.factorial(n) // cb.zee(lam) for lam in cb.partitions_of(n)
            ) == math.factorial(n)

    def test_dominance(self):
        assert cb.dominates((3, 1), (2, 2))
        assert not cb.dominates((2, 2), (3, 1))
        assert cb.dominates((2, 2), (2, 2))
        with pytest.raises(ValueError):
            cb.dominates((2,), (1,) * 3)


class TestStirling:
    @pytest.mark.parametrize(
        "n,k,value",
        [(4, 2, 11), (5, 3, 35), (9, 2, 109584), (6, 1, 120), (3, 3, 1)],
    )
    def test_unsigned_values(self, n, k, value):
        assert cb.stirling1_unsigned(n, k) == value

    @given(st.integers(0, 30), st.integers(0, 30))
    @settings(max_examples=60)
    def test_against_sympy(self, n, k):
        assert cb.stirling1_unsigned(n, k) == sympy.functions.combinatorial.numbers.stirling(
            n, k, kind=1, signed=False
        )

    def test_row_sum(self):
        for n in range(1, 9):
            assert sum(
                cb.stirling1_unsigned(n, k) for k in range(n + 1)
            ) == math.factorial(n)

    @pytest.mark.parametrize("n,k,both", [(3, 1, -1), (5, 2, 5)])
    def test_identity_values(self, n, k, both):
        assert cb.verify_stirling_identity(n, k) == (both, both)

    @given(st.integers(1, 25), st.integers(0, 25))
    @settings(max_examples=80)
    def test_identity_holds(self, n, k):
        lhs, rhs = cb.verify_stirling_identity(n, k)
        assert lhs == rhs


class TestHookDim:
    @pytest.mark.parametrize(
        "lam,dim",
        [((2, 1), 2), ((3, 2), 5), ((1,), 1), ((), 1), ((4, 2), 9), ((2, 2, 1), 5)],
    )
    def test_values(self, lam, dim):
        assert cb.hook_dim(lam) == dim

    @pytest.mark.parametrize("n", range(1, 9))
    def test_sum_of_squares(self, n):
        assert sum(cb.hook_dim(lam) ** 2 for lam in cb.partitions_of(n)) == math.factorial(n)

    def test_conjugate_same_dim(self):
        for lam in cb.partitions_of(6):
            assert cb.hook_dim(lam) == cb.hook_dim(cb.conjugate(lam))


class TestKostka:
    @pytest.mark.parametrize(
        "lam,mu,value",
        [
            ((2, 1), (1, 1, 1), 2),
            ((3, 1), (2, 1, 1), 2),
            ((2, 2), (1, 1, 1, 1), 2),
            ((3,), (1, 1, 1), 1),
            ((2, 2), (2, 1, 1), 1),
            ((1, 1, 1), (3,), 0),
            ((4, 2), (2, 2, 1, 1), 4),
        ],
    )
    def test_values(self, lam, mu, value):
        assert cb.kostka(lam, mu) == value

    def test_identity_diagonal(self):
        for lam in cb.partitions_of(6):
            assert cb.kostka(lam, lam) == 1

    def test_dominance_support(self):
        for lam in cb.partitions_of(6):
            for mu in cb.partitions_of(6):
                nonzero = cb.kostka(lam, mu) > 0
                assert nonzero == cb.dominates(lam, mu)

    def test_content_permutation_invariance(self):
        assert cb.kostka((3, 2), (1, 2, 0, 2)) == cb.kostka((3, 2), (2, 2, 1))

    def test_hook_content_gives_syt(self):
        for lam in cb.partitions_of(5):
            assert cb.kostka(lam, (1,) * 5) == cb.hook_dim(lam)

    @pytest.mark.parametrize("mu", [(2, 2, 1), (3, 1, 1), (1, 1, 1, 1, 1)])
    def test_permutation_module_dimension(self, mu):
        # sum_lam K[lam,mu] * f^lam = n! / prod(mu_i!)
        n = sum(mu)
        total = sum(
            cb.kostka(lam, mu) * cb.hook_dim(lam) for lam in cb.partitions_of(n)
        )
        expected = math.factorial(n) // math.prod(math.factorial(a) for a in mu)
        assert total == expected

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            cb.kostka((2, 1), (2, 2))

    @pytest.mark.parametrize("q", range(0, 7))
    def test_inverse_kostka(self, q):
        K = cb.kostka_matrix(q)
        inv = cb.inverse_kostka_matrix(q)
        parts = cb.partitions_of(q)
        for mu in parts:
            for lam in parts:
                acc = sum(
                    inv.get((mu, nu), 0) * K[(nu, lam)] for nu in parts
                )
                assert acc == (1 if mu == lam else 0)


class TestSmallArithmetic:
    @given(st.integers(1, 2000))
    @settings(max_examples=80)
    def test_mobius_vs_sympy(self, n):
        assert cb.mobius(n) == sympy.mobius(n)

    @given(st.integers(1, 500))
    @settings(max_examples=50)
    def test_divisors(self, n):
        ds = cb.divisors(n)
        assert ds == sorted(ds)
        assert all(n % d == 0 for d in ds)
        assert len(ds) == sympy.divisor_count(n)


class TestPartitionStrings:
    @pytest.mark.parametrize(
        "text,lam",
        [
            ("(3,1)", (3, 1)),
            ("(2^2,1)", (2, 2, 1)),
            ("(1^4)", (1, 1, 1, 1)),
            ("()", ()),
            ("(7)", (7,)),
            ("( 3 , 2 )", (3, 2)),
        ],
    )
    def test_parse(self, text, lam):
        assert cb.parse_partition(text) == lam

    def test_parse_rejects_non_partition(self):
        with pytest.raises(ValueError):
            cb.parse_partition("(1,3)")

    @given(partitions_st)
    def test_roundtrip(self, lam):
        assert cb.parse_partition(cb.format_partition(lam)) == lam
        assert cb.parse_partition(cb.format_partition(lam, exponents=False)) == lam

    def test_format(self):
        assert cb.format_partition((2, 1, 1)) == "(2,1^2)"
        assert cb.format_partition((2, 1, 1), exponents=False) == "(2,1,1)"
        assert cb.format_partition(()) == "()"
