import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wedgeconf import lie


def tensor_expand(combo, graded: bool) -> dict:
    """Independent oracle: expand basis combinations into the tensor algebra
    using the (graded) commutator, [X, Y] = XY - (-1)^(|X||Y|) YX."""

    def comm(xs: dict, ys: dict) -> dict:
        out: dict[tuple, int] = {}
        for x, a in xs.items():
            for y, b in ys.items():
                sign = (-1) ** (len(x) * len(y)) if graded else 1
                for mono, c in ((x + y, a * b), (y + x, -sign * a * b)):
                    v = out.get(mono, 0) + c
                    if v:
                        out[mono] = v
                    else:
                        out.pop(mono, None)
        return out

    total: dict[tuple, int] = {}
    for w, coeff in lie._as_combo(combo).items():
        acc = {(w[0],): 1}
        for letter in w[1:]:
            acc = comm(acc, {(letter,): 1})
        for mono, c in acc.items():
            v = total.get(mono, 0) + coeff * c
            if v:
                total[mono] = v
            else:
                total.pop(mono, None)
    return total


def combo_scale(combo, k):
    return {w: k * c for w, c in combo.items()}


def combo_add(a, b):
    out = dict(a)
    for w, c in b.items():
        v = out.get(w, 0) + c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


@st.composite
def split_words(draw, max_letters=6):
    """Two disjoint words on a random letter set, each in basis form."""
    m = draw(st.integers(2, max_letters))
    letters = list(range(1, m + 1))
    cut = draw(st.integers(1, m - 1))
    chosen = sorted(draw(st.permutations(letters)))  # no-op, keep letters
    left = sorted(letters[:cut])
    right = sorted(letters[cut:])
    perm_l = draw(st.permutations(left[1:]))
    perm_r = draw(st.permutations(right[1:]))
    return (left[0], *perm_l), (right[0], *perm_r)


class TestWordValidation:
    def test_lieword(self):
        assert lie.LieWord((1, 3, 2)) == (1, 3, 2)
        with pytest.raises(ValueError):
            lie.LieWord((2, 1))
        with pytest.raises(ValueError):
            lie.LieWord((1, 1))
        with pytest.raises(ValueError):
            lie.LieWord(())

    def test_basis(self):
        assert lie.lie_basis({1, 2, 3}) == [(1, 2, 3), (1, 3, 2)]
        assert lie.lie_basis([5]) == [(5,)]
        assert len(lie.lie_basis(range(1, 6))) == math.factorial(4)


class TestBracketAnchors:
    def test_plain_swap(self):
        assert lie.lie_bracket((1,), (2,)) == {(1, 2): 1}
        assert lie.lie_bracket((2,), (1,)) == {(1, 2): -1}

    def test_graded_swap_of_odd_letters(self):
        # odd generators: [u2, u1] = -(-1)^(1*1) [u1, u2] = +[u1, u2]
        assert lie.lie_bracket((1,), (2,), graded=True) == {(1, 2): 1}
        assert lie.lie_bracket((2,), (1,), graded=True) == {(1, 2): 1}

    def test_plain_peel(self):
        assert lie.lie_bracket((1,), (2, 3)) == {(1, 2, 3): 1, (1, 3, 2): -1}
        assert lie.lie_bracket((2, 3), (1,)) == {(1, 2, 3): -1, (1, 3, 2): 1}

    def test_graded_peel(self):
        assert lie.lie_bracket((1,), (2, 3), graded=True) == {
            (1, 2, 3): 1,
            (1, 3, 2): 1,
        }
        assert lie.lie_bracket((2, 3), (1,), graded=True) == {
            (1, 2, 3): -1,
            (1, 3, 2): -1,
        }

    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            lie.lie_bracket((1, 2), (2, 3))


class TestAgainstTensorOracle:
    @given(split_words(), st.booleans())
    @settings(max_examples=120, deadline=None)
    def test_bracket_matches_tensor_expansion(self, words, graded):
        w1, w2 = words
        got = lie.lie_bracket(w1, w2, graded=graded)
        # expand both sides in the tensor algebra
        lhs = tensor_expand(got, graded)
        x, y = tensor_expand({w1: 1}, graded), tensor_expand({w2: 1}, graded)
        rhs: dict = {}
        for xm, a in x.items():
            for ym, b in y.items():
                sign = (-1) ** (len(xm) * len(ym)) if graded else 1
                for mono, c in ((xm + ym, a * b), (ym + xm, -sign * a * b)):
                    v = rhs.get(mono, 0) + c
                    if v:
                        rhs[mono] = v
                    else:
                        rhs.pop(mono, None)
        assert lhs == rhs

    @given(split_words(max_letters=5), st.booleans())
    @settings(max_examples=60, deadline=None)
    def test_antisymmetry(self, words, graded):
        w1, w2 = words
        ab = lie.lie_bracket(w1, w2, graded=graded)
        ba = lie.lie_bracket(w2, w1, graded=graded)
        sign = (-1) ** (len(w1) * len(w2)) if graded else 1
        assert combo_add(ab, combo_scale(ba, sign)) == {}

    @pytest.mark.parametrize("graded", [False, True])
    def test_jacobi(self, graded):
        # [x,[y,z]] = [[x,y],z] + (-1)^(|x||y|) [y,[x,z]] on word triples
        triples = [
            ((1,), (2,), (3,)),
            ((1, 4), (2,), (3,)),
            ((2,), (1, 4), (3, 5)),
            ((3, 6), (1, 4), (2, 5)),
        ]
        for x, y, z in triples:
            lhs = lie.lie_bracket(x, lie.lie_bracket(y, z, graded), graded)
            r1 = lie.lie_bracket(lie.lie_bracket(x, y, graded), z, graded)
            sign = (-1) ** (len(x) * len(y)) if graded else 1
            r2 = combo_scale(
                lie.lie_bracket(y, lie.lie_bracket(x, z, graded), graded), sign
            )
            assert lhs == combo_add(r1, r2)


class TestBasisIndependence:
    @pytest.mark.parametrize("graded", [False, True])
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_tensor_expansions_independent(self, m, graded):
        words = lie.lie_basis(range(1, m + 1))
        vectors = [tensor_expand({w: 1}, graded) for w in words]
        # Gaussian elimination over Q on the monomial coordinates
        basis: list[dict] = []
        for vec in vectors:
            vec = {k: Fraction(v) for k, v in vec.items()}
            for b in basis:
                pivot = next(iter(sorted(b)))
                if pivot in vec:
                    factor = vec[pivot] / b[pivot]
                    for k, v in b.items():
                        nv = vec.get(k, Fraction(0)) - factor * v
                        if nv:
                            vec[k] = nv
                        else:
                            vec.pop(k, None)
            assert vec, "basis words are linearly dependent"
            basis.append(vec)


class TestRelabel:
    def test_identity(self):
        combo = {(1, 3, 2): 2, (1, 2, 3): -1}
        assert lie.lie_relabel(combo, {1: 1, 2: 2, 3: 3}) == combo

    def test_swap_plain_vs_graded(self):
        swap = {1: 2, 2: 1}
        # ordinary Lie: transposition negates [u1, u2]
        assert lie.lie_relabel((1, 2), swap) == {(1, 2): -1}
        # odd generators: transposition fixes it (sign-twisted action)
        assert lie.lie_relabel((1, 2), swap, graded=True) == {(1, 2): 1}

    def test_three_cycle(self):
        rho = {1: 2, 2: 3, 3: 1}
        assert lie.lie_relabel((1, 2, 3), rho) == {(1, 2, 3): -1, (1, 3, 2): 1}
        assert lie.lie_relabel((1, 2, 3), rho, graded=True) == {
            (1, 2, 3): -1,
            (1, 3, 2): -1,
        }

    @given(
        st.permutations([1, 2, 3, 4, 5]),
        st.permutations([1, 2, 3, 4, 5]),
        st.booleans(),
    )
    @settings(max_examples=60, deadline=None)
    def test_composition(self, sigma, tau, graded):
        s = {i + 1: sigma[i] for i in range(5)}
        t = {i + 1: tau[i] for i in range(5)}
        st_comp = {i + 1: t[s[i + 1]] for i in range(5)}
        word = (1, 3, 2, 5, 4)
        one = lie.lie_relabel(lie.lie_relabel(word, s, graded), t, graded)
        both = lie.lie_relabel(word, st_comp, graded)
        assert one == both

    @given(split_words(max_letters=5), st.permutations([1, 2, 3, 4, 5, 6]), st.booleans())
    @settings(max_examples=60, deadline=None)
    def test_equivariance_with_bracket(self, words, perm, graded):
        w1, w2 = words
        mapping = {i + 1: perm[i] for i in range(6)}
        direct = lie.lie_relabel(lie.lie_bracket(w1, w2, graded), mapping, graded)
        pieces = lie.lie_bracket(
            lie.lie_relabel(w1, mapping, graded),
            lie.lie_relabel(w2, mapping, graded),
            graded,
        )
        assert direct == pieces

    def test_non_injective_rejected(self):
        with pytest.raises(ValueError):
            lie.lie_relabel((1, 2), {1: 1, 2: 1})
