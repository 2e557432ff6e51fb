"""Multilinear components of free Lie algebras, plain and odd-generator.

Lie monomials are written in the left-normed basis: the tuple
``(b1, b2, ..., bm)`` stands for the iterated bracket
``[[...[[u_b1, u_b2], u_b3], ...], u_bm]``, and a tuple is a *basis word*
when ``b1`` is the smallest letter.  The multilinear component on a set of m
letters has the (m-1)! such words as a basis; this holds both for the
ordinary free Lie algebra (``graded=False``) and for the free graded Lie
algebra on generators of odd degree (``graded=True``), where the degree of a
monomial is its length and all rewriting signs follow the Koszul rule.

Everything reduces to two rewriting rules applied recursively:

* swap:  [x, y] = -(-1)^(|x||y|) [y, x]   (sign only in the graded case)
* peel:  [x, [a, b]] = [[x, a], b] - (-1)^(|a||b|) [[x, b], a]

with the base case ``[basis word, single letter] = appended basis word``
whenever the left word contains the smallest letter.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Iterable, Mapping


class LieWord(tuple):
    """A left-normed basis word: distinct letters, first is the minimum."""

    def __new__(cls, letters: Iterable[int]):
        t = tuple(int(a) for a in letters)
        if not t:
            raise ValueError("empty Lie word")
        if len(set(t)) != len(t):
            raise ValueError(f"letters must be distinct: {t}")
        if t[0] != min(t):
            raise ValueError(f"first letter must be minimal: {t}")
        return super().__new__(cls, t)


# a LieCombination is a dict {word tuple: integer/rational coefficient}
LieCombination = dict


def lie_basis(letters: Iterable[int]) -> list:
    """Left-normed basis words on a letter set, in lexicographic order."""
    letters = sorted(set(letters))
    if not letters:
        return []
    first, rest = letters[0], letters[1:]
    return [(first,) + tail for tail in sorted(permutations(rest))]


_bracket_cache: dict[tuple, dict] = {}


def _bracket_words(w1: tuple, w2: tuple, graded: bool) -> dict:
    """Bracket of two basis words as a combination of basis words."""
    key = (w1, w2, graded)
    hit = _bracket_cache.get(key)
    if hit is not None:
        return hit
    if w2[0] < w1[0]:
        flipped = _bracket_words(w2, w1, graded)
        sign = -((-1) ** (len(w1) * len(w2))) if graded else -1
        out = {w: sign * c for w, c in flipped.items()}
    elif len(w2) == 1:
        out = {w1 + w2: 1}
    else:
        a, b = w2[:-1], w2[-1:]
        first = _combo_bracket_word(_bracket_words(w1, a, graded), b, graded)
        second = _combo_bracket_word(_bracket_words(w1, b, graded), a, graded)
        sign = (-1) ** len(a) if graded else 1
        out = dict(first)
        for w, c in second.items():
            v = out.get(w, 0) - sign * c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    _bracket_cache[key] = out
    return out


def _combo_bracket_word(combo: dict, w: tuple, graded: bool) -> dict:
    out: dict[tuple, int] = {}
    for w1, c in combo.items():
        for w2, d in _bracket_words(w1, w, graded).items():
            v = out.get(w2, 0) + c * d
            if v:
                out[w2] = v
            else:
                out.pop(w2, None)
    return out


def _as_combo(x) -> dict:
    if isinstance(x, dict):
        return x
    return {tuple(x): 1}


def lie_bracket(x, y, graded: bool = False) -> dict:
    """Bracket of two words or combinations, normalized to basis words.

    The letter supports must be disjoint (multilinear setting)."""
    cx, cy = _as_combo(x), _as_combo(y)
    out: dict[tuple, int] = {}
    for w1, c1 in cx.items():
        for w2, c2 in cy.items():
            if set(w1) & set(w2):
                raise ValueError(f"overlapping letters: {w1} vs {w2}")
            for w, c in _bracket_words(w1, w2, graded).items():
                v = out.get(w, 0) + c1 * c2 * c
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
    return out


def lie_relabel(x, mapping, graded: bool = False) -> dict:
    """Apply a letter relabeling and renormalize to basis words.

    ``mapping`` is a dict or callable on letters; it must be injective on the
    support.  Labels carry no sign of their own: all signs come from the
    rewriting (in the graded case this realizes the sign-twisted action)."""
    fn: Callable[[int], int] = (
        mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
    )
    out: dict[tuple, int] = {}
    for w, coeff in _as_combo(x).items():
        image = [fn(a) for a in w]
        if len(set(image)) != len(image):
            raise ValueError(f"mapping not injective on {w}")
        acc: dict[tuple, int] = {(image[0],): 1}
        for letter in image[1:]:
            acc = lie_bracket(acc, {(letter,): 1}, graded)
        for v, c in acc.items():
            val = out.get(v, 0) + coeff * c
            if val:
                out[v] = val
            else:
                out.pop(v, None)
    return out
