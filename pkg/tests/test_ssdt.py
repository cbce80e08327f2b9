import random

import pytest
from hypothesis import given, strategies as st

from helpers import S, T, W
from oracles import highest_word_formula, is_hook_brute, lowest_word_formula, max_hook_subword_brute
from qcrystal.graph import CrystalError, CrystalTooLarge
from qcrystal.partitions import strict_partitions
from qcrystal.ssdt import (
    EMPTY,
    ShiftedTableau,
    build_crystal,
    crystal_words,
    highest_tableau,
    hook_parts,
    hook_split,
    is_hook,
    lowest_tableau,
    max_hook_subword_len,
    tableaux,
    validate,
    violation,
)
from qcrystal.weyl import Permutation, w_action
from qcrystal.words import all_words


def test_hook_examples():
    assert hook_split(W("66135")) == 3
    assert hook_parts(W("66135")) == (W("661"), W("35"))
    assert not is_hook(W("121"))
    assert hook_split(W("2")) == 1
    assert hook_split(W("3321")) == 4
    with pytest.raises(ValueError):
        hook_split(())
    with pytest.raises(ValueError):
        hook_parts(W("121"))


def test_every_length_two_word_is_a_hook():
    for w in all_words(2, 6):
        assert is_hook(w)


def test_is_hook_matches_brute_force():
    for N in range(1, 6):
        for w in all_words(N, 3):
            assert is_hook(w) == is_hook_brute(w), S(w)


@pytest.mark.parametrize("word, expected", [("1123", 4), ("1211", 3), ("", 0), ("66135", 5)])
def test_max_hook_subword_examples(word, expected):
    assert max_hook_subword_len(W(word)) == expected


def test_max_hook_subword_matches_subsets_exhaustive():
    for N in range(0, 8):
        for w in all_words(N, 3):
            assert max_hook_subword_len(w) == max_hook_subword_brute(w), S(w)


def test_max_hook_subword_matches_subsets_sampled():
    rng = random.Random(20261018)
    for _ in range(60):
        N = rng.randint(8, 16)
        w = tuple(rng.randint(1, 6) for _ in range(N))
        assert max_hook_subword_len(w) == max_hook_subword_brute(w), S(w)


@pytest.mark.parametrize(
    "rows, ok, condition",
    [
        (("211", "1"), True, None),
        (("123", "1"), False, "condition (ii)"),
        (("121", "1"), False, "condition (i)"),
        (("1", "1"), False, "strict"),
    ],
)
def test_validate_examples(rows, ok, condition):
    tab = T(*rows)
    assert validate(tab) is ok
    problem = violation(tab)
    if ok:
        assert problem is None
    else:
        assert condition in problem


def test_reading_words():
    assert T("211", "1").reading_word() == W("1211")
    assert T("66135").reading_word() == W("66135")
    assert T("66325", "421", "3").reading_word() == W("342166325")
    assert EMPTY.reading_word() == ()


def test_from_word_round_trip_and_mismatch():
    tab = T("66325", "421", "3")
    assert ShiftedTableau.from_word(tab.reading_word(), tab.shape) == tab
    with pytest.raises(ValueError):
        ShiftedTableau.from_word(W("121"), (3, 1))
    with pytest.raises(ValueError):
        ShiftedTableau(((1,), ()))


def test_str():
    assert str(T("211", "1")) == "211/1"
    assert str(ShiftedTableau(((10, 3), (2,)))) == "10.3/2"


def test_extremal_tableaux_example():
    lam = (7, 4, 2)
    assert highest_tableau(lam, 4) == T("3322111", "2211", "11")
    assert lowest_tableau(lam, 4) == T("4444444", "3333", "22")
    assert highest_tableau((3, 1), 3) == T("211", "1")
    assert lowest_tableau((3, 1), 3) == T("333", "2")
    assert highest_tableau((4,), 5) == T("1111")
    assert lowest_tableau((4,), 5) == T("5555")
    with pytest.raises(ValueError):
        highest_tableau((3, 2, 1), 2)


def strict_upto(max_size, n):
    for N in range(0, max_size + 1):
        yield from strict_partitions(N, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_extremal_tableaux_valid_and_match_formula(n):
    w0 = Permutation.longest(n)
    for lam in strict_upto(8, n):
        top, bottom = highest_tableau(lam, n), lowest_tableau(lam, n)
        assert top.shape == lam and bottom.shape == lam
        assert validate(top) and validate(bottom)
        assert top.reading_word() == highest_word_formula(lam)
        assert bottom.reading_word() == lowest_word_formula(lam, n)
        assert w_action(top.reading_word(), w0) == bottom.reading_word()


@pytest.mark.parametrize("lam, count", [((2, 1), 8), ((3,), 19), ((3, 1), 24), ((1,), 3), ((), 1)])
def test_build_crystal_counts(lam, count):
    G = build_crystal(lam, 3)
    assert len(G) == count
    assert G.highest() == [highest_tableau(lam, 3).reading_word()]
    assert G.lowest() == [lowest_tableau(lam, 3).reading_word()]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_crystal_structure(n):
    for lam in strict_upto(5, n):
        G = build_crystal(lam, n)
        assert len(G.highest()) == 1 and len(G.lowest()) == 1
        assert all(validate(t) for t in tableaux(lam, n))
        top_weight = tuple(lam) + (0,) * (n - len(lam))
        weights = [G.weight(v) for v in G]
        assert weights.count(top_weight) == 1
        assert all(min(mu) >= 0 and sum(mu) == sum(lam) for mu in weights)
        # every weight is dominated by the top weight after sorting
        for mu in weights:
            s = sorted(mu, reverse=True)
            assert all(sum(s[:k]) <= sum(top_weight[:k]) for k in range(1, n + 1))


def test_crystal_is_connected():
    G = build_crystal((3, 1), 3)
    seen, stack = set(), [G.highest()[0]]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        for (a, _), b in G.edges.items():
            if a == v:
                stack.append(b)
            if b == v:
                stack.append(a)
    assert seen == set(G.vertices)


def test_build_crystal_guard():
    with pytest.raises(CrystalTooLarge):
        build_crystal((4, 2), 4, max_vertices=10)
    assert issubclass(CrystalTooLarge, RuntimeError)
    assert issubclass(CrystalError, RuntimeError)


def test_crystal_words_sorted_and_cached():
    words = crystal_words((2, 1), 3)
    assert list(words) == sorted(words)
    assert crystal_words((2, 1), 3) is words


@given(st.lists(st.integers(1, 5), min_size=1, max_size=10).map(tuple))
def test_hook_split_is_consistent(w):
    k = hook_split(w)
    assert (k is not None) == is_hook_brute(w)
    if k is not None:
        dec, inc = w[:k], w[k:]
        assert all(a >= b for a, b in zip(dec, dec[1:]))
        assert all(a < b for a, b in zip(inc, inc[1:]))
        assert not inc or dec[-1] < inc[0]

