from __future__ import annotations

import itertools
import re

import pytest
from hypothesis import given, settings

from conftest import words
from wreathgroups.word import (
    TRIV, ZED, Prod, Triv, Wreath, WordSyntaxError, Zed, beta1, count_words,
    enumerate_words, normalize, parse_word, print_word, word_length,
)

# Pinned by hand: l=1 gives 1, Z; l=2 gives 3 wreaths per atom and 4 products
# (10); l=3 gives 3*10 wreaths plus 2*2*10 products with split (1,2) or (2,1)
# = 70. Total 2 + 10 + 70.
WORDS_L3_A3 = 82


def brute_words(max_length, max_arity):
    """Independent enumeration: grow every tree from smaller trees, dedupe in a set."""
    by_len = {1: {TRIV, ZED}}
    for n in range(2, max_length + 1):
        s = {Wreath(b, k) for b in by_len[n - 1] for k in range(1, max_arity + 1)}
        for i in range(1, n):
            s |= {Prod(a, b) for a, b in itertools.product(by_len[i], by_len[n - i])}
        by_len[n] = s
    return set().union(*by_len.values())


@pytest.mark.parametrize("text, ast", [
    ("Z", Zed()),
    ("1", Triv()),
    ("(1 wr3 Z) x Z", Prod(Wreath(Triv(), 3), Zed())),
    ("((Z wr3 Z) x (Z wr5 Z)) wr7 Z",
     Wreath(Prod(Wreath(Zed(), 3), Wreath(Zed(), 5)), 7)),
    ("Z wr2 Z wr3 Z", Wreath(Wreath(Zed(), 2), 3)),
    ("Z x Z x Z", Prod(Prod(Zed(), Zed()), Zed())),
    ("  Z   wr 2Z ", Wreath(Zed(), 2)),
])
def test_parse(text, ast):
    assert parse_word(text) == ast


@pytest.mark.parametrize("text, pos", [
    ("", 0), ("Z wr0 Z", 4), ("Z wr Z", 5), ("(Z", 2), ("Z)", 1), ("Z wr2 1", 6),
    ("2", 0), ("Z y Z", 2), ("x Z", 0),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.position == pos


@pytest.mark.parametrize("ast, text", [
    (Zed(), "Z"),
    (Wreath(Triv(), 3), "1 wr3 Z"),
    (Prod(Zed(), Zed()), "Z x Z"),
    (Wreath(Prod(Wreath(Zed(), 3), Wreath(Zed(), 5)), 7), "((Z wr3 Z) x (Z wr5 Z)) wr7 Z"),
    (Prod(Wreath(Triv(), 3), Zed()), "(1 wr3 Z) x Z"),
    (Prod(Zed(), Prod(Zed(), Zed())), "Z x (Z x Z)"),
])
def test_print(ast, text):
    assert print_word(ast) == text


def test_beta1_and_length():
    assert beta1(Triv()) == 0
    assert beta1(parse_word("(1 wr3 Z) x Z")) == 2
    assert beta1(parse_word("((Z wr3 Z) x (Z wr5 Z)) wr7 Z")) == 5
    assert word_length(Zed()) == word_length(Triv()) == 1
    assert word_length(parse_word("(Z wr3 Z) x 1")) == 3


@pytest.mark.parametrize("before, after", [
    (Wreath(Triv(), 3), Zed()),
    (Prod(Triv(), Zed()), Zed()),
    (Wreath(Zed(), 1), Prod(Zed(), Zed())),
    (Prod(Wreath(Triv(), 4), Triv()), Zed()),
    (Wreath(Wreath(Triv(), 2), 5), Wreath(Zed(), 5)),
])
def test_normalize(before, after):
    assert normalize(before) == after


def test_enumerate_small():
    assert enumerate_words(1, 5) == [Triv(), Zed()]
    two = enumerate_words(2, 2)
    assert Wreath(Zed(), 2) in two and Prod(Zed(), Zed()) in two


def test_enumerate_count_pinned():
    assert len(enumerate_words(3, 3)) == WORDS_L3_A3
    assert len(brute_words(3, 3)) == WORDS_L3_A3


@pytest.mark.parametrize("n, a", [(4, 2), (5, 3), (4, 5)])
def test_enumerate_matches_brute(n, a):
    got = enumerate_words(n, a)
    assert len(got) == len(set(got)) == count_words(n, a)
    assert set(got) == brute_words(n, a)
    assert all(word_length(w) <= n for w in got)


def test_enumerate_deterministic_and_validated():
    assert enumerate_words(4, 3) == enumerate_words(4, 3)
    with pytest.raises(ValueError):
        enumerate_words(0, 3)
    with pytest.raises(ValueError):
        Wreath(Zed(), 0)


@given(words())
def test_roundtrip(w):
    assert parse_word(print_word(w)) == w


@settings(max_examples=200)
@given(words())
def test_normalize_idempotent_keeps_beta1(w):
    n = normalize(w)
    assert normalize(n) == n
    assert beta1(n) == beta1(w)
    assert word_length(n) <= word_length(w)


@given(words())
def test_length_counts_leaves(w):
    assert beta1(w) <= word_length(w)
    # atoms in the printed text: every Z, and every 1 not glued to "wr"
    assert word_length(w) == len(re.findall(r"Z|\b1\b", print_word(w)))
