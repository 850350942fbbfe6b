from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liebasis.errors import AlphabetError, ParseError
from liebasis.words import (
    Alphabet,
    Content,
    Word,
    brute_force_lyndon,
    cyclic_permutations,
    enumerate_lyndon_by_content,
    enumerate_lyndon_by_length,
    is_lyndon,
    lex_compare,
)


def naive_lyndon(s, order="abc"):
    """Independent oracle: compare rank tuples against every rotation."""
    key = [order.index(c) for c in s]
    return all(key < [order.index(c) for c in s[i:] + s[:i]] for i in range(1, len(s)))


@pytest.mark.parametrize(
    "u, v, expected",
    [("aab", "ab", -1), ("a", "ab", -1), ("abab", "abab", 0), ("b", "aaaa", 1)],
)
def test_lex_compare(u, v, expected):
    assert lex_compare(u, v) == expected


def test_lex_compare_respects_alphabet_order():
    assert lex_compare("a", "b", "ba") == 1
    ba = Alphabet("ba")
    assert Word("ba", ba) < Word("ab", ba)


def test_lex_compare_mismatched_alphabets():
    with pytest.raises(AlphabetError):
        lex_compare(Word("ab", Alphabet("ab")), Word("ab", Alphabet("ba")))


def test_cyclic_permutations():
    assert cyclic_permutations("abcd") == ["bcda", "cdab", "dabc"]
    assert cyclic_permutations("aaabb") == ["aabba", "abbaa", "bbaaa", "baaab"]
    assert cyclic_permutations("a") == []


@pytest.mark.parametrize(
    "w, expected", [("aaabb", True), ("abab", False), ("aabba", False), ("abbaa", False), ("x", True)]
)
def test_is_lyndon(w, expected):
    assert is_lyndon(w) is expected


def test_word_and_alphabet_validation():
    with pytest.raises(AlphabetError):
        Alphabet("")
    with pytest.raises(AlphabetError):
        Alphabet("aba")
    with pytest.raises(AlphabetError):
        Word("", Alphabet("ab"))
    with pytest.raises(AlphabetError):
        Word("abc", Alphabet("ab"))


def test_enumerate_by_length_examples():
    assert enumerate_lyndon_by_length("ab", 1) == ["a", "b"]
    assert enumerate_lyndon_by_length("ab", 4) == ["aaab", "aabb", "abbb"]
    # independent filter of all 16 words
    oracle = ["".join(p) for p in product("ab", repeat=4) if naive_lyndon("".join(p))]
    assert oracle == ["aaab", "aabb", "abbb"]


def test_enumerate_by_content_examples():
    assert enumerate_lyndon_by_content("a:3,b:3") == ["aaabbb", "aababb", "aabbab"]
    assert enumerate_lyndon_by_content("a:1") == ["a"]
    arrangements = {"".join(p) for p in product("ab", repeat=4) if sorted(p) == list("aabb")}
    assert len(arrangements) == 6
    assert sorted(w for w in arrangements if naive_lyndon(w)) == ["aabb"]
    assert enumerate_lyndon_by_content("a:2,b:2") == ["aabb"]


@pytest.mark.parametrize("alphabet, n", [("ab", n) for n in range(1, 9)] + [("abc", n) for n in range(1, 7)])
def test_fast_enumeration_matches_filter(alphabet, n):
    expected = ["".join(p) for p in product(alphabet, repeat=n) if naive_lyndon("".join(p), alphabet)]
    assert enumerate_lyndon_by_length(alphabet, n) == expected
    assert brute_force_lyndon(alphabet, n) == expected


def test_enumeration_honours_custom_order():
    assert enumerate_lyndon_by_length("ba", 2) == ["ba"]
    assert all(is_lyndon(w, "cba") for w in enumerate_lyndon_by_length("cba", 5))


@pytest.mark.parametrize("n", range(1, 8))
def test_lyndon_starts_with_minimal_letter(n):
    for p in product("abc", repeat=n):
        w = "".join(p)
        if n >= 2 and is_lyndon(w):
            assert w[0] == min(w)


@pytest.mark.parametrize("n", range(2, 9))
def test_lyndon_words_are_never_alpha_chi_alpha(n):
    for w in enumerate_lyndon_by_length("ab", n):
        for k in range(1, n // 2 + 1):
            assert w[:k] != w[-k:], w


@pytest.mark.parametrize("n", range(1, 8))
def test_content_enumeration_is_filter_by_content(n):
    from collections import Counter

    by_length = enumerate_lyndon_by_length("abc", n)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            content = Content.of("a" * i + "b" * j + "c" * k)
            expected = [w for w in by_length if Counter(w) == content.as_counter()]
            assert enumerate_lyndon_by_content(content, "abc") == expected


def test_content_parse_and_print():
    c = Content.parse("b:3, a:2")
    assert str(c) == "a:2,b:3"
    assert c.total == 5
    with pytest.raises(ParseError):
        Content.parse("a3")
    with pytest.raises(ParseError):
        Content.parse("a:0")
    with pytest.raises(ParseError):
        Content.parse("a:1,a:2")


@given(st.text(alphabet="abc", min_size=1, max_size=9))
def test_is_lyndon_matches_oracle(w):
    assert is_lyndon(w, "abc") == naive_lyndon(w)


@given(st.text(alphabet="abc", min_size=1, max_size=9), st.text(alphabet="abc", min_size=1, max_size=9))
def test_lex_compare_is_antisymmetric(u, v):
    assert lex_compare(u, v, "abc") == -lex_compare(v, u, "abc")
    assert (lex_compare(u, v, "abc") == 0) == (u == v)
