import itertools

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pcwords import Alphabet, Word, default_alphabet, word

words3 = st.text(alphabet="abc", min_size=0, max_size=30).map(
    lambda s: word(s, "abc"))
nonempty3 = st.text(alphabet="abc", min_size=1, max_size=30).map(
    lambda s: word(s, "abc"))


def test_alphabet_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        Alphabet("aba")
    with pytest.raises(ValueError):
        Alphabet("")


def test_alphabet_order_is_positional():
    reversed_order = Alphabet("ba")
    assert word("b", reversed_order) < word("a", reversed_order)
    assert word("ab", reversed_order).is_lyndon() is False
    assert word("ba", reversed_order).is_lyndon() is True


def test_from_str_defaults_to_sorted_distinct_characters():
    w = word("apartment")
    assert w.alphabet == Alphabet("aemnprt")
    assert str(w) == "apartment"


def test_empty_word_needs_explicit_alphabet():
    with pytest.raises(ValueError):
        word("")
    assert len(word("", "ab")) == 0


def test_unknown_letter_rejected():
    with pytest.raises(ValueError):
        word("abc", "ab")


def test_is_primitive():
    assert not word("aa").is_primitive()
    assert word("ab").is_primitive()
    assert word("apartment").is_primitive()
    assert not word("abab").is_primitive()
    assert not word("abcabcabc", "abc").is_primitive()
    with pytest.raises(ValueError):
        word("", "ab").is_primitive()


def test_conjugates_sorted():
    assert [str(r) for r in word("aab").conjugates_sorted()] == ["aab", "aba", "baa"]
    assert [str(r) for r in word("a").conjugates_sorted()] == ["a"]
    with pytest.raises(ValueError):
        word("abab").conjugates_sorted()


def test_conjugates_sorted_apartment_matches_matrix_rows():
    rows = [str(r) for r in word("apartment").conjugates_sorted()]
    assert rows == [
        "apartment", "artmentap", "entapartm", "mentapart", "ntapartme",
        "partmenta", "rtmentapa", "tapartmen", "tmentapar",
    ]


def test_is_lyndon():
    assert word("aab").is_lyndon()
    assert not word("aba").is_lyndon()
    assert word("acacacbbbc").is_lyndon()
    assert word("a").is_lyndon()  # single letters count
    assert not word("aa").is_lyndon()


def test_reversal_and_palindrome():
    assert str(word("aab").reversal()) == "baa"
    assert word("aabaa").is_palindrome()
    assert word("", "ab").is_palindrome()
    assert not word("aab").is_palindrome()


def test_parikh():
    assert word("acacacbbbc").parikh() == (3, 3, 4)
    assert word("", "abc").parikh() == (0, 0, 0)
    assert word("aaabaab").parikh() == (5, 2)


def test_rotated():
    assert str(word("aab").rotated()) == "aba"
    assert str(word("a").rotated()) == "a"
    assert str(word("apartment").rotated()) == "partmenta"
    with pytest.raises(ValueError):
        word("", "ab").rotated()


def test_support():
    w = word("aca", "abc")
    assert w.support() == (0, 2)
    assert w.support_alphabet() == Alphabet("ac")


def test_concatenation_and_comparison_require_same_alphabet():
    with pytest.raises(ValueError):
        word("ab") + word("ab", "abc")
    with pytest.raises(ValueError):
        word("ab") < word("ab", "abc")


def test_is_conjugate_to():
    assert word("aab").is_conjugate_to(word("aba"))
    assert not word("aab").is_conjugate_to(word("abb"))
    assert not word("aab").is_conjugate_to(word("aabb"))
    assert word("", "ab").is_conjugate_to(word("", "ab"))


@given(words3)
def test_reversal_is_an_involution(w):
    assert w.reversal().reversal() == w


@given(words3)
def test_palindrome_means_fixed_by_reversal(w):
    assert w.is_palindrome() == (w == w.reversal())


@given(words3)
def test_parikh_sums_to_length(w):
    assert sum(w.parikh()) == len(w)


@given(nonempty3)
def test_rotating_n_times_is_the_identity(w):
    n = len(w)
    orbit = [w]
    for _ in range(n - 1):
        orbit.append(orbit[-1].rotated())
    assert orbit[-1].rotated() == w
    assert set(orbit) == set(w.rotations())


@given(nonempty3)
def test_sorted_conjugates_are_strictly_increasing(w):
    assume(w.is_primitive())
    rows = w.conjugates_sorted()
    assert len(rows) == len(w)
    assert all(a < b for a, b in zip(rows, rows[1:]))
    assert rows[0].is_lyndon()


def _splits_into_two_palindromes(s):
    return any(
        s[:i] == s[:i][::-1] and s[i:] == s[i:][::-1] for i in range(len(s) + 1)
    )


def test_conjugate_to_reversal_iff_product_of_two_palindromes():
    # exhaustive over both alphabets; raw strings keep the scan fast
    for sigma in ("ab", "abc"):
        for n in range(1, 13):
            for letters in itertools.product(sigma, repeat=n):
                s = "".join(letters)
                conjugate_to_reversal = s[::-1] in s + s
                assert conjugate_to_reversal == _splits_into_two_palindromes(s), s
