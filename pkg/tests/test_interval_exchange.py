import pytest

from pcwords import (
    IntervalExchange,
    Word,
    all_compositions,
    compositions,
    default_alphabet,
    enumerate_brute,
    iet_of_word,
    word,
)


def test_build_from_composition_334():
    e = IntervalExchange((3, 3, 4))
    assert e.translations == (7, 1, -6)
    assert e.sigma == (8, 9, 10, 5, 6, 7, 1, 2, 3, 4)
    assert e.minima() == (1, 4, 7)
    assert [list(r) for r in e.intervals()] == [[1, 2, 3], [4, 5, 6], [7, 8, 9, 10]]
    assert [list(r) for r in e.j_intervals()] == [[1, 2, 3, 4], [5, 6, 7], [8, 9, 10]]


def test_build_small_compositions():
    e = IntervalExchange((1, 1))
    assert e.translations == (1, -1)
    assert e.sigma == (2, 1)
    assert e.is_circular()
    e = IntervalExchange((2, 2))
    assert e.translations == (2, -2)
    assert e.sigma == (3, 4, 1, 2)
    assert not e.is_circular()
    assert e.cycles() == [(1, 3), (2, 4)]
    e = IntervalExchange((5, 2))
    assert e.minima() == (1, 6)


def test_composition_validation():
    with pytest.raises(ValueError):
        IntervalExchange(())
    with pytest.raises(ValueError):
        IntervalExchange((2, 0, 1))
    with pytest.raises(ValueError):
        IntervalExchange((1, -2))


def test_circularity_334():
    e = IntervalExchange((3, 3, 4))
    assert e.is_circular()
    assert e.cycles() == [(1, 8, 2, 9, 3, 10, 4, 5, 6, 7)]


def test_encoding_examples():
    e = IntervalExchange((3, 3, 4))
    assert str(e.encoding(1)) == "acacacbbbc"
    assert str(e.encoding(4)) == "bbbcacacac"
    assert str(IntervalExchange((1, 1)).encoding(1)) == "ab"


def test_encoding_needs_a_single_cycle():
    with pytest.raises(ValueError):
        IntervalExchange((2, 2)).encoding(1)
    with pytest.raises(ValueError):
        IntervalExchange((3, 3, 4)).encoding(11)


def test_iet_of_word_examples():
    e, r = iet_of_word(word("acacacbbbc"))
    assert e.parts == (3, 3, 4) and r == 1
    e, r = iet_of_word(word("ab"))
    assert e.parts == (1, 1) and r == 1
    e, r = iet_of_word(word("bbbcacacac"))
    assert e.parts == (3, 3, 4) and r == 4


def test_iet_of_word_rejects_non_clustering_words():
    with pytest.raises(ValueError):
        iet_of_word(word("apartment"))
    with pytest.raises(ValueError):
        iet_of_word(word("aa"))


def test_iet_of_word_skips_missing_letters():
    # declared over abc but using only a and c: composition over the support
    e, r = iet_of_word(word("ac", "abc"))
    assert e.parts == (1, 1) and r == 1


def test_compositions_generator():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    assert list(compositions(2, 3)) == []
    from math import comb

    expected = sum(
        comb(n - 1, k - 1) for n in range(1, 7) for k in range(1, min(n, 3) + 1)
    )
    assert sum(1 for _ in all_compositions(6, 3)) == expected


def test_block_images_preserve_order():
    for parts in all_compositions(10, 4):
        e = IntervalExchange(parts)
        for block in e.intervals():
            images = [e.apply(x) for x in block]
            assert images == sorted(images)
            target = e.j_intervals()[e.k - e.block_of(block[0])]
            assert images == list(target)


def test_minima_step_criterion():
    for parts in all_compositions(12, 4):
        e = IntervalExchange(parts)
        minima = e.minima()
        for h in range(1, e.k):
            steps = e.apply(minima[h - 1]) == minima[h]
            balanced = sum(parts[h:]) == sum(parts[:h])
            assert steps == balanced


def test_encodings_increase_with_the_start_point():
    for parts in all_compositions(12, 4):
        e = IntervalExchange(parts)
        if not e.is_circular():
            continue
        encodings = [e.encoding(r) for r in range(1, e.n + 1)]
        assert all(a < b for a, b in zip(encodings, encodings[1:]))


def test_exchange_acts_as_the_conjugation_map_on_sorted_rotations():
    # identify sorted rotations with 1..n: the exchange is the first-to-last map
    for rep in enumerate_brute(3, 12):
        rows = rep.conjugates_sorted()
        e, _ = iet_of_word(rep)
        for r, row in enumerate(rows, start=1):
            assert row.rotated() == rows[e.apply(r) - 1]


def test_round_trip_through_the_exchange():
    for rep in enumerate_brute(3, 10):
        for w in rep.rotations():
            e, r = iet_of_word(w)
            assert str(e.encoding(r, alphabet=w.support_alphabet())) == str(w)
