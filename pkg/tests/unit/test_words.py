import pytest
from hypothesis import given
from strategies import perm_words, plain_words, spaced_words

from kmaj.models import SPACER, Multiset, Word, parse_positions
from kmaj.words import (
    descent_set_k,
    ides,
    inv,
    inversion_set_k,
    maj,
    maj_k,
    splits,
)

W = Word.parse("9 8 6 1 7 3 2 4 5")


def test_parse_word_formats():
    assert Word.parse("9 8 _ 6 1").letters == (9, 8, SPACER, 6, 1)
    assert Word.parse("9,8,_,6,1") == Word.parse("9 8 _ 6 1")
    assert len(W) == 9
    assert W.at(1) == 9
    assert str(Word.parse("2 _ 1 3")) == "2 _ 1 3"


def test_parse_token_is_one_letter():
    assert Word.parse("10").letters == (10,)
    assert Word.parse("12").letters == (12,)
    assert Word.parse("10 2 1").letters == (10, 2, 1)
    assert Word.parse("1 2") != Word.parse("12")


def test_parse_word_rejects_garbage():
    with pytest.raises(ValueError):
        Word.parse("1 x 3")
    with pytest.raises(ValueError):
        Word.parse("1 0 3")


def test_word_json_keeps_spacers():
    w = Word.parse("3 _ 1 2")
    assert w.to_json() == [3, None, 1, 2]
    assert Word.from_json(w.to_json()) == w


def test_multiset_parse():
    assert Multiset.parse("1:2,2:1").letters() == (1, 1, 2)
    assert Multiset.parse("2 1 1") == Multiset.parse("1:2,2:1")
    assert Multiset.parse("1:2,2:1").size == 3
    with pytest.raises(ValueError):
        Multiset.parse("1:x")


def test_multiset_compositions():
    found = Multiset.compositions(3)
    assert len(found) == 4
    assert all(M.size == 3 for M in found)
    assert Multiset.of([1, 2, 3]) in found


def test_parse_positions():
    assert parse_positions("2,5") == frozenset({2, 5})
    assert parse_positions("") == frozenset()
    with pytest.raises(ValueError):
        parse_positions("0")


def test_descent_set_k_example():
    assert descent_set_k(W, 3) == {(1, 4), (2, 5), (3, 6), (5, 8)}


def test_descent_set_k_trivial():
    assert descent_set_k(Word.parse("1 2 3 4 5 6 7 8 9"), 1) == frozenset()
    assert descent_set_k(Word.parse("9 _ 8"), 1) == frozenset()


def test_inversion_set_k_example():
    assert inversion_set_k(W, 3) == {
        (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (5, 6), (5, 7), (6, 7),
    }


def test_inversion_set_k_edges():
    assert inversion_set_k(W, 1) == frozenset()
    assert inversion_set_k(Word.parse("3 2 1"), 99) == {(1, 2), (1, 3), (2, 3)}


def test_maj_k_examples():
    assert maj_k(W, 3) == 19
    assert maj_k(Word.parse("6 9 3 8 1 7 2 4 5"), 2) == 19
    assert all(maj_k(Word.parse("1 2 3 4 5"), k) == 0 for k in range(1, 7))


def test_classical_statistics():
    assert inv(Word.parse("3 2 1")) == 3
    assert maj(W) == maj_k(W, 1)
    assert inv(W) == maj_k(W, 9)


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        maj_k(W, 0)


def test_ides_examples():
    assert ides(W) == {2, 5, 7, 8}
    assert ides(Word.parse("1 2 3 4 5")) == frozenset()
    assert ides(Word.parse("5 4 3 2 1")) == {1, 2, 3, 4}
    assert ides(Word.parse("2 1 3")) == {1}
    assert ides(Word.parse("3 1 2")) == {2}
    assert ides(Word.parse("3 _ 1 2")) == {2}


def test_ides_rejects_repeats():
    with pytest.raises(ValueError):
        ides(Word.parse("1 1 2"))


def test_splits_examples():
    assert splits(4, 7, 3)
    assert not splits(3, 8, 6)
    assert not splits(5, 5, 5)
    assert not splits(SPACER, 1, 3)


@given(spaced_words())
def test_inversions_are_union_of_descents(w):
    for k in range(1, len(w) + 2):
        union = frozenset().union(*(descent_set_k(w, j) for j in range(1, k)))
        assert inversion_set_k(w, k) == union


@given(spaced_words())
def test_maj_k_interpolates(w):
    assert maj_k(w, 1) == maj(w)
    for k in range(max(len(w), 1), len(w) + 3):
        assert maj_k(w, k) == inv(w)


@given(spaced_words())
def test_pairs_avoid_spacers(w):
    blocked = w.spacer_positions
    for k in range(1, len(w) + 1):
        for i, j in descent_set_k(w, k) | inversion_set_k(w, k):
            assert i not in blocked
            assert j not in blocked


@given(plain_words(max_size=3))
def test_splits_symmetric(triple):
    if len(triple) == 3:
        x, a, b = triple.letters
        assert splits(x, a, b) == splits(x, b, a)


@given(perm_words())
def test_ides_of_reverse_is_complement(w):
    n = len(w)
    reverse = Word(tuple(reversed(w.letters)))
    assert ides(w) | ides(reverse) == frozenset(range(1, n))
    assert not ides(w) & ides(reverse)
