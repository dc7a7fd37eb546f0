import pytest

from kmaj.distributions import (
    QPolynomial,
    Stat,
    q_hook_oracle,
    q_multinomial,
    syt_distribution,
    verify_mahonian,
    word_count,
    word_distribution,
    word_distributions,
    words_on,
)
from kmaj.models import Multiset
from kmaj.tableaux import Partition, partitions

ABC = Multiset.of([1, 2, 3])
GAPS = frozenset({2, 5})


def test_qpolynomial_format_and_trim():
    assert str(QPolynomial((1, 2, 2, 1))) == "1 + 2q + 2q^2 + q^3"
    assert str(QPolynomial((0, 0, 1, 0, 1))) == "q^2 + q^4"
    assert str(QPolynomial(())) == "0"
    assert QPolynomial((1, 0, 0)).coeffs == (1,)
    assert QPolynomial.from_json({"coeffs": [1, 1]}) == QPolynomial((1, 1))


def test_qpolynomial_arithmetic():
    one_plus_q = QPolynomial((1, 1))
    assert one_plus_q * one_plus_q == QPolynomial((1, 2, 1))
    assert one_plus_q + QPolynomial((0, 0, 3)) == QPolynomial((1, 1, 3))
    assert QPolynomial.from_exponents([0, 2, 2]) == QPolynomial((1, 0, 2))
    with pytest.raises(ValueError):
        QPolynomial((1, -1))


def test_q_multinomial():
    assert q_multinomial(ABC) == QPolynomial((1, 2, 2, 1))
    assert q_multinomial(Multiset.of([1, 1, 2])) == QPolynomial((1, 1, 1))
    assert q_multinomial(Multiset(())) == QPolynomial((1,))
    assert q_multinomial(Multiset.parse("1:2,2:2")).total() == 6


def test_words_on_is_lexicographic():
    found = [str(w) for w in words_on(Multiset.of([1, 1, 2]))]
    assert found == ["1 1 2", "1 2 1", "2 1 1"]
    assert [str(w) for w in words_on(Multiset.of([1, 2]), frozenset({2}))] == ["1 _ 2", "2 _ 1"]
    assert word_count(Multiset.parse("1:2,2:2")) == 6


def test_word_distribution_equidistributed():
    for k in range(1, 5):
        assert word_distribution(ABC, frozenset(), Stat.MAJ_K, k) == QPolynomial((1, 2, 2, 1))
    assert word_distribution(ABC, frozenset(), Stat.INV) == QPolynomial((1, 2, 2, 1))


def test_spacers_break_equidistribution():
    dists = word_distributions(ABC, GAPS, range(1, 6))
    assert dists[1] == QPolynomial((3, 0, 0, 3))
    assert dists[2] == QPolynomial((1, 4, 1))
    for k in (3, 4, 5):
        assert dists[k] == QPolynomial((1, 2, 2, 1))
    assert word_distribution(ABC, GAPS, Stat.MAJ) == dists[1]
    assert word_distribution(ABC, GAPS, Stat.INV) == dists[5]


def test_verify_mahonian_without_spacers():
    for M in Multiset.compositions(5):
        report = verify_mahonian(M, frozenset(), 6)
        assert report.passed
        assert report.oracle_match is True


def test_verify_mahonian_reports_spacer_failure():
    report = verify_mahonian(ABC, GAPS, 5)
    assert report.oracle_match is None
    assert report.per_k == {1: True, 2: False, 3: False, 4: False, 5: False}
    assert not report.passed
    assert report.to_json()["distributions"]["1"] == {"coeffs": [3, 0, 0, 3]}


def test_infeasible_multiset_rejected():
    with pytest.raises(ValueError):
        word_distribution(Multiset.of(list(range(1, 13))), frozenset(), Stat.MAJ)


def test_spacer_position_out_of_range():
    with pytest.raises(ValueError):
        list(words_on(ABC, frozenset({9})))


def test_syt_distribution_2_2():
    for k in (1, 2, 3):
        assert syt_distribution(Partition((2, 2)), k) == QPolynomial((0, 0, 1, 0, 1))
    assert q_hook_oracle(Partition((2, 2))) == QPolynomial((0, 0, 1, 0, 1))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_syt_distributions_agree_with_hook_oracle(n):
    for shape in partitions(n):
        oracle = q_hook_oracle(shape)
        assert oracle.total() == shape.hook_count()
        for k in (1, 2, 3):
            assert syt_distribution(shape, k) == oracle


def test_k4_distribution_differs_on_2_2_2():
    shape = Partition((2, 2, 2))
    assert syt_distribution(shape, 3) != syt_distribution(shape, 4, experimental=True)
