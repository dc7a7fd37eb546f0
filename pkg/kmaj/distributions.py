"""q-polynomial generating functions over word sets and tableau sets."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from math import factorial, prod

import sympy
from sympy.utilities.iterables import multiset_permutations

from .models import Multiset, Word
from .tableaux import Partition, enumerate_syt, maj_k_T
from .words import inv, maj, maj_k

MAX_WORDS = 5_000_000

_q = sympy.Symbol("q")


class Stat(StrEnum):
    MAJ_K = "maj_k"
    MAJ = "maj"
    INV = "inv"


@dataclass(frozen=True)
class QPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        if any(c < 0 for c in coeffs):
            raise ValueError(f"Coefficients must be nonnegative: {coeffs}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPolynomial:
        counts = Counter(exponents)
        if not counts:
            return cls(())
        return cls(tuple(counts.get(e, 0) for e in range(max(counts) + 1)))

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> QPolynomial:
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    def __add__(self, other: QPolynomial) -> QPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return QPolynomial(tuple(x + y for x, y in zip(a, b, strict=True)))

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        if not self.coeffs or not other.coeffs:
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return QPolynomial(tuple(out))

    def total(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            power = "q" if e == 1 else f"q^{e}"
            terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict[str, list[int]]:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict[str, list[int]]) -> QPolynomial:
        return cls(tuple(data["coeffs"]))


def word_count(M: Multiset) -> int:
    return factorial(M.size) // prod(factorial(m) for _, m in M.counts)


def words_on(M: Multiset, spacers: frozenset[int] = frozenset()) -> Iterator[Word]:
    """Lexicographic enumeration of the words on M with spacers at the given positions."""
    if spacers and max(spacers) > M.size + len(spacers):
        raise ValueError(f"Spacer positions {sorted(spacers)} exceed length {M.size + len(spacers)}")
    if M.size == 0:
        yield Word.with_spacers((), spacers)
        return
    for letters in multiset_permutations(list(M.letters())):
        yield Word.with_spacers(letters, spacers)


def statistic(w: Word, stat: Stat, k: int) -> int:
    if stat is Stat.MAJ:
        return maj(w)
    if stat is Stat.INV:
        return inv(w)
    return maj_k(w, k)


def word_distribution(
    M: Multiset, spacer_positions: frozenset[int], stat: Stat, k: int = 1
) -> QPolynomial:
    _check_feasible(M)
    return QPolynomial.from_exponents(statistic(w, stat, k) for w in words_on(M, spacer_positions))


def word_distributions(
    M: Multiset, spacer_positions: frozenset[int], ks: Iterable[int]
) -> dict[int, QPolynomial]:
    """maj_k distributions for several k from one pass over the word set."""
    _check_feasible(M)
    ks = list(ks)
    exponents: dict[int, list[int]] = {k: [] for k in ks}
    for w in words_on(M, spacer_positions):
        for k in ks:
            exponents[k].append(maj_k(w, k))
    return {k: QPolynomial.from_exponents(exponents[k]) for k in ks}


def syt_distribution(shape: Partition, k: int, experimental: bool = False) -> QPolynomial:
    return QPolynomial.from_exponents(maj_k_T(T, k, experimental) for T in enumerate_syt(shape))


def _q_bracket(m: int) -> sympy.Poly:
    return sympy.Poly(sum(_q**i for i in range(m)), _q)


def _q_factorial(m: int) -> sympy.Poly:
    return prod((_q_bracket(i) for i in range(1, m + 1)), start=sympy.Poly(1, _q))


def _exact_quotient(num: sympy.Poly, den: sympy.Poly) -> QPolynomial:
    quotient, remainder = sympy.div(num, den)
    if not remainder.is_zero:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return QPolynomial.from_sympy(quotient)


def q_multinomial(M: Multiset) -> QPolynomial:
    """[n]_q! / prod_v [m_v]_q!"""
    den = prod((_q_factorial(m) for _, m in M.counts), start=sympy.Poly(1, _q))
    return _exact_quotient(_q_factorial(M.size), den)


def q_hook_oracle(shape: Partition) -> QPolynomial:
    """sum over SYT(shape) of q^maj(T) = q^b(shape) [n]_q! / prod_cells [h]_q"""
    den = prod((_q_bracket(h) for h in shape.hook_lengths()), start=sympy.Poly(1, _q))
    shift = sympy.Poly(_q ** shape.b_statistic(), _q)
    return _exact_quotient(_q_factorial(shape.size) * shift, den)


@dataclass(frozen=True)
class MahonianReport:
    multiset: Multiset
    spacers: frozenset[int]
    distributions: dict[int, QPolynomial]
    per_k: dict[int, bool]
    oracle_match: bool | None
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        ok = all(self.per_k.values()) and self.oracle_match is not False
        object.__setattr__(self, "passed", ok)

    def to_json(self) -> dict[str, object]:
        return {
            "multiset": self.multiset.to_json(),
            "spacers": sorted(self.spacers),
            "per_k": {str(k): v for k, v in self.per_k.items()},
            "oracle_match": self.oracle_match,
            "distributions": {str(k): p.to_json() for k, p in self.distributions.items()},
            "passed": self.passed,
        }


def verify_mahonian(M: Multiset, spacer_positions: frozenset[int], k_max: int) -> MahonianReport:
    """maj_k distributions for k = 1..k_max compared against maj_1 and, spacer-free, the q-multinomial."""
    ks = range(1, max(k_max, 1) + 1)
    dists = word_distributions(M, spacer_positions, ks)
    reference = dists[1]
    oracle = None if spacer_positions else reference == q_multinomial(M)
    return MahonianReport(
        multiset=M,
        spacers=spacer_positions,
        distributions=dists,
        per_k={k: dists[k] == reference for k in ks},
        oracle_match=oracle,
    )


def _check_feasible(M: Multiset) -> None:
    count = word_count(M)
    if count > MAX_WORDS:
        raise ValueError(f"{count} words on {{{M}}} exceeds the enumeration limit {MAX_WORDS}")
