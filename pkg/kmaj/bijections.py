"""The involutions gamma_j^(k), the bijections phi^(k) / psi^(k), their compositions, Foata's map."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations

from .models import Word
from .words import splits


@dataclass(frozen=True)
class GammaIndexSet:
    indices: tuple[int, ...]
    word_length: int
    j: int
    k: int

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, i: object) -> bool:
        return i in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.indices)


def gamma_index_set(w: Word, j: int, k: int) -> GammaIndexSet:
    _check_step(k)
    n = len(w)
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in [1, {n}], got {j}")
    letters = w.letters
    indices: list[int] = []
    i = j - k
    # chain is read off the unmodified word; selected indices are k apart so swaps commute
    if i >= 1 and splits(letters[j - 1], letters[i - 1], letters[i]):
        indices.append(i)
        while i - k >= 1:
            a, b = letters[i - k - 1], letters[i - k]
            if splits(letters[i - 1], a, b) == splits(letters[i], a, b):
                break
            i -= k
            indices.append(i)
    return GammaIndexSet(indices=tuple(indices), word_length=n, j=j, k=k)


def gamma(w: Word, j: int, k: int) -> Word:
    chain = gamma_index_set(w, j, k)
    if not chain.indices:
        return w
    return w.swap_many(chain.indices)


def phi_k(w: Word, k: int) -> Word:
    _check_step(k)
    for j in range(k + 1, len(w) + 1):
        w = gamma(w, j, k)
    return w


def psi_k(w: Word, k: int) -> Word:
    _check_step(k)
    for j in range(len(w), k, -1):
        w = gamma(w, j, k)
    return w


def phi_range(w: Word, i: int, h: int) -> Word:
    """phi^[i,h] = phi^(i) o ... o phi^(h+1), carrying maj_h to maj_i."""
    if not 1 <= h < i:
        raise ValueError(f"phi_range needs 1 <= h < i, got i={i}, h={h}")
    for k in range(h + 1, i + 1):
        w = phi_k(w, k)
    return w


def gamma_prefix_delta(w: Word, j: int, k: int) -> int:
    """Change in maj_k of w_1..w_{j-1} caused by gamma_j^(k)."""
    _check_step(k)
    if j <= k:
        return 0
    x, a, b = w.at(j), w.at(j - k), w.at(j - k + 1)
    if not (isinstance(x, int) and isinstance(a, int) and isinstance(b, int)):
        return 0
    if b > x >= a:
        return 1
    if a > x >= b:
        return -1
    return 0


def foata(w: Word) -> Word:
    """Foata's second fundamental transformation: maj(w) = inv(foata(w))."""
    if w.spacer_positions:
        raise ValueError(f"Foata's transformation is defined on spacer-free words, got {w}")
    u: list[int] = []
    for x in w.values():
        if u:
            cut_at_small = x >= u[-1]
            blocks: list[list[int]] = []
            current: list[int] = []
            for y in u:
                current.append(y)
                if (y <= x) if cut_at_small else (y > x):
                    blocks.append(current)
                    current = []
            u = [letter for block in blocks for letter in (block[-1], *block[:-1])]
        u.append(x)
    return Word(tuple(u))


def foata_divergence(n: int) -> list[Word]:
    """Permutations of length n on which phi^[n,1] and Foata's map disagree."""
    witnesses = []
    for perm in permutations(range(1, n + 1)):
        w = Word(perm)
        ours = phi_range(w, n, 1) if n >= 2 else w
        if ours != foata(w):
            witnesses.append(w)
    return witnesses


def _check_step(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
