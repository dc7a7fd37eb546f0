"""Word statistics: k-descents, k-inversions, the k-major index, iDes, splitting."""

from __future__ import annotations

from .models import IndexPairSet, Letter, Word


def greater(a: Letter, b: Letter) -> bool:
    """a > b, false whenever either side is a spacer."""
    return isinstance(a, int) and isinstance(b, int) and a > b


def splits(x: Letter, a: Letter, b: Letter) -> bool:
    if not (isinstance(x, int) and isinstance(a, int) and isinstance(b, int)):
        return False
    return a <= x < b or b <= x < a


def descent_set_k(w: Word, k: int) -> IndexPairSet:
    _check_k(k)
    letters = w.letters
    return frozenset(
        (i, i + k) for i in range(1, len(letters) - k + 1) if greater(letters[i - 1], letters[i + k - 1])
    )


def inversion_set_k(w: Word, k: int) -> IndexPairSet:
    _check_k(k)
    letters = w.letters
    n = len(letters)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, min(i + k, n + 1))
        if greater(letters[i - 1], letters[j - 1])
    )


def maj_k(w: Word, k: int) -> int:
    return len(inversion_set_k(w, k)) + sum(i for i, _ in descent_set_k(w, k))


def inv(w: Word) -> int:
    letters = w.letters
    n = len(letters)
    return sum(1 for i in range(n) for j in range(i + 1, n) if greater(letters[i], letters[j]))


def maj(w: Word) -> int:
    letters = w.letters
    return sum(i for i in range(1, len(letters)) if greater(letters[i - 1], letters[i]))


def descent_positions(w: Word) -> frozenset[int]:
    letters = w.letters
    return frozenset(i for i in range(1, len(letters)) if greater(letters[i - 1], letters[i]))


def ides(w: Word) -> frozenset[int]:
    """Descent set of the inverse: the i for which i+1 sits to the left of i."""
    require_permutation(w)
    m = len(w.values())
    pos = {x: p for p, x in enumerate(w.letters, start=1) if isinstance(x, int)}
    return frozenset(i for i in range(1, m) if pos[i + 1] < pos[i])


def require_permutation(w: Word) -> None:
    if not w.is_permutation():
        raise ValueError(f"Expected a permutation of 1..m (spacers allowed), got {w}")


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
