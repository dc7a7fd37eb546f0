"""Partitions and standard Young tableaux (French orientation: row 1 is the bottom row).

Tableau statistics follow the words module with "w_i > w_n" read as "i attacks n".
Des_k / Inv_k / maj_k and the maps gamma_T / Phi_T are defined for k <= 3; k = 4 is
available only with `experimental=True`, where it reproduces the breakdown on (2,2,2).
"""

from __future__ import annotations

import re
from bisect import bisect_right
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod

from .models import IndexPairSet, Word
from .words import require_permutation

_ROW_SPLIT = re.compile(r"\s*/\s*")
_TOKEN_SPLIT = re.compile(r"[,\s]+")


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError(f"Partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:], strict=False)):
            raise ValueError(f"Partition {self.parts} is not weakly decreasing")

    @classmethod
    def parse(cls, text: str) -> Partition:
        tokens = [t for t in _TOKEN_SPLIT.split(text.strip().strip("()[]")) if t]
        if not all(t.isdigit() for t in tokens):
            raise ValueError(f"Malformed shape {text!r}")
        return cls(tuple(int(t) for t in tokens))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))

    def hook_lengths(self) -> list[int]:
        cols = self.conjugate()
        return [
            (part - c) + (cols[c] - r) - 1
            for r, part in enumerate(self.parts)
            for c in range(part)
        ]

    def hook_count(self) -> int:
        """f^lambda by the hook length formula."""
        return factorial(self.size) // prod(self.hook_lengths())

    def b_statistic(self) -> int:
        return sum(r * part for r, part in enumerate(self.parts))


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""

    def _rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in _rec(remaining - first, first):
                yield (first, *rest)

    for parts in _rec(n, n):
        yield Partition(parts)


@dataclass(frozen=True)
class Cell:
    col: int
    row: int


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lengths = tuple(len(r) for r in self.rows)
        Partition(lengths)
        n = sum(lengths)
        entries = sorted(e for row in self.rows for e in row)
        if entries != list(range(1, n + 1)):
            raise ValueError(f"Entries must be exactly 1..{n}: {self}")
        for r, row in enumerate(self.rows):
            for c, e in enumerate(row):
                if c > 0 and row[c - 1] >= e:
                    raise ValueError(f"Row {r + 1} does not increase: {self}")
                if r > 0 and self.rows[r - 1][c] >= e:
                    raise ValueError(f"Column {c + 1} does not increase upward: {self}")

    @classmethod
    def from_rows(cls, rows: list[list[int]] | tuple[tuple[int, ...], ...]) -> StandardTableau:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def parse(cls, text: str) -> StandardTableau:
        """Rows bottom-up, `/`-separated: `1 3 4 7 / 2 5 6 / 8`."""
        rows = []
        for chunk in _ROW_SPLIT.split(text.strip()):
            tokens = [t for t in _TOKEN_SPLIT.split(chunk) if t]
            if not tokens or not all(t.isdigit() for t in tokens):
                raise ValueError(f"Malformed tableau row {chunk!r} in {text!r}")
            rows.append(tuple(int(t) for t in tokens))
        return cls(tuple(rows))

    def __str__(self) -> str:
        return " / ".join(" ".join(str(e) for e in row) for row in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def _cells(self) -> dict[int, Cell]:
        return {
            e: Cell(col=c, row=r)
            for r, row in enumerate(self.rows, start=1)
            for c, e in enumerate(row, start=1)
        }

    def cell_of(self, entry: int) -> Cell:
        try:
            return self._cells[entry]
        except KeyError:
            raise ValueError(f"{entry} is not an entry of {self}") from None

    def transpose_entries(self, indices: tuple[int, ...] | frozenset[int]) -> StandardTableau:
        """Interchange i and i+1 for every i in `indices`."""
        relabel = {}
        for i in indices:
            relabel[i], relabel[i + 1] = i + 1, i
        return StandardTableau(tuple(tuple(relabel.get(e, e) for e in row) for row in self.rows))

    def to_json(self) -> dict[str, list[int] | list[list[int]]]:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict[str, list[list[int]]]) -> StandardTableau:
        tableau = cls.from_rows(data["rows"])
        if "shape" in data and list(tableau.shape.parts) != list(data["shape"]):
            raise ValueError(f"Shape {data['shape']} does not match rows {data['rows']}")
        return tableau


def enumerate_syt(shape: Partition) -> Iterator[StandardTableau]:
    """Every standard tableau of `shape`, each once; entries are placed 1, 2, ... into addable cells."""
    parts = shape.parts
    n = shape.size
    filling: list[list[int]] = [[] for _ in parts]

    def _rec(entry: int) -> Iterator[StandardTableau]:
        if entry > n:
            yield StandardTableau(tuple(tuple(r) for r in filling))
            return
        for r, part in enumerate(parts):
            length = len(filling[r])
            if length < part and (r == 0 or len(filling[r - 1]) > length):
                filling[r].append(entry)
                yield from _rec(entry + 1)
                filling[r].pop()

    yield from _rec(1)


def descent_set_T(T: StandardTableau) -> IndexPairSet:
    return frozenset(
        (i, i + 1) for i in range(1, T.n) if T.cell_of(i).row < T.cell_of(i + 1).row
    )


def descent_positions_T(T: StandardTableau) -> frozenset[int]:
    return frozenset(i for i, _ in descent_set_T(T))


def maj_T(T: StandardTableau) -> int:
    return sum(i for i, _ in descent_set_T(T))


def attacks(T: StandardTableau, i: int, n: int) -> bool:
    """i attacks n: strictly south and weakly east of n, or strictly southwest with i+1 attacking n."""
    if not 1 <= i < n <= T.n:
        raise ValueError(f"attacks needs 1 <= i < n <= {T.n}, got i={i}, n={n}")
    target = T.cell_of(n)
    while i < n:
        cell = T.cell_of(i)
        if cell.row >= target.row:
            return False
        if cell.col >= target.col:
            return True
        i += 1
    return False


def descent_set_k_T(T: StandardTableau, k: int, experimental: bool = False) -> IndexPairSet:
    _check_stat_k(k, experimental)
    return frozenset((i, i + k) for i in range(1, T.n - k + 1) if attacks(T, i, i + k))


def inversion_set_k_T(T: StandardTableau, k: int, experimental: bool = False) -> IndexPairSet:
    _check_stat_k(k, experimental)
    pairs: set[tuple[int, int]] = set()
    for j in range(1, k):
        pairs |= descent_set_k_T(T, j, experimental)
    return frozenset(pairs)


def maj_k_T(T: StandardTableau, k: int, experimental: bool = False) -> int:
    return len(inversion_set_k_T(T, k, experimental)) + sum(
        i for i, _ in descent_set_k_T(T, k, experimental)
    )


def splits_T(T: StandardTableau, x: int, a: int, b: int) -> bool:
    """x splits a,b when exactly one of a, b attacks x."""
    return attacks(T, a, x) != attacks(T, b, x)


def gamma_index_set_T(
    T: StandardTableau, j: int, k: int, experimental: bool = False
) -> tuple[int, ...]:
    _check_map_k(k, experimental)
    if not 1 <= j <= T.n:
        raise ValueError(f"j must lie in [1, {T.n}], got {j}")
    indices: list[int] = []
    i = j - k
    if i >= 1 and splits_T(T, j, i, i + 1):
        indices.append(i)
        while i - k >= 1:
            a, b = i - k, i - k + 1
            if splits_T(T, i, a, b) == splits_T(T, i + 1, a, b):
                break
            i -= k
            indices.append(i)
    return tuple(indices)


def gamma_T(T: StandardTableau, j: int, k: int, experimental: bool = False) -> StandardTableau:
    indices = gamma_index_set_T(T, j, k, experimental)
    if not indices:
        return T
    return T.transpose_entries(indices)


def Phi_T(T: StandardTableau, k: int, experimental: bool = False) -> StandardTableau:
    _check_map_k(k, experimental)
    for j in range(k + 1, T.n + 1):
        T = gamma_T(T, j, k, experimental)
    return T


def Psi_T(T: StandardTableau, k: int, experimental: bool = False) -> StandardTableau:
    """Inverse of Phi_T: the same involutions in reverse order."""
    _check_map_k(k, experimental)
    for j in range(T.n, k, -1):
        T = gamma_T(T, j, k, experimental)
    return T


@dataclass(frozen=True)
class RSKPair:
    P: StandardTableau
    Q: StandardTableau


def rsk(w: Word) -> RSKPair:
    """Row insertion of the positions of 1, 2, ..., n, recording values in Q.

    This is RSK of the inverse permutation: the returned (P, Q) is the classical (Q(w), P(w)),
    which is what makes Des(Q) = iDes(w).
    """
    if w.spacer_positions:
        raise ValueError(f"RSK is defined on spacer-free permutations, got {w}")
    require_permutation(w)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    values = w.values()
    positions = sorted(range(1, len(values) + 1), key=lambda p: values[p - 1])
    for value, x in enumerate(positions, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([value])
                break
            row = p_rows[r]
            slot = bisect_right(row, x)
            if slot == len(row):
                row.append(x)
                q_rows[r].append(value)
                break
            row[slot], x = x, row[slot]
            r += 1
    return RSKPair(P=StandardTableau.from_rows(p_rows), Q=StandardTableau.from_rows(q_rows))


def _check_stat_k(k: int, experimental: bool) -> None:
    if k < 1 or k > (4 if experimental else 3):
        raise ValueError(f"Tableau statistics are defined for 1 <= k <= 3, got {k}")


def _check_map_k(k: int, experimental: bool) -> None:
    if k not in ((2, 3, 4) if experimental else (2, 3)):
        raise ValueError(f"Tableau bijections are defined for k in {{2, 3}}, got {k}")
