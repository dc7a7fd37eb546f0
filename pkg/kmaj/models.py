from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Any


class Spacer(Enum):
    EMPTY = "_"

    def __str__(self) -> str:
        return self.value


SPACER = Spacer.EMPTY

type Letter = int | Spacer
type IndexPairSet = frozenset[tuple[int, int]]

_TOKEN_SPLIT = re.compile(r"[,\s]+")


def is_spacer(x: Letter) -> bool:
    return x is SPACER


def parse_positions(text: str) -> frozenset[int]:
    """Parse a comma/space separated list of 1-based positions."""
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    try:
        positions = frozenset(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"Malformed position list: {text!r}") from None
    if any(p < 1 for p in positions):
        raise ValueError(f"Positions are 1-based: {text!r}")
    return positions


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        for x in self.letters:
            if not is_spacer(x) and (not isinstance(x, int) or x < 1):
                raise ValueError(f"Letters must be positive integers or spacers, got {x!r}")

    @classmethod
    def of(cls, *letters: Letter) -> Word:
        return cls(tuple(letters))

    @classmethod
    def parse(cls, text: str) -> Word:
        """`9 8 _ 6 1` or `9,8,_,6,1`; every token is one letter, so `12` is the single letter 12."""
        tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
        letters: list[Letter] = []
        for token in tokens:
            if token == "_":
                letters.append(SPACER)
                continue
            if not token.isdigit() or int(token) < 1:
                raise ValueError(f"Malformed word token {token!r} in {text!r}")
            letters.append(int(token))
        return cls(tuple(letters))

    @classmethod
    def with_spacers(cls, values: tuple[int, ...] | list[int], spacers: frozenset[int]) -> Word:
        """Place `values` left to right into the slots not listed in `spacers`."""
        n = len(values) + len(spacers)
        if spacers and max(spacers) > n:
            raise ValueError(f"Spacer position {max(spacers)} exceeds word length {n}")
        it = iter(values)
        return cls(tuple(SPACER if p in spacers else next(it) for p in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def at(self, i: int) -> Letter:
        return self.letters[i - 1]

    def swap(self, i: int) -> Word:
        letters = list(self.letters)
        letters[i - 1], letters[i] = letters[i], letters[i - 1]
        return Word(tuple(letters))

    def swap_many(self, indices: frozenset[int] | set[int] | tuple[int, ...]) -> Word:
        letters = list(self.letters)
        for i in indices:
            letters[i - 1], letters[i] = letters[i], letters[i - 1]
        return Word(tuple(letters))

    def append(self, x: Letter) -> Word:
        return Word((*self.letters, x))

    def prefix(self, length: int) -> Word:
        return Word(self.letters[:length])

    @property
    def spacer_positions(self) -> frozenset[int]:
        return frozenset(p for p, x in enumerate(self.letters, start=1) if is_spacer(x))

    def values(self) -> tuple[int, ...]:
        return tuple(x for x in self.letters if isinstance(x, int))

    def is_permutation(self) -> bool:
        vals = self.values()
        return sorted(vals) == list(range(1, len(vals) + 1))

    def position_of(self, value: int) -> int:
        try:
            return self.letters.index(value) + 1
        except ValueError:
            raise ValueError(f"{value} does not occur in {self}") from None

    def to_json(self) -> list[int | None]:
        return [x if isinstance(x, int) else None for x in self.letters]

    @classmethod
    def from_json(cls, data: list[int | None]) -> Word:
        return cls(tuple(SPACER if x is None else x for x in data))


@dataclass(frozen=True)
class Multiset:
    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for value, mult in self.counts:
            if value < 1 or mult < 1:
                raise ValueError(f"Multiset entries must be positive, got {value}:{mult}")
        values = [v for v, _ in self.counts]
        if values != sorted(set(values)):
            raise ValueError("Multiset values must be distinct and sorted")

    @classmethod
    def of(cls, letters: list[int] | tuple[int, ...]) -> Multiset:
        return cls(tuple(sorted(Counter(letters).items())))

    @classmethod
    def from_word(cls, w: Word) -> Multiset:
        return cls.of(w.values())

    @classmethod
    def parse(cls, text: str) -> Multiset:
        """`1:2,2:1` is {1,1,2}; a bare letter list `1 1 2` is accepted too."""
        raw = text.strip()
        if not raw:
            return cls(())
        if ":" not in raw:
            return cls.of(Word.parse(raw).values())
        counts: Counter[int] = Counter()
        for chunk in filter(None, _TOKEN_SPLIT.split(raw)):
            value, _, mult = chunk.partition(":")
            if not value.isdigit() or not mult.isdigit():
                raise ValueError(f"Malformed multiset entry {chunk!r}")
            counts[int(value)] += int(mult)
        return cls(tuple(sorted((v, m) for v, m in counts.items() if m > 0)))

    @classmethod
    def compositions(cls, n: int) -> list[Multiset]:
        """Every multiplicity vector of total n on the values 1..m, m ≥ 1."""
        if n == 0:
            return [cls(())]
        result = []
        for cuts in product((False, True), repeat=n - 1):
            mults, run = [], 1
            for cut in cuts:
                if cut:
                    mults.append(run)
                    run = 1
                else:
                    run += 1
            mults.append(run)
            result.append(cls(tuple((v, m) for v, m in enumerate(mults, start=1))))
        return result

    @property
    def size(self) -> int:
        return sum(m for _, m in self.counts)

    def letters(self) -> tuple[int, ...]:
        return tuple(v for v, m in self.counts for _ in range(m))

    def __str__(self) -> str:
        return ",".join(f"{v}:{m}" for v, m in self.counts)

    def to_json(self) -> dict[str, int]:
        return {str(v): m for v, m in self.counts}


MAX_COUNTEREXAMPLES = 10


@dataclass
class CheckReport:
    passed: bool = True
    checked: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def fail(self, **example: Any) -> None:
        self.passed = False
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(example)

    def merge(self, other: CheckReport) -> None:
        self.checked += other.checked
        for example in other.counterexamples:
            self.fail(**example)
        if not other.passed:
            self.passed = False

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }
