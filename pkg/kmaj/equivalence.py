"""Dual equivalence moves d_i / d~_i, the level-k moves D^(k)_i and k-equivalence classes.

A move on i acts only when i does not sit between i-1 and i+1; otherwise it is the identity.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Callable, Hashable, Iterable
from dataclasses import dataclass
from itertools import permutations
from typing import Any

from .bijections import phi_k, phi_range
from .models import CheckReport, IndexPairSet, Word
from .tableaux import descent_positions_T, enumerate_syt, partitions
from .words import descent_set_k, ides, inv, inversion_set_k, maj_k, require_permutation

type WordMap = Callable[[Word], Word]


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}
        self.rank = dict.fromkeys(self.parent, 0)

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


def _triple_positions(w: Word, i: int) -> tuple[int, int, int]:
    require_permutation(w)
    m = len(w.values())
    if not 2 <= i <= m - 1:
        raise ValueError(f"i must lie in [2, {m - 1}] for {w}, got {i}")
    return w.position_of(i - 1), w.position_of(i), w.position_of(i + 1)


def is_between(w: Word, i: int) -> bool:
    """i sits positionally between i-1 and i+1."""
    lo, mid, hi = _triple_positions(w, i)
    return min(lo, hi) < mid < max(lo, hi)


def d_involution(w: Word, i: int, twiddle: bool = False) -> Word:
    below, at, above = _triple_positions(w, i)
    left, right = min(below, above), max(below, above)
    if left < at < right:
        return w
    first, last = min(below, at, above), max(below, at, above)
    letters = list(w.letters)
    if not twiddle:
        letters[first - 1], letters[last - 1] = letters[last - 1], letters[first - 1]
        return Word(tuple(letters))
    slots = sorted((below, at, above))
    triple = [letters[p - 1] for p in slots]
    rotated = [*triple[1:], triple[0]] if at == first else [triple[2], *triple[:2]]
    for p, x in zip(slots, rotated, strict=True):
        letters[p - 1] = x
    return Word(tuple(letters))


def dist3(w: Word, i: int) -> int:
    positions = _triple_positions(w, i)
    return max(positions) - min(positions)


def D_k(w: Word, i: int, k: int) -> Word:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return d_involution(w, i, twiddle=dist3(w, i) <= k)


def permutations_of(n: int, spacer_mask: frozenset[int] | None = None) -> list[Word]:
    """S_n in lexicographic order, letters placed around the fixed spacer positions."""
    mask = spacer_mask or frozenset()
    return [Word.with_spacers(p, mask) for p in permutations(range(1, n + 1))]


@dataclass(frozen=True)
class EquivClass:
    members: tuple[Word, ...]
    k: int
    shared_des_k: IndexPairSet
    shared_inv_count: int

    def to_json(self) -> dict[str, Any]:
        return {
            "members": [w.to_json() for w in self.members],
            "des_k": [list(p) for p in sorted(self.shared_des_k)],
            "inv_k": self.shared_inv_count,
        }


def _sort_key(w: Word) -> tuple[int, ...]:
    return tuple(x if isinstance(x, int) else 0 for x in w.letters)


def k_classes(n: int, k: int, spacer_mask: frozenset[int] | None = None) -> list[EquivClass]:
    """Orbits of S_n under every D^(k)_i, ordered by their lexicographically least member."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    words = permutations_of(n, spacer_mask)
    uf = UnionFind(words)
    for w in words:
        for i in range(2, n):
            uf.union(w, D_k(w, i, k))
    orbits: dict[Hashable, list[Word]] = defaultdict(list)
    for w in words:
        orbits[uf.find(w)].append(w)
    classes = []
    for members in sorted(orbits.values(), key=lambda ms: _sort_key(min(ms, key=_sort_key))):
        members.sort(key=_sort_key)
        head = members[0]
        classes.append(
            EquivClass(
                members=tuple(members),
                k=k,
                shared_des_k=descent_set_k(head, k),
                shared_inv_count=len(inversion_set_k(head, k)),
            )
        )
    return classes


def class_of(classes: list[EquivClass]) -> dict[Word, int]:
    return {w: index for index, c in enumerate(classes) for w in c.members}


def classes_to_json(k: int, classes: list[EquivClass]) -> dict[str, Any]:
    return {"k": k, "classes": [c.to_json() for c in classes]}


def check_moves(n: int, k: int, spacer_mask: frozenset[int] | None = None) -> CheckReport:
    """D^(k)_i is an involution and keeps Des_k and |Inv_k| fixed."""
    report = CheckReport()
    for w in permutations_of(n, spacer_mask):
        des, inv_count = descent_set_k(w, k), len(inversion_set_k(w, k))
        for i in range(2, n):
            report.checked += 1
            u = D_k(w, i, k)
            if D_k(u, i, k) != w:
                report.fail(check="involution", word=w.to_json(), i=i, k=k)
            if descent_set_k(u, k) != des or len(inversion_set_k(u, k)) != inv_count:
                report.fail(check="constancy", word=w.to_json(), image=u.to_json(), i=i, k=k)
    return report


def check_phi2_commutation(n: int) -> CheckReport:
    """phi^(2)(D^(1)_i w) = D^(2)_i(phi^(2) w) wherever i is not between i-1 and i+1."""
    if n < 3:
        raise ValueError(f"Commutation needs n >= 3, got {n}")
    report = CheckReport()
    for w in permutations_of(n):
        image = phi_k(w, 2)
        for i in range(2, n):
            if is_between(w, i):
                continue
            report.checked += 1
            left, right = phi_k(D_k(w, i, 1), 2), D_k(image, i, 2)
            if left != right:
                report.fail(word=w.to_json(), i=i, expected=right.to_json(), got=left.to_json())
    return report


def check_n_class_characterization(n: int) -> CheckReport:
    """n-classes are exactly the level sets of (inv, w_1 > w_n), and phi^[n,1] carries 1-moves into n-classes."""
    if n < 2:
        raise ValueError(f"n-class characterization needs n >= 2, got {n}")
    report = CheckReport()
    classes = k_classes(n, n)
    keys: dict[tuple[int, bool], int] = {}
    for index, c in enumerate(classes):
        report.checked += 1
        seen = {(inv(w), w.values()[0] > w.values()[-1]) for w in c.members}
        if len(seen) != 1:
            report.fail(check="constant", members=[w.to_json() for w in c.members])
            continue
        key = seen.pop()
        if key in keys:
            other = classes[keys[key]]
            report.fail(
                check="separating",
                inv=key[0],
                first_exceeds_last=key[1],
                classes=[other.members[0].to_json(), c.members[0].to_json()],
            )
        keys[key] = index

    lookup = class_of(classes)
    for w in permutations_of(n):
        image = phi_range(w, n, 1)
        for i in range(2, n):
            if is_between(w, i):
                continue
            report.checked += 1
            moved = phi_range(d_involution(w, i), n, 1)
            if lookup[image] != lookup[moved]:
                report.fail(check="transport", word=w.to_json(), i=i)
    report.details = {"classes": len(classes)}
    return report


def check_theta_properties(candidate: WordMap, k: int, n: int) -> CheckReport:
    """The three requirements on a level-k bijection: structure (a), maj transfer (b), class transport (c)."""
    if k < 2 or n < 1:
        raise ValueError(f"Need k >= 2 and n >= 1, got k={k}, n={n}")
    words = permutations_of(n)
    images = {}
    for w in words:
        try:
            image = candidate(w)
        except ValueError as exc:
            raise ValueError(f"Candidate is not total on S_{n}: fails on {w}: {exc}") from None
        if sorted(image.values()) != list(range(1, n + 1)) or len(image) != n:
            raise ValueError(f"Candidate maps {w} outside S_{n}: {image}")
        images[w] = image

    report = CheckReport()
    holds = {"a": True, "b": True, "c": True}

    def violate(prop: str, **example: Any) -> None:
        holds[prop] = False
        report.fail(property=prop, **example)

    if len(set(images.values())) != len(words):
        violate("a", check="bijective")
    for w, image in images.items():
        report.checked += 1
        a, b = w.values(), image.values()
        if b[-1] != a[-1]:
            violate("a", check="last-letter", word=w.to_json(), image=image.to_json())
        if n - k >= 1 and (a[n - k] > a[-1]) != (b[n - k - 1] > b[-1]):
            violate("a", check="comparison", word=w.to_json(), image=image.to_json())
        if ides(w) != ides(image):
            violate("a", check="ides", word=w.to_json(), image=image.to_json())
        if maj_k(w, k - 1) != maj_k(image, k):
            violate("b", word=w.to_json(), image=image.to_json())

    target = class_of(k_classes(n, k))
    for c in k_classes(n, k - 1):
        report.checked += 1
        landing = {target[images[w]] for w in c.members}
        if len(landing) > 1:
            violate("c", members=[w.to_json() for w in c.members])

    report.details = holds
    return report


def _descent_multiset(sets: Iterable[frozenset[int]]) -> Counter[tuple[int, ...]]:
    return Counter(tuple(sorted(s)) for s in sets)


def check_1class_schur_shape(n: int) -> CheckReport:
    """Each 1-class has the iDes multiset of SYT(lambda) for some lambda of n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    shapes = [
        (shape, _descent_multiset(descent_positions_T(T) for T in enumerate_syt(shape)))
        for shape in partitions(n)
    ]
    report = CheckReport()
    matched: Counter[str] = Counter()
    for c in k_classes(n, 1):
        report.checked += 1
        ides_multiset = _descent_multiset(ides(w) for w in c.members)
        shape = next((s for s, m in shapes if m == ides_multiset), None)
        if shape is None:
            report.fail(members=[w.to_json() for w in c.members])
            continue
        matched[str(shape)] += 1
    report.details = {"shapes": dict(matched)}
    return report
