import time
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import factorial
from typing import Any

from . import config, runlog
from .bijections import (
    foata,
    gamma,
    gamma_index_set,
    gamma_prefix_delta,
    phi_k,
    phi_range,
    psi_k,
)
from .distributions import q_hook_oracle, syt_distribution, verify_mahonian, words_on
from .equivalence import (
    check_1class_schur_shape,
    check_moves,
    check_n_class_characterization,
    check_phi2_commutation,
    check_theta_properties,
    k_classes,
)
from .models import CheckReport, Multiset, Word
from .pool import pmap
from .tableaux import (
    Partition,
    Phi_T,
    Psi_T,
    StandardTableau,
    descent_positions_T,
    descent_set_k_T,
    descent_set_T,
    enumerate_syt,
    gamma_T,
    inversion_set_k_T,
    maj_k_T,
    maj_T,
    partitions,
    rsk,
)
from .words import descent_positions, descent_set_k, ides, inv, inversion_set_k, maj, maj_k

FIG_TABLEAU = "1 3 4 7 / 2 5 6 / 8"
FOATA_FIRST_DIVERGENCE = 6
PHI2_CHAIN = ("1 3 5 7 / 2 4 6 / 8", "1 2 5 7 / 3 4 6 / 8", "1 3 4 7 / 2 5 6 / 8")
PHI3_TABLE = (
    "6 9 3 8 1 7 2 4 5",
    "9 6 3 8 1 7 2 4 5",
    "9 6 3 8 1 7 2 4 5",
    "9 6 8 3 1 7 2 4 5",
    "9 6 8 1 3 7 2 4 5",
    "9 8 6 1 7 3 2 4 5",
    "9 8 6 1 7 3 2 4 5",
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }


def _pairs(pairs: frozenset[tuple[int, int]]) -> list[list[int]]:
    return [list(p) for p in sorted(pairs)]


def _expect(report: CheckReport, check: str, got: Any, expected: Any) -> None:
    report.checked += 1
    if got != expected:
        report.fail(check=check, expected=expected, got=got)


def _merge_all(reports: list[CheckReport]) -> CheckReport:
    total = CheckReport()
    for r in reports:
        total.merge(r)
    return total


def _examples(max_size: int, workers: int) -> CheckReport:
    report = CheckReport()
    w = Word.parse("9 8 6 1 7 3 2 4 5")
    _expect(report, "des_3", _pairs(descent_set_k(w, 3)), [[1, 4], [2, 5], [3, 6], [5, 8]])
    _expect(
        report,
        "inv_3",
        _pairs(inversion_set_k(w, 3)),
        [[1, 2], [1, 3], [2, 3], [2, 4], [3, 4], [5, 6], [5, 7], [6, 7]],
    )
    _expect(report, "maj_3", maj_k(w, 3), 19)
    _expect(report, "gamma_index_set", list(gamma_index_set(w, 8, 3)), [5, 2])
    _expect(report, "gamma_8", str(gamma(w, 8, 3)), str(Word.parse("9 6 8 1 3 7 2 4 5")))
    _expect(report, "ides", sorted(ides(w)), [2, 5, 7, 8])

    start = Word.parse(PHI3_TABLE[0])
    steps, current = [], start
    for j in range(4, len(start) + 1):
        current = gamma(current, j, 3)
        steps.append(str(current))
    _expect(report, "phi3_table", steps, [str(Word.parse(s)) for s in PHI3_TABLE[1:]])
    _expect(report, "phi3", str(phi_k(start, 3)), str(w))
    _expect(report, "maj_2_start", maj_k(start, 2), 19)

    T = StandardTableau.parse(FIG_TABLEAU)
    _expect(report, "des_T", _pairs(descent_set_T(T)), [[1, 2], [4, 5], [7, 8]])
    _expect(report, "maj_T", maj_T(T), 12)
    _expect(report, "des_2_T", _pairs(descent_set_k_T(T, 2)), [[3, 5], [4, 6], [6, 8]])
    _expect(report, "inv_2_T", _pairs(inversion_set_k_T(T, 2)), [[1, 2], [4, 5], [7, 8]])
    _expect(report, "maj_2_T", maj_k_T(T, 2), 16)

    left, middle, right = (StandardTableau.parse(s) for s in PHI2_CHAIN)
    _expect(report, "gamma_4_T", str(gamma_T(left, 4, 2)), str(middle))
    _expect(report, "gamma_6_T", str(gamma_T(middle, 6, 2)), str(right))
    _expect(report, "Phi_2_T", str(Phi_T(left, 2)), str(right))
    _expect(report, "maj_1_left", maj_T(left), 16)
    _expect(report, "maj_2_right", maj_k_T(right, 2), 16)
    return report


def _mahonian_case(case: tuple[Multiset, frozenset[int]]) -> dict[str, Any]:
    M, spacers = case
    result = verify_mahonian(M, spacers, M.size + len(spacers))
    return {
        "multiset": str(M),
        "spacers": sorted(spacers),
        "passed": result.passed,
        "failing_k": [k for k, ok in result.per_k.items() if not ok],
        "oracle_match": result.oracle_match,
    }


def _mahonian(max_size: int, workers: int) -> CheckReport:
    """Spacer-free multisets are asserted; spacer masks are tallied in the details."""
    cases: list[tuple[Multiset, frozenset[int]]] = []
    for length in range(1, max_size + 1):
        for n in range(1, length + 1):
            for M in Multiset.compositions(n):
                for mask in combinations(range(1, length + 1), length - n):
                    cases.append((M, frozenset(mask)))
    report = CheckReport()
    spacered = Counter[str]()
    for outcome in pmap(_mahonian_case, cases, workers):
        if outcome["spacers"]:
            spacered["equidistributed" if outcome["passed"] else "differs"] += 1
            continue
        report.checked += 1
        if not outcome["passed"]:
            report.fail(**outcome)
    report.details = {"spacer_masks": dict(spacered)}
    return report


def _syt_case(shape: Partition) -> CheckReport:
    report = CheckReport()
    tableaux = list(enumerate_syt(shape))
    _expect(report, f"count {shape}", len(tableaux), shape.hook_count())
    dists = [syt_distribution(shape, k) for k in (1, 2, 3)]
    report.checked += 1
    if len(set(dists)) != 1:
        report.fail(shape=str(shape), distributions=[d.to_json() for d in dists])
    _expect(report, f"hook oracle {shape}", dists[0].to_json(), q_hook_oracle(shape).to_json())
    largest = shape.size
    for k in (2, 3):
        images = set()
        for T in tableaux:
            report.checked += 1
            image = Phi_T(T, k)
            images.add(image)
            if maj_k_T(T, k - 1) != maj_k_T(image, k):
                report.fail(check="transfer", k=k, tableau=T.to_json(), image=image.to_json())
            if Psi_T(image, k) != T:
                report.fail(check="inverse", k=k, tableau=T.to_json())
            if largest and image.cell_of(largest) != T.cell_of(largest):
                report.fail(check="largest-entry", k=k, tableau=T.to_json())
        if len(images) != len(tableaux):
            report.fail(check="bijective", k=k, shape=list(shape.parts))
    return report


def _mahonian_syt(max_size: int, workers: int) -> CheckReport:
    shapes = [shape for n in range(1, max_size + 1) for shape in partitions(n)]
    report = _merge_all(pmap(_syt_case, shapes, workers))
    report.details = {"shapes": len(shapes)}
    return report


def _phi_case(case: tuple[Multiset, frozenset[int]]) -> CheckReport:
    M, spacers = case
    report = CheckReport()
    words = list(words_on(M, spacers))
    n = len(words[0])
    for k in range(2, max(n, 2) + 1):
        images = set()
        for w in words:
            report.checked += 1
            image = phi_k(w, k)
            images.add(image)
            if psi_k(image, k) != w:
                report.fail(check="inverse", k=k, word=w.to_json())
            if image.spacer_positions != w.spacer_positions:
                report.fail(check="spacers", k=k, word=w.to_json())
            if spacers:
                continue
            if maj_k(w, k - 1) != maj_k(image, k):
                report.fail(check="transfer", k=k, word=w.to_json(), image=image.to_json())
            a, b = w.values(), image.values()
            if b[-1] != a[-1]:
                report.fail(check="last-letter", k=k, word=w.to_json())
            if n - k >= 1 and (a[n - k] > a[-1]) != (b[n - k - 1] > b[-1]):
                report.fail(check="comparison", k=k, word=w.to_json(), image=image.to_json())
            if w.is_permutation() and ides(w) != ides(image):
                report.fail(check="ides", k=k, word=w.to_json(), image=image.to_json())
            if n >= 2:
                head = phi_k(w.prefix(n - 1), k).append(w.at(n))
                if gamma(head, n, k) != image:
                    report.fail(check="recursion", k=k, word=w.to_json())
        if len(images) != len(words):
            report.fail(check="bijective", k=k, multiset=str(M), spacers=sorted(spacers))
    return report


def _phi_props(max_size: int, workers: int) -> CheckReport:
    cases = [(M, frozenset()) for n in range(1, max_size + 1) for M in Multiset.compositions(n)]
    cases += [
        (M, frozenset({p}))
        for n in range(1, max_size)
        for M in Multiset.compositions(n)
        for p in range(1, n + 2)
    ]
    return _merge_all(pmap(_phi_case, cases, workers))


def _phi2_commute(max_size: int, workers: int) -> CheckReport:
    return _merge_all(pmap(check_phi2_commutation, range(3, max_size + 1), workers))


def _nclass(max_size: int, workers: int) -> CheckReport:
    return _merge_all(pmap(check_n_class_characterization, range(2, max_size + 1), workers))


def _schur_shape(max_size: int, workers: int) -> CheckReport:
    return _merge_all(pmap(check_1class_schur_shape, range(1, max_size + 1), workers))


def _phi2_candidate(w: Word) -> Word:
    return phi_k(w, 2)


def _phi3_candidate(w: Word) -> Word:
    return phi_k(w, 3)


def _theta_phi2(n: int) -> CheckReport:
    return check_theta_properties(_phi2_candidate, 2, n)


def _theta_phi3(n: int) -> CheckReport:
    return check_theta_properties(_phi3_candidate, 3, n)


def _theta_check(max_size: int, workers: int) -> CheckReport:
    """phi^(2) meets all three requirements; phi^(3) must break class transport somewhere."""
    report = _merge_all(pmap(_theta_phi2, range(2, max_size + 1), workers))
    sizes = list(range(3, max_size + 1))
    violations = []
    for n, sub in zip(sizes, pmap(_theta_phi3, sizes, workers), strict=True):
        report.checked += sub.checked
        if not sub.details["c"]:
            witness = next(c for c in sub.counterexamples if c["property"] == "c")
            violations.append({"n": n, "members": witness["members"]})
    if not violations:
        report.fail(check="phi3-class-transport", searched=sizes)
    report.details = {"phi3_class_violations": violations[:3]}
    return report


def _k4_breakdown(max_size: int, workers: int) -> CheckReport:
    """The naive k=4 tableau extension loses the maj_3 -> maj_4 transfer on (2,2,2)."""
    shape = Partition((2, 2, 2))
    report = CheckReport()
    witnesses = []
    for T in enumerate_syt(shape):
        report.checked += 1
        if maj_k_T(T, 2) != maj_k_T(Phi_T(T, 3), 3):
            report.fail(check="control", tableau=T.to_json())
        image = Phi_T(T, 4, experimental=True)
        before, after = maj_k_T(T, 3), maj_k_T(image, 4, experimental=True)
        if before != after:
            witnesses.append({"tableau": T.to_json(), "maj_3": before, "maj_4": after})
    if not witnesses:
        report.fail(check="no-witness", shape=list(shape.parts))
    report.details = {
        "witnesses": witnesses,
        "maj_3": syt_distribution(shape, 3).to_json(),
        "maj_4": syt_distribution(shape, 4, experimental=True).to_json(),
    }
    return report


def _foata_case(n: int) -> CheckReport:
    report = CheckReport()
    divergent = 0
    for perm in permutations(range(1, n + 1)):
        w = Word(perm)
        report.checked += 1
        theirs = foata(w)
        if maj(w) != inv(theirs):
            report.fail(check="foata", word=w.to_json())
        if n >= 2:
            ours = phi_range(w, n, 1)
            if maj(w) != inv(ours):
                report.fail(check="phi_range", word=w.to_json())
            if ours != theirs:
                divergent += 1
                report.details.setdefault(
                    "witness",
                    {"word": w.to_json(), "phi": ours.to_json(), "foata": theirs.to_json()},
                )
    for M in Multiset.compositions(n):
        for w in words_on(M):
            report.checked += 1
            if maj(w) != inv(foata(w)):
                report.fail(check="foata-multiset", word=w.to_json())
    report.details["divergent"] = divergent
    return report


def _foata(max_size: int, workers: int) -> CheckReport:
    """maj -> inv for both maps; phi^[n,1] and Foata first disagree at n = 6."""
    sizes = list(range(1, max_size + 1))
    report = CheckReport()
    divergence: dict[str, int] = {}
    witness = None
    for n, sub in zip(sizes, pmap(_foata_case, sizes, workers), strict=True):
        report.merge(sub)
        divergence[str(n)] = sub.details["divergent"]
        if witness is None and "witness" in sub.details:
            witness = sub.details["witness"]
    report.details = {"divergent": divergence, "witness": witness}
    if witness is None:
        report.details["note"] = f"no witness at n <= {max_size}"
        if max_size >= FOATA_FIRST_DIVERGENCE:
            report.fail(check="divergence", searched=sizes)
    return report


def _classes(max_size: int, workers: int) -> CheckReport:
    report = CheckReport()
    for k, expected in (
        (1, [["1 2 3"], ["1 3 2", "2 3 1"], ["2 1 3", "3 1 2"], ["3 2 1"]]),
        (2, [["1 2 3"], ["1 3 2", "2 1 3"], ["2 3 1", "3 1 2"], ["3 2 1"]]),
    ):
        got = [[" ".join(map(str, m.values())) for m in c.members] for c in k_classes(3, k)]
        _expect(report, f"S_3 {k}-classes", got, expected)
    jobs = [(n, k, None) for n in range(1, max_size + 1) for k in range(1, n + 1)]
    jobs += [
        (n, k, frozenset({p}))
        for n in range(3, max_size)
        for k in range(1, n + 2)
        for p in range(1, n + 2)
    ]
    report.merge(_merge_all(pmap(_moves_case, jobs, workers)))
    return report


def _moves_case(job: tuple[int, int, frozenset[int] | None]) -> CheckReport:
    n, k, mask = job
    return check_moves(n, k, mask)


def _descent_case(n: int) -> CheckReport:
    report = CheckReport()
    words: Counter[tuple[int, ...]] = Counter()
    inverse: Counter[tuple[int, ...]] = Counter()
    pairs = set()
    for perm in permutations(range(1, n + 1)):
        w = Word(perm)
        words[tuple(sorted(descent_positions(w)))] += 1
        inverse[tuple(sorted(ides(w)))] += 1
        pair = rsk(w)
        pairs.add(pair)
        report.checked += 1
        if pair.P.shape != pair.Q.shape:
            report.fail(check="shape", word=w.to_json())
        if descent_positions_T(pair.Q) != ides(w):
            report.fail(check="recording", word=w.to_json(), Q=pair.Q.to_json())
    tableaux: Counter[tuple[int, ...]] = Counter()
    for shape in partitions(n):
        weight = shape.hook_count()
        for T in enumerate_syt(shape):
            tableaux[tuple(sorted(descent_positions_T(T)))] += weight
    _expect(report, f"rsk bijective n={n}", len(pairs), factorial(n))
    _expect(report, f"Des(w) vs tableaux n={n}", sorted(words.items()), sorted(tableaux.items()))
    _expect(report, f"iDes(w) vs Des(w) n={n}", sorted(inverse.items()), sorted(words.items()))
    return report


def _descent_identity(max_size: int, workers: int) -> CheckReport:
    return _merge_all(pmap(_descent_case, range(1, max_size + 1), workers))


def _lemma_case(M: Multiset) -> CheckReport:
    report = CheckReport()
    for w in words_on(M):
        n = len(w)
        for k in range(2, n + 1):
            for j in range(k + 1, n + 1):
                report.checked += 1
                before = maj_k(w.prefix(j - 1), k)
                after = maj_k(gamma(w, j, k).prefix(j - 1), k)
                if after - before != gamma_prefix_delta(w, j, k):
                    report.fail(word=w.to_json(), j=j, k=k, delta=after - before)
    return report


def _local_lemma(max_size: int, workers: int) -> CheckReport:
    multisets = [M for n in range(1, max_size + 1) for M in Multiset.compositions(n)]
    return _merge_all(pmap(_lemma_case, multisets, workers))


_SUITES: list[tuple[str, Callable[[int, int], CheckReport], int]] = [
    ("examples", _examples, 9),
    ("mahonian", _mahonian, 7),
    ("mahonian-syt", _mahonian_syt, 8),
    ("phi-props", _phi_props, 7),
    ("phi2-commute", _phi2_commute, 7),
    ("nclass", _nclass, 7),
    ("schur-shape", _schur_shape, 6),
    ("theta-check", _theta_check, 7),
    ("k4-breakdown", _k4_breakdown, 6),
    ("foata", _foata, 6),
    ("classes", _classes, 7),
    ("descent-identity", _descent_identity, 7),
    ("local-lemma", _local_lemma, 6),
]


def names() -> list[str]:
    return [name for name, _, _ in _SUITES]


def run_suite(name: str, max_size: int | None = None, workers: int | None = None) -> SuiteResult:
    entry = next((s for s in _SUITES if s[0] == name), None)
    if entry is None:
        raise ValueError(f"Unknown suite {name!r}. Available: {', '.join(names())}")
    _, check_fn, default_size = entry
    size = max_size if max_size is not None else config.get_suite_max_size(name, default_size)
    if size < 1:
        raise ValueError(f"--max-size must be positive, got {size}")
    pool_size = workers if workers is not None else config.get_threads()

    started = time.monotonic()
    report = check_fn(size, pool_size)
    elapsed = time.monotonic() - started
    runlog.log_run(name, report.passed, report.checked, elapsed)

    return SuiteResult(
        name=name,
        passed=report.passed,
        checked=report.checked,
        counterexamples=report.counterexamples,
        details={"max_size": size, **report.details},
    )
