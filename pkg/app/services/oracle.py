"""
Exhaustive oracle over labeled digraphs without isolated vertices

A digraph on n vertices is a bitmask over the n(n-1) ordered-pair slots
(row-major, diagonal skipped). The bitmask range is cut into contiguous
blocks; each block is decoded into a numpy bit matrix, degrees come from
products with the tail/head incidence matrices, and phi contributions are
accumulated slot by slot in a fixed order. A digraph's value therefore does
not depend on the block partition or on the number of workers.
"""
from itertools import permutations
from math import comb
from multiprocessing import Pool
from typing import Dict, Iterator, List, NamedTuple, Optional, Set, Tuple
import time

import numpy as np
import structlog

from app.core.config import (
    ACCUMULATION_TOLERANCE,
    DEFAULT_ENUMERATION_CAP,
    MAX_ENUMERATION_N,
    TIE_TOLERANCE,
    settings,
)
from app.core.exceptions import DomainError, NotApplicableError
from app.models import (
    BoundDirection,
    BoundStatement,
    Condition,
    Digraph,
    EqualityClass,
    ExtremalReport,
    PhiSpec,
    SearchDirection,
    VerificationOutcome,
    slot_index,
    slot_pairs,
)
from app.services.families import star_orientations
from app.services.theorems import check_hypothesis

logger = structlog.get_logger()

COUNTEREXAMPLE_LIMIT = 64


def expected_nonisolated_count(n: int) -> int:
    """Inclusion-exclusion count of isolated-free labeled digraphs on n vertices"""
    return sum((-1) ** k * comb(n, k) * 2 ** ((n - k) * (n - k - 1)) for k in range(n + 1))


def check_enumeration_n(n: int, allow_large: bool = False) -> None:
    if not 2 <= n <= MAX_ENUMERATION_N:
        raise DomainError(f"exhaustive enumeration needs 2 <= n <= {MAX_ENUMERATION_N}, got n={n}")
    if n > DEFAULT_ENUMERATION_CAP and not allow_large:
        raise DomainError(
            f"n={n} enumerates 2^{n * (n - 1)} candidates; pass allow_large (--allow-n6) to run it",
            details={"n": n},
        )


class _Incidence:
    """Slot endpoints and one-hot incidence matrices for a fixed n"""

    def __init__(self, n: int):
        pairs = slot_pairs(n)
        self.n = n
        self.slots = len(pairs)
        self.tails = np.array([u for u, _ in pairs], dtype=np.int64)
        self.heads = np.array([v for _, v in pairs], dtype=np.int64)
        self.tail_matrix = np.zeros((self.slots, n), dtype=np.int32)
        self.head_matrix = np.zeros((self.slots, n), dtype=np.int32)
        self.tail_matrix[np.arange(self.slots), self.tails] = 1
        self.head_matrix[np.arange(self.slots), self.heads] = 1
        self.shifts = np.arange(self.slots, dtype=np.int64)


def _decode_block(inc: _Incidence, start: int, stop: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Masks, bits, out- and in-degrees of the isolated-free digraphs in [start, stop)"""
    masks = np.arange(start, stop, dtype=np.int64)
    bits = ((masks[:, None] >> inc.shifts) & 1).astype(np.int32)
    outs = bits @ inc.tail_matrix
    ins = bits @ inc.head_matrix
    keep = ((outs + ins) > 0).all(axis=1)
    return masks[keep], bits[keep], outs[keep], ins[keep]


def phi_table(n: int, spec: PhiSpec) -> np.ndarray:
    """table[i, j] = phi(i, j) for 1 <= i, j <= n-1; row and column 0 stay 0"""
    table = np.zeros((n, n), dtype=np.float64)
    for i in range(1, n):
        for j in range(1, n):
            table[i, j] = spec.evaluate(i, j)
    return table


def _block_values(inc: _Incidence, bits: np.ndarray, outs: np.ndarray, ins: np.ndarray, table: np.ndarray) -> np.ndarray:
    total = np.zeros(len(bits), dtype=np.float64)
    for s in range(inc.slots):
        total += bits[:, s] * table[outs[:, inc.tails[s]], ins[:, inc.heads[s]]]
    return 0.5 * total


def _condition_flags(inc: _Incidence, condition: Condition, bits: np.ndarray, outs: np.ndarray, ins: np.ndarray) -> np.ndarray:
    n = inc.n
    n0 = (outs == 0).sum(axis=1) + (ins == 0).sum(axis=1)
    bad = np.zeros(len(bits), dtype=bool)
    for s in range(inc.slots):
        i = outs[:, inc.tails[s]]
        j = ins[:, inc.heads[s]]
        if condition == Condition.COND5:
            ok = ((i == 1) & (j == n - 1)) | ((i == n - 1) & (j == 1))
        else:
            ok = i == j
        bad |= (bits[:, s] == 1) & ~ok
    wanted_n0 = n if condition == Condition.COND6 else 0
    return ~bad & (n0 == wanted_n0)


class ScanTask(NamedTuple):
    n: int
    start: int
    stop: int
    table: Optional[np.ndarray]
    direction: SearchDirection
    tie_tolerance: float
    target: Optional[float] = None
    condition: Optional[Condition] = None


class BlockResult(NamedTuple):
    count: int
    extremum: Optional[float]
    near: List[Tuple[int, float]]
    at_target: List[int]
    violating: List[int]
    in_class: List[int]


def _scan_block(task: ScanTask) -> BlockResult:
    inc = _Incidence(task.n)
    masks, bits, outs, ins = _decode_block(inc, task.start, task.stop)
    if len(masks) == 0 or task.table is None:
        return BlockResult(len(masks), None, [], [], [], [])

    values = _block_values(inc, bits, outs, ins, task.table)
    if task.direction == SearchDirection.MIN:
        extremum = float(values.min())
    else:
        extremum = float(values.max())
    near = np.abs(values - extremum) <= task.tie_tolerance
    near_pairs = [(int(m), float(v)) for m, v in zip(masks[near], values[near])]

    at_target: List[int] = []
    violating: List[int] = []
    if task.target is not None:
        at_target = [int(m) for m in masks[np.abs(values - task.target) <= task.tie_tolerance]]
        if task.direction == SearchDirection.MIN:
            beyond = values < task.target - ACCUMULATION_TOLERANCE
        else:
            beyond = values > task.target + ACCUMULATION_TOLERANCE
        violating = [int(m) for m in masks[beyond][:COUNTEREXAMPLE_LIMIT]]

    in_class: List[int] = []
    if task.condition is not None:
        in_class = [int(m) for m in masks[_condition_flags(inc, task.condition, bits, outs, ins)]]

    return BlockResult(len(masks), extremum, near_pairs, at_target, violating, in_class)


def _block_bounds(n: int) -> List[Tuple[int, int]]:
    total = 1 << (n * (n - 1))
    size = settings.BLOCK_SIZE
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _run(tasks: List[ScanTask], workers: int) -> List[BlockResult]:
    """Scan blocks in order; results come back in task order for any worker count"""
    if workers <= 1 or len(tasks) <= 1:
        return [_scan_block(task) for task in tasks]
    with Pool(processes=min(workers, len(tasks))) as pool:
        return pool.map(_scan_block, tasks)


def _best(results: List[BlockResult], direction: SearchDirection) -> float:
    extrema = [r.extremum for r in results if r.extremum is not None]
    return min(extrema) if direction == SearchDirection.MIN else max(extrema)


class NonIsolatedEnumeration:
    """All isolated-free labeled digraphs on n vertices in ascending bitmask order"""

    def __init__(self, n: int, allow_large: bool = False):
        check_enumeration_n(n, allow_large)
        self.n = n
        self._blocks = _block_bounds(n)
        self._count: Optional[int] = None

    @property
    def count(self) -> int:
        if self._count is None:
            inc = _Incidence(self.n)
            self._count = sum(len(_decode_block(inc, start, stop)[0]) for start, stop in self._blocks)
        return self._count

    def masks(self) -> Iterator[int]:
        inc = _Incidence(self.n)
        for start, stop in self._blocks:
            for mask in _decode_block(inc, start, stop)[0]:
                yield int(mask)

    def __iter__(self) -> Iterator[Digraph]:
        for mask in self.masks():
            yield Digraph.from_mask(self.n, mask)


def enumerate_nonisolated(n: int, allow_large: bool = False) -> NonIsolatedEnumeration:
    return NonIsolatedEnumeration(n, allow_large)


def count_nonisolated(n: int, workers: int = 1, allow_large: bool = False) -> int:
    check_enumeration_n(n, allow_large)
    tasks = [
        ScanTask(n, start, stop, None, SearchDirection.MIN, TIE_TOLERANCE)
        for start, stop in _block_bounds(n)
    ]
    return sum(r.count for r in _run(tasks, workers))


def canonical_mask(n: int, mask: int) -> int:
    """Smallest bitmask over all relabelings of the vertices"""
    if n > MAX_ENUMERATION_N:
        raise DomainError(f"canonical form is computed for n <= {MAX_ENUMERATION_N}")
    arcs = [pair for s, pair in enumerate(slot_pairs(n)) if mask >> s & 1]
    best = mask
    for perm in permutations(range(n)):
        relabeled = 0
        for u, v in arcs:
            relabeled |= 1 << slot_index(n, perm[u], perm[v])
        if relabeled < best:
            best = relabeled
    return best


def extremal_search(
    n: int,
    spec: PhiSpec,
    direction: SearchDirection,
    tie_tolerance: float = TIE_TOLERANCE,
    workers: int = 1,
    allow_large: bool = False,
    dedup: bool = False
) -> ExtremalReport:
    """Exact minimum or maximum of the index with its full attaining set"""
    check_enumeration_n(n, allow_large)
    started = time.perf_counter()
    table = phi_table(n, spec)
    tasks = [
        ScanTask(n, start, stop, table, direction, tie_tolerance)
        for start, stop in _block_bounds(n)
    ]
    results = _run(tasks, workers)
    best = _best(results, direction)
    attaining = sorted(m for r in results for m, v in r.near if abs(v - best) <= tie_tolerance)
    count = sum(r.count for r in results)

    canonical = None
    if dedup:
        canonical = sorted({canonical_mask(n, m) for m in attaining})

    logger.info(
        "Extremal search completed",
        n=n,
        index=spec.name,
        direction=direction.value,
        blocks=len(tasks),
        workers=workers,
        enumerated=count,
        attaining=len(attaining),
        elapsed=round(time.perf_counter() - started, 3),
    )
    return ExtremalReport(
        n=n,
        spec=spec,
        direction=direction,
        extremal_value=best,
        attaining=attaining,
        enumerated_count=count,
        tie_tolerance=tie_tolerance,
        canonical_attaining=canonical,
    )


_CONDITION_CLASSES: Dict[EqualityClass, Condition] = {
    EqualityClass.COND5: Condition.COND5,
    EqualityClass.COND6: Condition.COND6,
    EqualityClass.COND7: Condition.COND7,
}


def literal_class_masks(n: int, equality_class: EqualityClass) -> Set[int]:
    """Members of the literally listed equality classes"""
    if equality_class == EqualityClass.STAR_ORIENTATIONS:
        return {d.mask for d in star_orientations(n)}
    if equality_class == EqualityClass.SINGLE_ARC:
        return {1 << slot_index(2, 0, 1), 1 << slot_index(2, 1, 0)} if n == 2 else set()
    if equality_class == EqualityClass.SYM_COMPLETE:
        return {(1 << (n * (n - 1))) - 1}
    if equality_class == EqualityClass.NONE_STATED:
        return set()
    raise DomainError(f"{equality_class.value} is matched through the condition classifier")


def verify_bound(
    n: int,
    statement: BoundStatement,
    workers: int = 1,
    allow_large: bool = False,
    dedup: bool = False
) -> VerificationOutcome:
    """Check a bound statement against the exact extremum and attaining set

    With dedup, a tight outcome also carries the attainers reduced to one
    canonical mask per isomorphism class.
    """
    if statement.n != n:
        raise NotApplicableError(statement.id, n, f"statement was issued for n={statement.n}")
    check_enumeration_n(n, allow_large)
    spec = statement.spec
    hypothesis = check_hypothesis(statement.hypothesis, n, spec)
    condition = _CONDITION_CLASSES.get(statement.equality_class)

    table = phi_table(n, spec)
    direction = statement.search_direction
    tasks = [
        ScanTask(n, start, stop, table, direction, TIE_TOLERANCE, statement.bound_value, condition)
        for start, stop in _block_bounds(n)
    ]
    results = _run(tasks, workers)
    observed = _best(results, direction)
    at_target = {m for r in results for m in r.at_target}
    if condition is not None:
        expected = {m for r in results for m in r.in_class}
    else:
        expected = literal_class_masks(n, statement.equality_class)

    bound = statement.bound_value
    if statement.direction == BoundDirection.LOWER:
        respected = observed >= bound - ACCUMULATION_TOLERANCE
    else:
        respected = observed <= bound + ACCUMULATION_TOLERANCE
    tight = abs(observed - bound) < ACCUMULATION_TOLERANCE
    matches = at_target == expected

    counterexamples = sorted(m for r in results for m in r.violating)
    if statement.tight_claimed and not matches:
        counterexamples.extend(sorted(at_target ^ expected))
    counterexamples = counterexamples[:COUNTEREXAMPLE_LIMIT]

    canonical = None
    if dedup and tight:
        canonical = sorted({canonical_mask(n, m) for m in at_target})

    outcome = VerificationOutcome(
        statement=statement,
        hypothesis_holds=hypothesis.holds,
        observed_extremal=observed,
        bound_respected=respected,
        tight=tight,
        equality_set_matches=matches,
        attaining_count=len(at_target),
        expected_count=len(expected),
        counterexamples=counterexamples,
        canonical_attaining=canonical,
    )
    log = logger.info if outcome.consistent else logger.warning
    log(
        "Bound verified",
        statement=statement.id,
        n=n,
        index=spec.name,
        observed=observed,
        bound=bound,
        tight=tight,
        consistent=outcome.consistent,
    )
    return outcome
