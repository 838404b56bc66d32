from __future__ import annotations

from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import repeat
import logging
from typing import Iterable, Iterator

from .count_cache import CountCache
from .matching import ALIGNED, CROSSING, NESTING, Matching, classify
from .notation import format_matching, format_pattern_set
from .patterns import (
    Relations,
    UnlabeledMatching,
    avoids_all,
    contains,
    embeddings,
    minimally_contains,
    relation_rows,
)

LOGGER = logging.getLogger(__name__)

BRUTE_FORCE = "brute-force"
UNITS_PER_JOB = 8

Prefix = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CountTable:
    label: str
    counts: tuple[int, ...]
    source: str

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def require(self, n: int) -> int:
        if not 0 <= n < len(self.counts):
            raise ValueError(f"Table {self.label} has no entry for n={n} (covers 0..{self.n_max})")
        return self.counts[n]


@dataclass
class WilfReport:
    equivalent_up_to: int
    first_divergence: int | None
    tables: tuple[CountTable, CountTable]


class _SearchState:
    """Partial matching of [2n] built by pairing the least free vertex.

    Edges are appended in increasing order of left vertex, so edge i carries
    canonical label i + 1 and a newly placed edge can only be the last edge
    of any new occurrence.
    """

    def __init__(self, n: int, shapes: tuple[Relations, ...]) -> None:
        self.size = 2 * n
        self.mate = [-1] * self.size
        self.lefts: list[int] = []
        self.rights: list[int] = []
        self.rows: list[tuple[int, ...]] = []
        self.shapes = shapes

    def first_free(self) -> int:
        start = self.lefts[-1] + 1 if self.lefts else 0
        for v in range(start, self.size):
            if self.mate[v] < 0:
                return v
        return -1

    def free_after(self, v: int) -> list[int]:
        return [w for w in range(v + 1, self.size) if self.mate[w] < 0]

    def push(self, left: int, right: int) -> bool:
        row = tuple(ALIGNED if r < left else CROSSING if r < right else NESTING for r in self.rights)
        self.mate[left] = right
        self.mate[right] = left
        self.lefts.append(left)
        self.rights.append(right)
        self.rows.append(row)
        last = len(self.rows) - 1
        for shape in self.shapes:
            if len(shape) <= last + 1 and next(embeddings(shape, self.rows, last), None) is not None:
                return False
        return True

    def pop(self) -> None:
        left = self.lefts.pop()
        right = self.rights.pop()
        self.rows.pop()
        self.mate[left] = -1
        self.mate[right] = -1

    def matching(self) -> Matching:
        seq = [0] * self.size
        for label, (left, right) in enumerate(zip(self.lefts, self.rights), start=1):
            seq[left] = label
            seq[right] = label
        return Matching(tuple(seq))


def _state_for(n: int, prefix: Prefix, shapes: tuple[Relations, ...]) -> _SearchState:
    state = _SearchState(n, shapes)
    for left, right in prefix:
        state.push(left, right)
    return state


def _count_completions(state: _SearchState) -> int:
    v = state.first_free()
    if v < 0:
        return 1
    total = 0
    for w in state.free_after(v):
        if state.push(v, w):
            total += _count_completions(state)
        state.pop()
    return total


def _walk(state: _SearchState) -> Iterator[Matching]:
    v = state.first_free()
    if v < 0:
        yield state.matching()
        return
    for w in state.free_after(v):
        if state.push(v, w):
            yield from _walk(state)
        state.pop()


def _count_prefix(n: int, prefix: Prefix, shapes: tuple[Relations, ...]) -> int:
    return _count_completions(_state_for(n, prefix, shapes))


def _work_units(n: int, shapes: tuple[Relations, ...], target: int) -> list[Prefix]:
    # First-edge choices, split one edge deeper while there are fewer units than wanted.
    frontier: list[Prefix] = [()]
    depth = 0
    while len(frontier) < target and depth < n - 1:
        deeper: list[Prefix] = []
        for prefix in frontier:
            state = _state_for(n, prefix, shapes)
            v = state.first_free()
            for w in state.free_after(v):
                if state.push(v, w):
                    deeper.append(prefix + ((v, w),))
                state.pop()
        frontier = deeper
        depth += 1
    return frontier


def _shapes(patterns: Iterable[Matching]) -> tuple[Relations, ...]:
    return tuple(relation_rows(p) for p in sorted(patterns, key=lambda p: (p.order, p.seq)))


def _count_order(n: int, shapes: tuple[Relations, ...], executor: Executor | None, jobs: int) -> int:
    if n == 0:
        return 1
    if executor is None:
        return _count_prefix(n, (), shapes)
    units = _work_units(n, shapes, jobs * UNITS_PER_JOB)
    LOGGER.debug("Order %d split into %d work units", n, len(units))
    return sum(executor.map(_count_prefix, repeat(n), units, repeat(shapes)))


def enumerate_matchings(n: int) -> Iterator[Matching]:
    if n < 0:
        raise ValueError(f"Order must be nonnegative, got {n}")
    yield from _walk(_SearchState(n, ()))


def enumerate_avoiders(n: int, patterns: Iterable[Matching]) -> Iterator[Matching]:
    if n < 0:
        raise ValueError(f"Order must be nonnegative, got {n}")
    yield from _walk(_SearchState(n, _shapes(_checked_patterns(patterns))))


def _checked_patterns(patterns: Iterable[Matching]) -> frozenset[Matching]:
    pats = frozenset(patterns)
    if not pats:
        raise ValueError("At least one pattern is required")
    if any(not p for p in pats):
        raise ValueError("Patterns must be nonempty matchings")
    return pats


def avoid_query(patterns: Iterable[Matching]) -> str:
    return f"avoid[{format_pattern_set(frozenset(patterns))}]"


def count_avoiders(
    n_max: int,
    patterns: Iterable[Matching],
    jobs: int = 1,
    prune: bool = True,
    cache: CountCache | None = None,
) -> CountTable:
    pats = _checked_patterns(patterns)
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    query = avoid_query(pats)
    if cache is not None:
        cached = cache.get(query, n_max)
        if cached is not None:
            return CountTable(label=query, counts=tuple(cached), source=BRUTE_FORCE)

    LOGGER.info("Counting %s up to n=%d (jobs=%d, prune=%s)", query, n_max, jobs, prune)
    if not prune:
        counts = [sum(1 for m in enumerate_matchings(n) if avoids_all(m, pats)) for n in range(n_max + 1)]
    else:
        shapes = _shapes(pats)
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                counts = [_count_order(n, shapes, executor, jobs) for n in range(n_max + 1)]
        else:
            counts = [_count_order(n, shapes, None, 1) for n in range(n_max + 1)]

    if cache is not None:
        cache.put(query, counts)
    return CountTable(label=query, counts=tuple(counts), source=BRUTE_FORCE)


def count_avoiders_unlabeled(
    n_max: int,
    u: UnlabeledMatching,
    jobs: int = 1,
    cache: CountCache | None = None,
) -> CountTable:
    table = count_avoiders(n_max, u.members, jobs=jobs, cache=cache)
    return replace(table, label=f"avoid-unlabeled[{format_matching(u.representative)}]")


def count_connected_avoiders(n_max: int, patterns: Iterable[Matching]) -> CountTable:
    pats = _checked_patterns(patterns)
    counts = [
        sum(1 for m in enumerate_avoiders(n, pats) if classify(m).connected) for n in range(n_max + 1)
    ]
    return CountTable(label=f"connected-{avoid_query(pats)}", counts=tuple(counts), source=BRUTE_FORCE)


def _insert_rightmost(m: Matching, position: int) -> Matching:
    # New edge with right vertex 2n + 2 and left vertex just before old position `position`.
    label = m.order + 1
    seq = list(m.seq)
    seq.insert(position, label)
    seq.append(label)
    relabel: dict[int, int] = {}
    out = []
    for value in seq:
        if value not in relabel:
            relabel[value] = len(relabel) + 1
        out.append(relabel[value])
    return Matching(tuple(out))


def count_mu(n_max: int, sigma: Matching, prune: bool = True) -> CountTable:
    """Count matchings minimally containing sigma, order by order.

    Pruned mode builds every candidate from an avoider of order n - 1 plus a
    new rightmost edge (one choice per left-vertex slot), which covers each
    matching of order n exactly once.
    """
    if not sigma:
        raise ValueError("sigma must be a nonempty matching")
    counts = []
    for n in range(n_max + 1):
        if n < sigma.order:
            counts.append(0)
        elif not prune:
            counts.append(sum(1 for m in enumerate_matchings(n) if minimally_contains(m, sigma)))
        else:
            total = 0
            for base in enumerate_avoiders(n - 1, [sigma]):
                for position in range(2 * n - 1):
                    if contains(sigma, _insert_rightmost(base, position)):
                        total += 1
            counts.append(total)
    return CountTable(label=f"mu[{format_matching(sigma)}]", counts=tuple(counts), source=BRUTE_FORCE)


def wilf_check(
    a: Iterable[Matching],
    b: Iterable[Matching],
    n_max: int,
    jobs: int = 1,
    cache: CountCache | None = None,
) -> WilfReport:
    left = count_avoiders(n_max, a, jobs=jobs, cache=cache)
    right = count_avoiders(n_max, b, jobs=jobs, cache=cache)
    first = next((n for n in range(n_max + 1) if left[n] != right[n]), None)
    agreed = n_max if first is None else first - 1
    if first is not None:
        LOGGER.info("Wilf check: %s and %s diverge at n=%d", left.label, right.label, first)
    return WilfReport(equivalent_up_to=agreed, first_divergence=first, tables=(left, right))
