from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

# Relation of two edges a, b with min(a) < min(b).
ALIGNED = 0  # 1122
CROSSING = 1  # 1212
NESTING = 2  # 1221


@dataclass(frozen=True, order=True)
class Edge:
    left: int
    right: int

    def __post_init__(self) -> None:
        if self.left >= self.right:
            raise ValueError(f"Edge needs left < right, got {self.left}, {self.right}")

    def is_small(self) -> bool:
        return self.right == self.left + 1


@dataclass(frozen=True, order=True)
class Matching:
    """Perfect matching of [2n] stored as its canonical integer sequence.

    Edge i occupies the two positions holding value i, and first occurrences
    appear in increasing order. Vertex positions are 1-based.
    """

    seq: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        seen: dict[int, int] = {}
        expected = 1
        for value in self.seq:
            if value not in seen:
                if value != expected:
                    raise ValueError(f"Sequence is not canonical: {self.seq}")
                seen[value] = 1
                expected += 1
            else:
                seen[value] += 1
                if seen[value] > 2:
                    raise ValueError(f"Value {value} occurs more than twice")
        if any(count != 2 for count in seen.values()):
            raise ValueError(f"Every value must occur exactly twice: {self.seq}")

    @property
    def order(self) -> int:
        return len(self.seq) // 2

    def __len__(self) -> int:
        return self.order

    def __bool__(self) -> bool:
        return bool(self.seq)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.seq)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edges in label order, which is also the order of left vertices."""
        first: dict[int, int] = {}
        pairs: list[Edge | None] = [None] * self.order
        for pos, value in enumerate(self.seq, start=1):
            if value in first:
                pairs[value - 1] = Edge(first[value], pos)
            else:
                first[value] = pos
        return tuple(e for e in pairs if e is not None)

    def rightmost_label(self) -> int:
        if not self.seq:
            raise ValueError("Empty matching has no rightmost edge")
        return self.seq[-1]


EMPTY = Matching()


def edge_relation(a: Edge, b: Edge) -> int:
    if a.left > b.left:
        a, b = b, a
    if a.right < b.left:
        return ALIGNED
    if a.right < b.right:
        return CROSSING
    return NESTING


def canonicalize(raw: Iterable[int]) -> Matching:
    values = list(raw)
    counts = Counter(values)
    bad = sorted(v for v, c in counts.items() if c != 2)
    if bad:
        raise ValueError(f"Every value must occur exactly twice, offending values: {bad}")
    relabel: dict[int, int] = {}
    seq = []
    for value in values:
        if value not in relabel:
            relabel[value] = len(relabel) + 1
        seq.append(relabel[value])
    return Matching(tuple(seq))


def from_edges(edges: Iterable[Edge | tuple[int, int]], n: int) -> Matching:
    size = 2 * n
    owner: list[int] = [0] * (size + 1)
    label = 0
    for item in edges:
        left, right = (item.left, item.right) if isinstance(item, Edge) else sorted(item)
        label += 1
        for vertex in (left, right):
            if not 1 <= vertex <= size:
                raise ValueError(f"Vertex {vertex} outside [1, {size}]")
            if owner[vertex]:
                raise ValueError(f"Vertex {vertex} belongs to two edges")
            owner[vertex] = label
    missing = [v for v in range(1, size + 1) if not owner[v]]
    if missing:
        raise ValueError(f"Vertices not covered by any edge: {missing}")
    return canonicalize(owner[1:])


def to_edges(m: Matching) -> frozenset[Edge]:
    return frozenset(m.edges)


def juxtapose(a: Matching, b: Matching) -> Matching:
    shift = a.order
    return Matching(a.seq + tuple(v + shift for v in b.seq))


def lift(m: Matching) -> Matching:
    return Matching((1,) + tuple(v + 1 for v in m.seq) + (1,))


def reverse(m: Matching) -> Matching:
    return canonicalize(reversed(m.seq))


def delete_edges(m: Matching, labels: Iterable[int]) -> Matching:
    dropped = set(labels)
    unknown = sorted(label for label in dropped if not 1 <= label <= m.order)
    if unknown:
        raise ValueError(f"Unknown edge labels {unknown} for order {m.order}")
    return canonicalize(v for v in m.seq if v not in dropped)


def restrict(m: Matching, labels: Iterable[int]) -> Matching:
    kept = set(labels)
    return delete_edges(m, (label for label in range(1, m.order + 1) if label not in kept))


def connected_components(m: Matching) -> list[Matching]:
    parts: list[Matching] = []
    open_edges: set[int] = set()
    start = 0
    for pos, value in enumerate(m.seq):
        if value in open_edges:
            open_edges.remove(value)
        else:
            open_edges.add(value)
        if not open_edges:
            parts.append(canonicalize(m.seq[start : pos + 1]))
            start = pos + 1
    return parts


@dataclass(frozen=True)
class RoofCore:
    roof: Matching
    core: Matching
    core_edge_labels: frozenset[int]


def nested_labels(m: Matching) -> frozenset[int]:
    edges = m.edges
    nested = set()
    for i, e in enumerate(edges):
        for f in edges[:i]:
            if f.left < e.left and e.right < f.right:
                nested.add(i + 1)
                break
    return frozenset(nested)


def roof_core_split(m: Matching) -> RoofCore:
    nested = nested_labels(m)
    return RoofCore(
        roof=delete_edges(m, nested),
        core=restrict(m, nested),
        core_edge_labels=nested,
    )


@dataclass(frozen=True)
class Classification:
    noncrossing: bool
    nonnesting: bool
    permutational: bool
    connected: bool


def classify(m: Matching) -> Classification:
    seen: set[int] = set()
    edges = m.edges
    for i, a in enumerate(edges):
        for b in edges[i + 1 :]:
            seen.add(edge_relation(a, b))
    return Classification(
        noncrossing=CROSSING not in seen,
        nonnesting=NESTING not in seen,
        permutational=ALIGNED not in seen,
        connected=len(connected_components(m)) == 1,
    )


def small_edge_count(m: Matching) -> int:
    return sum(1 for e in m.edges if e.is_small())


def totally_nesting(n: int) -> Matching:
    return Matching(tuple(range(1, n + 1)) + tuple(range(n, 0, -1)))


def totally_crossing(n: int) -> Matching:
    return Matching(tuple(range(1, n + 1)) * 2)
