from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .matching import EMPTY, Matching, delete_edges, edge_relation, from_edges

# rows[q][p] is the relation of edges p < q (labels p + 1, q + 1).
Relations = Sequence[Sequence[int]]


@dataclass(frozen=True)
class Occurrence:
    indices: tuple[int, ...]


@dataclass(frozen=True)
class UnlabeledMatching:
    representative: Matching
    members: frozenset[Matching]

    @property
    def order(self) -> int:
        return self.representative.order


@lru_cache(maxsize=4096)
def relation_rows(m: Matching) -> tuple[tuple[int, ...], ...]:
    edges = m.edges
    return tuple(tuple(edge_relation(edges[p], edges[q]) for p in range(q)) for q in range(len(edges)))


def embeddings(
    pattern_rows: Relations,
    host_rows: Relations,
    last: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield increasing tuples of host edge indices carrying the pattern's relations.

    An occurrence of a pattern is the same thing as such a tuple: the left
    vertices fix the order of the chosen edges and the pairwise relations fix
    the order of all their endpoints. With ``last`` set, the pattern's final
    edge is pinned to that host edge and the rest are taken below it.
    """
    k = len(pattern_rows)
    size = len(host_rows) if last is None else last + 1
    if k == 0:
        yield ()
        return
    if k > size:
        return

    candidates: list[list[int]] | None = None
    if last is not None:
        pinned = host_rows[last]
        final = pattern_rows[k - 1]
        candidates = [[h for h in range(last) if pinned[h] == final[i]] for i in range(k - 1)]

    chosen: list[int] = []

    def extend(i: int, start: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield tuple(chosen)
            return
        if last is not None and i == k - 1:
            chosen.append(last)
            yield tuple(chosen)
            chosen.pop()
            return
        wanted = pattern_rows[i]
        pool = candidates[i] if candidates is not None else range(start, size)
        limit = size - (k - i)
        for h in pool:
            if h < start:
                continue
            if h > limit:
                break
            row = host_rows[h]
            if all(row[chosen[p]] == wanted[p] for p in range(i)):
                chosen.append(h)
                yield from extend(i + 1, h + 1)
                chosen.pop()

    yield from extend(0, 0)


def occurrences(pattern: Matching, host: Matching) -> list[Occurrence]:
    edges = host.edges
    found = []
    for picked in embeddings(relation_rows(pattern), relation_rows(host)):
        vertices = sorted(v for h in picked for v in (edges[h].left, edges[h].right))
        found.append(Occurrence(tuple(vertices)))
    found.sort(key=lambda occ: occ.indices)
    return found


def contains(pattern: Matching, host: Matching) -> bool:
    if pattern.order > host.order:
        return False
    return next(embeddings(relation_rows(pattern), relation_rows(host)), None) is not None


def avoids(pattern: Matching, host: Matching) -> bool:
    return not contains(pattern, host)


def avoids_all(host: Matching, patterns: Iterable[Matching]) -> bool:
    return all(avoids(p, host) for p in patterns)


def reduce_basis(patterns: Iterable[Matching]) -> frozenset[Matching]:
    """Drop patterns that contain another pattern of the set; the avoider class is unchanged."""
    pats = frozenset(patterns)
    return frozenset(p for p in pats if not any(q != p and contains(q, p) for q in pats))


def minimally_contains(host: Matching, pattern: Matching) -> bool:
    if not contains(pattern, host):
        return False
    if not host:
        return True
    return avoids(pattern, delete_edges(host, [host.rightmost_label()]))


def rotate(m: Matching, k: int) -> Matching:
    size = len(m.seq)
    if size == 0:
        return m

    def image(v: int) -> int:
        return ((v + k - 1) % size) + 1

    return from_edges(((image(e.left), image(e.right)) for e in m.edges), m.order)


def cyclic_class(m: Matching) -> UnlabeledMatching:
    if not m:
        return UnlabeledMatching(representative=EMPTY, members=frozenset({EMPTY}))
    members = frozenset(rotate(m, k) for k in range(len(m.seq)))
    return UnlabeledMatching(representative=min(members), members=members)


def avoids_unlabeled(host: Matching, u: UnlabeledMatching) -> bool:
    return avoids_all(host, u.members)
