from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .matching import EMPTY, Matching, canonicalize, restrict
from .patterns import avoids_unlabeled, cyclic_class

FORBIDDEN = cyclic_class(Matching((1, 2, 3, 1, 3, 2)))
EMPTY_TREE_TEXT = "."


@dataclass(frozen=True)
class TernaryTree:
    first: TernaryTree | None = None
    second: TernaryTree | None = None
    third: TernaryTree | None = None

    @property
    def children(self) -> tuple[TernaryTree | None, TernaryTree | None, TernaryTree | None]:
        return (self.first, self.second, self.third)

    def __len__(self) -> int:
        return 1 + sum(tree_size(child) for child in self.children)


Tree = TernaryTree | None


def tree_size(t: Tree) -> int:
    return 0 if t is None else len(t)


def phi(t: Tree) -> Matching:
    if t is None:
        return EMPTY
    g1, g2, g3 = (phi(child) for child in t.children)
    a, b = g1.order, g2.order
    body2 = [v + a for v in g2.seq]
    body3 = [v + a + b for v in g3.seq]
    new = a + b + g3.order + 1

    if not g1:
        seq = [new, *body2, new, *body3]
    else:
        s1 = list(g1.seq)
        r = s1.index(1, 1)
        # new edge crosses the leftmost edge of g1: l', g2, l, ..., r', g3, r, ...
        seq = [new, *body2, s1[0], *s1[1:r], new, *body3, s1[r], *s1[r + 1 :]]
    return canonicalize(seq)


def _labels(m: Matching, keep) -> list[int]:
    return [label for label, e in enumerate(m.edges, start=1) if keep(e)]


def _psi(m: Matching) -> Tree:
    if not m:
        return None
    edges = m.edges
    lead = edges[0]
    crossed = [e for e in edges[1:] if e.left < lead.right < e.right]

    if not crossed:
        inner = _labels(m, lambda e: lead.left < e.left and e.right < lead.right)
        outer = _labels(m, lambda e: e.left > lead.right)
        return TernaryTree(None, _psi(restrict(m, inner)), _psi(restrict(m, outer)))

    prime = crossed[0]
    under = _labels(m, lambda e: lead.left < e.left and e.right < prime.left)
    between = _labels(m, lambda e: lead.right < e.left and e.right < prime.right)
    taken = set(under) | set(between) | {1}
    rest = [label for label in range(1, m.order + 1) if label not in taken]
    return TernaryTree(
        _psi(restrict(m, rest)),
        _psi(restrict(m, under)),
        _psi(restrict(m, between)),
    )


def psi(m: Matching) -> Tree:
    if not avoids_unlabeled(m, FORBIDDEN):
        raise ValueError(f"Matching {m} contains the unlabeled pattern [1,2,1,3,2,3]")
    return _psi(m)


def enumerate_ternary_trees(n: int) -> Iterator[Tree]:
    if n < 0:
        raise ValueError(f"Node count must be nonnegative, got {n}")
    if n == 0:
        yield None
        return
    for i in range(n):
        for j in range(n - i):
            k = n - 1 - i - j
            for first, second, third in product(
                list(enumerate_ternary_trees(i)),
                list(enumerate_ternary_trees(j)),
                list(enumerate_ternary_trees(k)),
            ):
                yield TernaryTree(first, second, third)


def format_tree(t: Tree) -> str:
    if t is None:
        return EMPTY_TREE_TEXT
    return "(" + " ".join(format_tree(child) for child in t.children) + ")"


def parse_tree(raw: str) -> Tree:
    tokens = [ch for ch in raw if not ch.isspace()]
    pos = 0

    def read() -> Tree:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"Unexpected end of tree: {raw!r}")
        token = tokens[pos]
        pos += 1
        if token == EMPTY_TREE_TEXT:
            return None
        if token != "(":
            raise ValueError(f"Unexpected {token!r} in tree {raw!r}")
        children = (read(), read(), read())
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValueError(f"Tree node needs exactly three children: {raw!r}")
        pos += 1
        return TernaryTree(*children)

    tree = read()
    if pos != len(tokens):
        raise ValueError(f"Trailing text after tree: {raw!r}")
    return tree


def _check_permutation(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"Not a permutation of 1..{len(p)}: {tuple(p)}")


def perm_to_matching(p: Sequence[int]) -> Matching:
    _check_permutation(p)
    n = len(p)
    return Matching(tuple(range(1, n + 1)) + tuple(p))


def permutation_contains(pattern: Sequence[int], perm: Sequence[int]) -> bool:
    """Classical containment: some subsequence of perm is order-isomorphic to pattern."""
    _check_permutation(pattern)
    _check_permutation(perm)
    k, n = len(pattern), len(perm)
    if k > n:
        return False
    chosen: list[int] = []

    def fits(value: int, i: int) -> bool:
        for p, prev in enumerate(chosen):
            if (pattern[p] < pattern[i]) != (prev < value):
                return False
        return True

    def extend(i: int, start: int) -> bool:
        if i == k:
            return True
        for j in range(start, n - (k - i) + 1):
            if fits(perm[j], i):
                chosen.append(perm[j])
                if extend(i + 1, j + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)
