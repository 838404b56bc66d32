from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
import logging

from .matching import EMPTY, Matching, delete_edges, juxtapose, lift, small_edge_count, totally_nesting
from .patterns import contains

LOGGER = logging.getLogger(__name__)

SMALL_EDGE = Matching((1, 1))


@dataclass
class IntervalProfile:
    tau: Matching
    # by_edges[k - 1] counts elements with k edges.
    by_edges: tuple[int, ...]
    # by_small_edges[j] counts elements with j small edges.
    by_small_edges: tuple[int, ...]
    total: int


def interval_elements(tau: Matching) -> frozenset[Matching]:
    """All sigma with 11 <= sigma <= tau, by repeated single-edge deletion."""
    if not tau:
        raise ValueError("Interval [11, tau] needs a nonempty tau")
    seen = {tau}
    queue = deque([tau])
    while queue:
        current = queue.popleft()
        if current.order == 1:
            continue
        for label in range(1, current.order + 1):
            smaller = delete_edges(current, [label])
            if smaller not in seen:
                seen.add(smaller)
                queue.append(smaller)
    seen.discard(EMPTY)
    LOGGER.debug("Interval below %s has %d elements", tau, len(seen))
    return frozenset(seen)


def interval_profile(tau: Matching) -> IntervalProfile:
    elements = interval_elements(tau)
    edges = Counter(m.order for m in elements)
    small = Counter(small_edge_count(m) for m in elements)
    return IntervalProfile(
        tau=tau,
        by_edges=tuple(edges[k] for k in range(1, tau.order + 1)),
        by_small_edges=tuple(small[j] for j in range(max(small) + 1)),
        total=len(elements),
    )


def _nest(k: int, inner: Matching) -> Matching:
    for _ in range(k):
        inner = lift(inner)
    return inner


def build_ks(k: int, r: int, s: int) -> Matching:
    if k < 0 or r < 1 or s < 1:
        raise ValueError(f"k(r;s) needs k >= 0 and r, s >= 1, got {k}, {r}, {s}")
    return _nest(k, juxtapose(totally_nesting(r), totally_nesting(s)))


def formula_ks(k: int, r: int, s: int) -> int:
    if k < 0 or s < 1 or r < s:
        raise ValueError(f"Formula needs k >= 0 and r >= s >= 1, got {k}, {r}, {s}")
    return r + k + r * s * (k + 1)


def build_khabc(k: int, h: int, a: int, b: int, c: int) -> Matching:
    if min(a, b, c) < 1 or min(k, h) < 0:
        raise ValueError(f"k(h(a;b);c) needs a, b, c >= 1 and h, k >= 0, got {(k, h, a, b, c)}")
    inner = _nest(h, juxtapose(totally_nesting(a), totally_nesting(b)))
    return _nest(k, juxtapose(inner, totally_nesting(c)))


@dataclass(frozen=True)
class KhabcFormula:
    chi1: int
    chi2: int
    chi3: int

    @property
    def total(self) -> int:
        return self.chi1 + self.chi2 + self.chi3


def formula_khabc(k: int, h: int, a: int, b: int, c: int) -> KhabcFormula:
    if min(a, b, c) < 1 or min(k, h) < 0:
        raise ValueError(f"Formula needs a, b, c >= 1 and h, k >= 0, got {(k, h, a, b, c)}")
    chi1 = max(k + h + a, k + h + b, k + c)
    chi2 = a * b * (h + k + 1) + (max(a, b) + h) * c * (k + 1) - a * min(b, c) * (k + 1)
    chi3 = a * b * c * (h + 1) * (k + 1)
    return KhabcFormula(chi1=chi1, chi2=chi2, chi3=chi3)


def tau_family(n: int) -> Matching:
    if n < 0:
        raise ValueError(f"Index must be nonnegative, got {n}")
    tau = EMPTY
    for i in range(1, n + 1):
        tau = juxtapose(tau, SMALL_EDGE) if i % 2 else lift(tau)
    return tau


@dataclass(frozen=True)
class BivariateTable:
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    def total(self, n: int) -> int:
        return sum(self.rows[n])


def f_table(N: int) -> BivariateTable:
    """f[n][k] = elements with k edges below tau_n, from the three-term recurrence."""
    if N < 0:
        raise ValueError(f"Order must be nonnegative, got {N}")
    f = [[0] * (N + 1) for _ in range(N + 1)]

    def at(n: int, k: int) -> int:
        return f[n][k] if n >= 0 and k >= 0 else 0

    for n in range(1, N + 1):
        for k in range(1, n + 1):
            seed = 1 if n == k == 1 else 0
            f[n][k] = seed + at(n - 1, k) + at(n - 1, k - 1) - at(n - 3, k - 1)
    return BivariateTable(tuple(tuple(row) for row in f))


def f_total(n: int) -> int:
    return f_table(n).total(n)


Poly = dict[tuple[int, int], int]


def _poly_mul(p: Poly, q: Poly, N: int) -> Poly:
    out: Poly = {}
    for (i, j), a in p.items():
        for (s, t), b in q.items():
            if i + s <= N:
                key = (i + s, j + t)
                out[key] = out.get(key, 0) + a * b
    return {key: v for key, v in out.items() if v}


def f_gf_table(N: int) -> BivariateTable:
    """Coefficients of xy / (1 - x - xy + x^3 y) up to x^N, expanded as a geometric series."""
    if N < 0:
        raise ValueError(f"Order must be nonnegative, got {N}")
    u: Poly = {(1, 0): 1, (1, 1): 1, (3, 1): -1}
    power: Poly = {(0, 0): 1}
    inverse: Poly = {}
    for _ in range(N + 1):
        for key, v in power.items():
            inverse[key] = inverse.get(key, 0) + v
        power = _poly_mul(power, u, N)
    series = _poly_mul(inverse, {(1, 1): 1}, N)
    rows = [[0] * (N + 1) for _ in range(N + 1)]
    for (n, k), v in series.items():
        if k <= N:
            rows[n][k] = v
    return BivariateTable(tuple(tuple(row) for row in rows))


def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError(f"Index must be nonnegative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass
class LiftAppendCheck:
    below: bool
    lifted: bool
    juxtaposed: bool

    @property
    def i_ii(self) -> bool:
        return self.below == self.lifted

    @property
    def i_iii(self) -> bool:
        return self.below == self.juxtaposed


def verify_lift_append(sigma: Matching, tau: Matching) -> LiftAppendCheck:
    """Compare sigma <= tau with the lifted and small-edge-appended containments."""
    return LiftAppendCheck(
        below=contains(sigma, tau),
        lifted=contains(lift(sigma), juxtapose(lift(tau), SMALL_EDGE)),
        juxtaposed=contains(juxtapose(sigma, SMALL_EDGE), lift(juxtapose(tau, SMALL_EDGE))),
    )
