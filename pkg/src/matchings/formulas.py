from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import logging
from math import comb, factorial
from typing import Callable, Iterable, Iterator

from .enumerator import CountTable
from .matching import Matching, classify, reverse
from .patterns import UnlabeledMatching, reduce_basis
from .power_series import PowerSeries, constant, from_counts, geometric, z

LOGGER = logging.getLogger(__name__)

SMALL_EDGE = Matching((1, 1))
CROSSING_PAIR = Matching((1, 2, 1, 2))
NESTING_PAIR = Matching((1, 2, 2, 1))
ALIGNED_PAIR = Matching((1, 1, 2, 2))
CROSSING_TRIPLE = Matching((1, 2, 3, 1, 2, 3))
NESTING_TRIPLE = Matching((1, 2, 3, 3, 2, 1))
CHI = Matching((1, 2, 3, 1, 3, 2))
CHI_BAR = Matching((1, 2, 3, 2, 1, 3))


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"Catalan index must be nonnegative, got {n}")
    return comb(2 * n, n) // (n + 1)


def catalan_series(N: int) -> PowerSeries:
    return PowerSeries.of(catalan(n) for n in range(N + 1))


def _entry(table: CountTable | list[int] | tuple[int, ...], n: int) -> int:
    if isinstance(table, CountTable):
        return table.require(n)
    if not 0 <= n < len(table):
        raise ValueError(f"Count table has no entry for n={n}")
    return table[n]


def juxtaposition_count(
    n: int,
    sigma_order: int,
    mu_sigma: CountTable,
    m_sigma: CountTable,
    m_tau: CountTable,
) -> int:
    """|M_n(sigma(tau + |sigma|))| from the minimal-containment counts of sigma and the avoiders of tau."""
    if n < sigma_order:
        raise ValueError(f"Needs n >= |sigma| = {sigma_order}, got {n}")
    total = _entry(m_sigma, n)
    for ell in range(sigma_order, n + 1):
        mu = _entry(mu_sigma, ell)
        if not mu:
            continue
        for k in range(n - ell + 1):
            total += (
                binomial(2 * ell + k - 1, k)
                * binomial(2 * n - 2 * ell - k, k)
                * factorial(k)
                * mu
                * _entry(m_tau, n - ell - k)
            )
    return total


def juxtaposition_table(
    n_max: int,
    sigma_order: int,
    mu_sigma: CountTable,
    m_sigma: CountTable,
    m_tau: CountTable,
) -> list[int]:
    # Below |sigma| nothing contains sigma, so the juxtaposition is avoided too.
    return [
        _entry(m_sigma, n) if n < sigma_order else juxtaposition_count(n, sigma_order, mu_sigma, m_sigma, m_tau)
        for n in range(n_max + 1)
    ]


def small_edge_prefix_count(n: int, m_tau: CountTable | list[int]) -> int:
    """|M_n(11(tau + 1))|; the empty matching is counted separately for n = 0."""
    if n == 0:
        return 1
    return sum(
        factorial(k) * binomial(2 * n - k - 1, k - 1) * _entry(m_tau, n - k) for k in range(1, n + 1)
    )


def mu1212_recursive(n_max: int) -> CountTable:
    mu = [0] * (n_max + 1)
    for n in range(2, n_max + 1):
        direct = sum((2 * k + 1) * catalan(k) * catalan(n - k - 2) for k in range(n - 1))
        crossed = sum(catalan(k) * mu[n - k - 1] for k in range(n - 1))
        mu[n] = direct + crossed
    return CountTable(label="mu[1,2,1,2]", counts=tuple(mu), source="mu1212-recurrence")


def mu1212_closed(n: int) -> int:
    return binomial(2 * n - 1, n - 2)


def mu1212_gf(N: int) -> PowerSeries:
    c = catalan_series(N)
    zc = z(N) * c
    return z(N) * (c - 1) / ((1 - 2 * zc) * (1 - zc))


def a002054_series(N: int) -> PowerSeries:
    c = catalan_series(N)
    return z(N) * c**3 / (1 - 2 * z(N) * c)


@dataclass
class CompositionCheck:
    n: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def composition_identity_check(n: int) -> CompositionCheck:
    if n < 2:
        raise ValueError(f"Composition identity needs n >= 2, got {n}")
    lhs = 0
    for alpha in compositions(n - 1):
        weight = 1
        for part in alpha:
            weight *= catalan(part - 1)
        lhs += sum(2 * part - 1 for part in alpha) * weight
    return CompositionCheck(n=n, lhs=lhs, rhs=mu1212_closed(n))


def pair_prefix_count(n: int, m_tau: CountTable | list[int]) -> int:
    """|M_n(sigma(tau + 2))| for sigma in {1212, 1221}."""
    total = catalan(n)
    for ell in range(2, n + 1):
        mu = binomial(2 * ell - 1, ell - 2)
        for k in range(n - ell + 1):
            total += (
                mu
                * binomial(2 * ell - 1 + k, k)
                * binomial(2 * (n - ell) - k, k)
                * factorial(k)
                * _entry(m_tau, n - ell - k)
            )
    return total


def m123123_count(n: int) -> int:
    return catalan(n) * catalan(n + 2) - catalan(n + 1) ** 2


def gf_lifting(m_series: PowerSeries, N: int | None = None) -> PowerSeries:
    """GF of M(1(sigma+1)1, chi, chi-bar) from the GF of M(sigma, chi, chi-bar)."""
    if m_series[0] != 1:
        raise ValueError("Lifting needs a series with constant term 1")
    if N is not None:
        m_series = m_series.truncate(N)
    order = m_series.N
    zz = z(order)
    inner = catalan_series(order).compose(zz * m_series * m_series)
    return 1 / (1 - zz * m_series * inner)


def gf_lifting_iterated(base: PowerSeries, k: int, N: int | None = None) -> PowerSeries:
    if k < 0:
        raise ValueError(f"Lifting depth must be nonnegative, got {k}")
    series = base if N is None else base.truncate(N)
    for _ in range(k):
        series = gf_lifting(series)
    return series


@dataclass(frozen=True)
class LiftingForms:
    form_a: PowerSeries
    form_b: PowerSeries


def gf_lifted_1212(N: int) -> LiftingForms:
    """Two closed forms of M(123231, 123132, 123213, z)."""
    if N < 1:
        raise ValueError(f"Needs N >= 1, got {N}")
    c = catalan_series(N)
    form_a = 1 / (1 - z(N) * c * catalan_series(N).compose(c - 1))

    # The radical form is a quotient by z, so it is expanded one order further.
    wide = N + 1
    cw = catalan_series(wide)
    zw = z(wide)
    numerator = 1 + zw * cw - (1 - zw * cw - 5 * zw).sqrt()
    form_b = numerator.div_z() / (2 * (1 + cw)).truncate(N)
    return LiftingForms(form_a=form_a, form_b=form_b)


def gf_123132(N: int) -> PowerSeries:
    wide = N + 1
    zw = z(wide)
    root = (1 - 12 * zw).sqrt()
    denominator = 1 + 36 * zw - (1 - 12 * zw) * root
    return 54 / denominator.div_z()


def gf_unlabeled_112323(N: int) -> PowerSeries:
    zz = z(N)
    return catalan_series(N) + zz * zz / ((1 - zz) ** 2 * (1 - 2 * zz))


def unlabeled_closed_counts(which: str, n: int) -> int:
    if n < 0:
        raise ValueError(f"Order must be nonnegative, got {n}")
    if which == "112323":
        if n < 2:
            return 1
        return catalan(n) + 2**n - n - 1
    if which == "123132":
        return comb(3 * n, n) // (2 * n + 1)
    raise ValueError(f"No closed form for unlabeled pattern [{which}]")


def mgf_aux_series(which: str, N: int) -> PowerSeries:
    if which == "1212":
        return catalan_series(N)
    if which == "1122":
        return geometric(N)
    raise ValueError(f"Unknown auxiliary series: {which}")


def ternary_series(N: int) -> PowerSeries:
    t = constant(1, N)
    zz = z(N)
    for _ in range(N + 1):
        t = 1 + zz * t**3
    return t


def series_connected(m_series: PowerSeries) -> PowerSeries:
    """Connected part M* of a class with M = 1 / (1 - M*)."""
    if m_series[0] != 1:
        raise ValueError("Class series must have constant term 1")
    return 1 - 1 / m_series


@dataclass(frozen=True)
class Formula:
    name: str
    counts: Callable[[int], list[int]]

    def table(self, n_max: int, label: str) -> CountTable:
        return CountTable(label=label, counts=tuple(self.counts(n_max)), source=self.name)


def _series_formula(name: str, build: Callable[[int], PowerSeries]) -> Formula:
    return Formula(name=name, counts=lambda n_max: build(n_max).integers())


def _values_formula(name: str, value: Callable[[int], int]) -> Formula:
    return Formula(name=name, counts=lambda n_max: [value(n) for n in range(n_max + 1)])


EMPTY_ONLY = _values_formula("empty-only", lambda n: 1 if n == 0 else 0)
CATALAN = _values_formula("catalan", catalan)
FACTORIAL = _values_formula("factorial", factorial)
CROSSING_TRIPLE_FORMULA = _values_formula("crossing-triple", m123123_count)
M123132 = _series_formula("m123132-gf", gf_123132)


def _prefix11(inner: Formula) -> Formula:
    def counts(n_max: int) -> list[int]:
        m_tau = inner.counts(n_max)
        return [small_edge_prefix_count(n, m_tau) for n in range(n_max + 1)]

    return Formula(name=f"prefix11({inner.name})", counts=counts)


def _noncrossing_prefix(inner: Formula) -> Formula:
    def counts(n_max: int) -> list[int]:
        m_tau = inner.counts(n_max)
        return [pair_prefix_count(n, m_tau) for n in range(n_max + 1)]

    return Formula(name=f"pair-prefix({inner.name})", counts=counts)


def _lifted(inner: Formula) -> Formula:
    def counts(n_max: int) -> list[int]:
        return gf_lifting(from_counts(inner.counts(n_max))).integers()

    return Formula(name=f"lifting({inner.name})", counts=counts)


def _shifted(values: Iterable[int], by: int) -> Matching:
    return Matching(tuple(v - by for v in values))


def _resolve_single(p: Matching) -> Formula | None:
    if p == SMALL_EDGE:
        return EMPTY_ONLY
    if p in (CROSSING_PAIR, NESTING_PAIR):
        return CATALAN
    if p == ALIGNED_PAIR:
        return FACTORIAL
    if p in (CROSSING_TRIPLE, NESTING_TRIPLE):
        return CROSSING_TRIPLE_FORMULA
    if p in (CHI, CHI_BAR):
        return M123132
    if p.order >= 2 and p.seq[:2] == (1, 1):
        inner = resolve_formula([_shifted(p.seq[2:], 1)])
        return None if inner is None else _prefix11(inner)
    if p.order >= 3 and p.seq[:4] in (CROSSING_PAIR.seq, NESTING_PAIR.seq):
        inner = resolve_formula([_shifted(p.seq[4:], 2)])
        return None if inner is None else _noncrossing_prefix(inner)
    return None


def _resolve_with_chi(sigma: Matching) -> Formula | None:
    if sigma in (CROSSING_PAIR, NESTING_PAIR):
        return CATALAN
    seq = sigma.seq
    if sigma.order >= 2 and seq[0] == 1 and seq[-1] == 1:
        core = _shifted(seq[1:-1], 1)
        if classify(core).connected:
            inner = resolve_formula([core, CHI, CHI_BAR])
            return None if inner is None else _lifted(inner)
    return None


def _resolve(pats: frozenset[Matching]) -> Formula | None:
    if len(pats) == 1:
        return _resolve_single(next(iter(pats)))
    if len(pats) == 3 and {CHI, CHI_BAR} <= pats:
        (sigma,) = pats - {CHI, CHI_BAR}
        return _resolve_with_chi(sigma)
    return None


def resolve_formula(patterns: Iterable[Matching]) -> Formula | None:
    """Exact formula for |M_n(patterns)| when one is known, else None."""
    pats = reduce_basis(patterns)
    if not pats:
        raise ValueError("At least one pattern is required")
    found = _resolve(pats)
    if found is None:
        mirrored = frozenset(reverse(p) for p in pats)
        if mirrored != pats:
            found = _resolve(mirrored)
    if found is None:
        LOGGER.debug("No formula known for %d pattern(s)", len(pats))
    return found


UNLABELED_FORMULAS: dict[tuple[int, ...], Formula] = {
    (1, 1): EMPTY_ONLY,
    (1, 1, 2, 2): _values_formula("unlabeled-1122", lambda n: 1),
    (1, 2, 1, 2): CATALAN,
    (1, 1, 2, 3, 2, 3): _series_formula("unlabeled-112323", gf_unlabeled_112323),
    (1, 2, 1, 3, 2, 3): _series_formula("ternary", ternary_series),
    (1, 2, 3, 1, 2, 3): CROSSING_TRIPLE_FORMULA,
}


def resolve_unlabeled(u: UnlabeledMatching) -> Formula | None:
    found = UNLABELED_FORMULAS.get(u.representative.seq)
    if found is not None:
        return found
    return resolve_formula(u.members)
