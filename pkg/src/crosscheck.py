from __future__ import annotations

from dataclasses import dataclass, field
import logging
from typing import Any, Callable, Iterable

from .matchings.count_cache import CountCache
from .matchings.enumerator import CountTable, avoid_query, count_avoiders, count_avoiders_unlabeled
from .matchings.formulas import resolve_formula, resolve_unlabeled
from .matchings.matching import Matching
from .matchings.notation import format_unlabeled
from .matchings.patterns import UnlabeledMatching

LOGGER = logging.getLogger(__name__)


@dataclass
class CheckReport:
    query: str
    n_max: int
    formula: CountTable | None
    oracle: CountTable | None
    mismatches: list[int] = field(default_factory=list)
    unavailable: list[str] = field(default_factory=list)

    @property
    def compared(self) -> bool:
        return self.formula is not None and self.oracle is not None

    @property
    def agree(self) -> bool:
        return self.compared and not self.mismatches


def _guarded(run: Callable[[], Any], label: str) -> tuple[str, Any]:
    try:
        return "ok", run()
    except Exception as exc:
        LOGGER.warning("%s failed: %s", label, exc)
        return "error", f"{label}: {exc}"


def compare_tables(
    query: str,
    n_max: int,
    formula: Callable[[], CountTable | None],
    oracle: Callable[[], CountTable],
) -> CheckReport:
    unavailable: list[str] = []

    formula_state, formula_result = _guarded(formula, "formula")
    formula_table: CountTable | None = None
    if formula_state == "ok":
        if formula_result is None:
            unavailable.append("formula: no closed form known for this query")
        else:
            formula_table = formula_result
    else:
        unavailable.append(formula_result)

    oracle_state, oracle_result = _guarded(oracle, "oracle")
    oracle_table: CountTable | None = oracle_result if oracle_state == "ok" else None
    if oracle_state != "ok":
        unavailable.append(oracle_result)

    mismatches: list[int] = []
    if formula_table is not None and oracle_table is not None:
        mismatches = [n for n in range(n_max + 1) if formula_table[n] != oracle_table[n]]
        if mismatches:
            LOGGER.warning("%s: formula and oracle disagree at n=%s", query, mismatches)

    return CheckReport(
        query=query,
        n_max=n_max,
        formula=formula_table,
        oracle=oracle_table,
        mismatches=mismatches,
        unavailable=unavailable,
    )


def crosscheck(
    patterns: Iterable[Matching],
    n_max: int,
    jobs: int = 1,
    cache: CountCache | None = None,
) -> CheckReport:
    pats = frozenset(patterns)
    query = avoid_query(pats)

    def formula() -> CountTable | None:
        found = resolve_formula(pats)
        return None if found is None else found.table(n_max, query)

    return compare_tables(query, n_max, formula, lambda: count_avoiders(n_max, pats, jobs=jobs, cache=cache))


def crosscheck_unlabeled(
    u: UnlabeledMatching,
    n_max: int,
    jobs: int = 1,
    cache: CountCache | None = None,
) -> CheckReport:
    query = f"avoid-unlabeled{format_unlabeled(u)}"

    def formula() -> CountTable | None:
        found = resolve_unlabeled(u)
        return None if found is None else found.table(n_max, query)

    return compare_tables(query, n_max, formula, lambda: count_avoiders_unlabeled(n_max, u, jobs=jobs, cache=cache))
