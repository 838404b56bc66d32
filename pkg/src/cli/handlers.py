from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Callable, TextIO

from ..config import Settings
from ..crosscheck import compare_tables
from ..matchings.bijections import (
    FORBIDDEN,
    enumerate_ternary_trees,
    format_tree,
    parse_tree,
    perm_to_matching,
    phi,
    psi,
)
from ..matchings.count_cache import CountCache
from ..matchings.enumerator import (
    CountTable,
    avoid_query,
    count_avoiders,
    count_avoiders_unlabeled,
    count_connected_avoiders,
    count_mu,
)
from ..matchings.formulas import (
    CHI,
    CHI_BAR,
    CROSSING_PAIR,
    NESTING_PAIR,
    a002054_series,
    catalan_series,
    gf_123132,
    gf_lifted_1212,
    gf_lifting_iterated,
    gf_unlabeled_112323,
    mu1212_closed,
    mu1212_gf,
    resolve_formula,
    resolve_unlabeled,
    series_connected,
    ternary_series,
)
from ..matchings.intervals import (
    build_khabc,
    build_ks,
    f_gf_table,
    f_table,
    fibonacci,
    formula_khabc,
    formula_ks,
    interval_profile,
    tau_family,
)
from ..matchings.matching import Matching, lift
from ..matchings.notation import (
    format_matching,
    format_unlabeled,
    parse_int_tuple,
    parse_matching,
    parse_pattern_set,
    parse_permutation,
    parse_unlabeled,
)
from ..matchings.patterns import avoids_unlabeled, cyclic_class
from ..matchings.power_series import PowerSeries, from_counts
from .output import profile_payload, series_payload, table_payload, write_check, write_counts, write_json
from .render import render_svg

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

LIFTED_1212 = lift(CROSSING_PAIR)

Source = Callable[[], CountTable | None]

# Value of an operand flag given without its own argument.
BARE_FLAG = ""


def _cache(settings: Settings) -> CountCache | None:
    return CountCache(settings.cache_path) if settings.cache_path else None


def _jobs(args: argparse.Namespace, settings: Settings) -> int:
    return args.jobs if args.jobs else settings.jobs


def _within_bound(n: int, settings: Settings, err: TextIO) -> bool:
    if n > settings.max_order:
        err.write(f"Ошибка: порядок {n} больше допустимого для перебора ({settings.max_order}, MATCHKIT_MAX_ORDER).\n")
        return False
    return True


def _formula_table(query: str, n_max: int, patterns: frozenset[Matching]) -> Source:
    def run() -> CountTable | None:
        found = resolve_formula(patterns)
        return None if found is None else found.table(n_max, query)

    return run


def _count_sources(args: argparse.Namespace, settings: Settings) -> tuple[str, Source, Source]:
    n = args.n
    jobs = _jobs(args, settings)
    # --check compares against a fresh search, never against cached tables.
    cache = None if args.check else _cache(settings)
    if args.connected and args.avoid is None:
        raise ValueError("Флаг --connected работает только с --avoid")

    if args.mu is not None:
        sigma = parse_matching(args.mu)
        query = f"mu[{format_matching(sigma)}]"

        def mu_formula() -> CountTable | None:
            if sigma != CROSSING_PAIR:
                return None
            return CountTable(query, tuple(mu1212_closed(k) for k in range(n + 1)), "mu1212-closed")

        return query, mu_formula, lambda: count_mu(n, sigma)

    if args.avoid_unlabeled is not None:
        u = parse_unlabeled(args.avoid_unlabeled)
        query = f"avoid-unlabeled{format_unlabeled(u)}"

        def unlabeled_formula() -> CountTable | None:
            found = resolve_unlabeled(u)
            return None if found is None else found.table(n, query)

        return query, unlabeled_formula, lambda: count_avoiders_unlabeled(n, u, jobs=jobs, cache=cache)

    if args.avoid is None:
        raise ValueError("Нужен один из флагов --avoid, --avoid-unlabeled или --mu")
    patterns = parse_pattern_set(args.avoid)

    if args.connected:
        query = f"connected-{avoid_query(patterns)}"

        def connected_formula() -> CountTable | None:
            found = resolve_formula(patterns)
            if found is None:
                return None
            counts = series_connected(from_counts(found.counts(n))).integers()
            return CountTable(query, tuple(counts), f"connected({found.name})")

        return query, connected_formula, lambda: count_connected_avoiders(n, patterns)

    query = avoid_query(patterns)
    oracle = lambda: count_avoiders(n, patterns, jobs=jobs, prune=not args.no_prune, cache=cache)  # noqa: E731
    return query, _formula_table(query, n, patterns), oracle


def cmd_count(args: argparse.Namespace, settings: Settings, out: TextIO, err: TextIO) -> int:
    query, formula, oracle = _count_sources(args, settings)

    if args.check:
        if not _within_bound(args.n, settings, err):
            return EXIT_BOUND
        report = compare_tables(query, args.n, formula, oracle)
        write_check(report, args.format, out)
        return EXIT_OK if report.agree else EXIT_CHECK_FAILED

    if args.source == "formula":
        table = formula()
        if table is None:
            err.write(f"Ошибка: для запроса {query} формула неизвестна.\n")
            return EXIT_USAGE
    else:
        if not _within_bound(args.n, settings, err):
            return EXIT_BOUND
        table = oracle()
    write_counts(table_payload(table), args.format, out)
    return EXIT_OK


def _lifting_base(args: argparse.Namespace, N: int) -> PowerSeries:
    if not args.sigma:
        raise ValueError("Ряд lifting требует --sigma")
    sigma = parse_matching(args.sigma)
    found = resolve_formula([sigma, CHI, CHI_BAR])
    if found is None:
        raise ValueError(f"Для класса {format_matching(sigma)} с 123132 и 123213 формула неизвестна")
    return from_counts(found.counts(N))


def _lifted_pattern(args: argparse.Namespace) -> Matching:
    sigma = parse_matching(args.sigma)
    for _ in range(args.depth):
        sigma = lift(sigma)
    return sigma


def _interval_totals(N: int) -> list[int]:
    return [0] + [interval_profile(tau_family(n)).total for n in range(1, N + 1)]


SeriesBuilder = Callable[[int, argparse.Namespace], PowerSeries]
SeriesOracle = Callable[[int, argparse.Namespace, int], list[int]]

SERIES: dict[str, tuple[SeriesBuilder, SeriesOracle]] = {
    "catalan": (
        lambda N, args: catalan_series(N),
        lambda N, args, jobs: list(count_avoiders(N, [CROSSING_PAIR], jobs=jobs).counts),
    ),
    "mu1212": (
        lambda N, args: mu1212_gf(N),
        lambda N, args, jobs: list(count_mu(N, CROSSING_PAIR).counts),
    ),
    "a002054": (
        lambda N, args: a002054_series(N),
        lambda N, args, jobs: list(count_mu(N + 1, CROSSING_PAIR).counts[1:]),
    ),
    "lifting": (
        lambda N, args: gf_lifting_iterated(_lifting_base(args, N), args.depth),
        lambda N, args, jobs: list(
            count_avoiders(N, [_lifted_pattern(args), CHI, CHI_BAR], jobs=jobs).counts
        ),
    ),
    "lifted-1212": (
        lambda N, args: gf_lifted_1212(N).form_a,
        lambda N, args, jobs: list(count_avoiders(N, [LIFTED_1212, CHI, CHI_BAR], jobs=jobs).counts),
    ),
    "lifted-1212-radical": (
        lambda N, args: gf_lifted_1212(N).form_b,
        lambda N, args, jobs: list(count_avoiders(N, [LIFTED_1212, CHI, CHI_BAR], jobs=jobs).counts),
    ),
    "m123132": (
        lambda N, args: gf_123132(N),
        lambda N, args, jobs: list(count_avoiders(N, [CHI], jobs=jobs).counts),
    ),
    "ternary": (
        lambda N, args: ternary_series(N),
        lambda N, args, jobs: list(count_avoiders_unlabeled(N, FORBIDDEN, jobs=jobs).counts),
    ),
    "unlabeled-112323": (
        lambda N, args: gf_unlabeled_112323(N),
        lambda N, args, jobs: list(
            count_avoiders_unlabeled(N, cyclic_class(Matching((1, 1, 2, 3, 2, 3))), jobs=jobs).counts
        ),
    ),
    "connected-nonnesting": (
        lambda N, args: series_connected(catalan_series(N)),
        lambda N, args, jobs: list(count_connected_avoiders(N, [NESTING_PAIR]).counts),
    ),
    "interval-f": (
        lambda N, args: PowerSeries.of(f_gf_table(N).total(n) for n in range(N + 1)),
        lambda N, args, jobs: _interval_totals(N),
    ),
}

# Alternative spellings accepted by `series --name`.
SERIES_ALIASES = {
    "cor37-a": "lifted-1212",
    "cor37-b": "lifted-1212-radical",
    "eq3-mu1212": "mu1212",
    "thm36": "lifting",
    "interval-F": "interval-f",
    "bloom-elizalde": "m123132",
}


def series_name(name: str) -> str:
    return SERIES_ALIASES.get(name, name)


def cmd_series(args: argparse.Namespace, settings: Settings, out: TextIO, err: TextIO) -> int:
    name = series_name(args.name)
    if name not in SERIES:
        err.write(f"Ошибка: неизвестный ряд {args.name!r}. Доступны: {', '.join(sorted(SERIES))}.\n")
        return EXIT_USAGE
    build, oracle = SERIES[name]
    N = args.order
    query = name if name != "lifting" else f"lifting[{args.sigma};depth={args.depth}]"

    if not args.check:
        write_counts(series_payload(query, build(N, args)), args.format, out)
        return EXIT_OK

    if not _within_bound(N + (1 if name == "a002054" else 0), settings, err):
        return EXIT_BOUND
    jobs = _jobs(args, settings)
    report = compare_tables(
        query,
        N,
        lambda: CountTable(query, tuple(build(N, args).integers()), name),
        lambda: CountTable(query, tuple(oracle(N, args, jobs)), "brute-force"),
    )
    write_check(report, args.format, out)
    return EXIT_OK if report.agree else EXIT_CHECK_FAILED


def _operand(value: str | int, fallback: str | int | None, flag: str, operand_flag: str) -> str | int:
    # "--psi 1221" and "--psi --matching 1221" are the same request.
    if value != BARE_FLAG:
        if fallback is not None:
            raise ValueError(f"Значение для {flag} указано дважды")
        return value
    if fallback is None:
        raise ValueError(f"Флаг {flag} требует значения или {operand_flag}")
    return fallback


def cmd_bijection(args: argparse.Namespace, settings: Settings, out: TextIO, err: TextIO) -> int:
    if args.phi is not None:
        tree = _operand(args.phi, args.tree, "--phi", "--tree")
        out.write(format_matching(phi(parse_tree(str(tree)))) + "\n")
        return EXIT_OK
    if args.psi is not None:
        matching = _operand(args.psi, args.matching, "--psi", "--matching")
        out.write(format_tree(psi(parse_matching(str(matching)))) + "\n")
        return EXIT_OK
    if args.perm is not None:
        out.write(format_matching(perm_to_matching(parse_permutation(args.perm))) + "\n")
        return EXIT_OK
    if args.roundtrip is None:
        raise ValueError("Нужен один из флагов --phi, --psi, --perm или --roundtrip")

    n = int(_operand(args.roundtrip, args.order, "--roundtrip", "--order"))
    if not _within_bound(n, settings, err):
        return EXIT_BOUND
    cases = 0
    failures: list[str] = []
    images: set[Matching] = set()
    for tree in enumerate_ternary_trees(n):
        cases += 1
        m = phi(tree)
        images.add(m)
        if not avoids_unlabeled(m, FORBIDDEN) or psi(m) != tree:
            failures.append(format_tree(tree))
    if len(images) != cases:
        failures.append(f"{cases - len(images)} совпадающих образов")
    if failures:
        out.write(f"FAIL {len(failures)} of {cases} cases: {failures[0]}\n")
        return EXIT_CHECK_FAILED
    out.write(f"OK {cases} cases\n")
    return EXIT_OK


def _fill(values: tuple[int, ...], size: int) -> list[int]:
    return [values[i] if i < len(values) else 0 for i in range(size)]


def cmd_interval(args: argparse.Namespace, settings: Settings, out: TextIO, err: TextIO) -> int:
    expected: dict[str, int | list[int]] = {}
    if args.tau is not None:
        tau = parse_matching(args.tau)
    elif args.ks is not None:
        k, r, s = parse_int_tuple(args.ks, 3)
        tau = build_ks(k, r, s)
        expected["total"] = formula_ks(k, max(r, s), min(r, s))
    elif args.khabc is not None:
        k, h, a, b, c = parse_int_tuple(args.khabc, 5)
        tau = build_khabc(k, h, a, b, c)
        chi = formula_khabc(k, h, a, b, c)
        expected["total"] = chi.total
        expected["by_small_edges"] = [0, chi.chi1, chi.chi2, chi.chi3]
    elif args.family is not None:
        n = args.family
        tau = tau_family(n)
        table = f_table(n)
        expected["total"] = table.total(n)
        expected["by_edges"] = list(table[n][1:])
        expected["fibonacci"] = fibonacci(n + 2) - 1
    else:
        raise ValueError("Нужен один из флагов --tau, --ks, --khabc или --family")

    if not _within_bound(tau.order, settings, err):
        return EXIT_BOUND
    profile = interval_profile(tau)
    payload = profile_payload(profile)
    observed: dict[str, int | list[int]] = {
        "total": profile.total,
        "by_edges": list(profile.by_edges),
        "by_small_edges": _fill(profile.by_small_edges, 4),
        "fibonacci": profile.total,
    }
    mismatched = sorted(key for key, value in expected.items() if observed[key] != value)
    payload["formula"] = {key: (str(v) if isinstance(v, int) else [str(x) for x in v]) for key, v in expected.items()}
    if args.check:
        payload["agree"] = not mismatched
        payload["mismatches"] = mismatched
        if mismatched:
            LOGGER.warning("Interval below %s: formula disagrees on %s", format_matching(tau), mismatched)
    write_json(payload, out)
    return EXIT_CHECK_FAILED if args.check and mismatched else EXIT_OK


def cmd_render(args: argparse.Namespace, settings: Settings, out: TextIO, err: TextIO) -> int:
    if args.unlabeled is not None:
        m = parse_unlabeled(args.unlabeled).representative
        labels = False
    elif args.matching is not None:
        m = parse_matching(args.matching)
        labels = True
    else:
        raise ValueError("Нужен флаг --matching или --unlabeled")
    svg = render_svg(m, args.style, labels=labels)
    if args.output:
        path = Path(args.output)
        path.write_text(svg, encoding="utf-8")
        LOGGER.info("Diagram written to %s", path)
    else:
        out.write(svg)
    return EXIT_OK
