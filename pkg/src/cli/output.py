from __future__ import annotations

import csv
import json
from fractions import Fraction
from typing import Any, TextIO

from ..crosscheck import CheckReport
from ..matchings.enumerator import CountTable
from ..matchings.intervals import IntervalProfile
from ..matchings.notation import format_matching
from ..matchings.power_series import PowerSeries

FORMATS = ("json", "csv")


def _number(value: int | Fraction) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def table_payload(table: CountTable) -> dict[str, Any]:
    return {"query": table.label, "source": table.source, "counts": [str(c) for c in table.counts]}


def series_payload(name: str, series: PowerSeries) -> dict[str, Any]:
    return {"query": name, "source": "series", "counts": [_number(c) for c in series.coeffs]}


def check_payload(report: CheckReport) -> dict[str, Any]:
    return {
        "query": report.query,
        "agree": report.agree,
        "mismatches": report.mismatches,
        "formula": None if report.formula is None else table_payload(report.formula),
        "oracle": None if report.oracle is None else table_payload(report.oracle),
        "unavailable": report.unavailable,
    }


def profile_payload(profile: IntervalProfile) -> dict[str, Any]:
    return {
        "tau": format_matching(profile.tau),
        "by_edges": [str(c) for c in profile.by_edges],
        "by_small_edges": [str(c) for c in profile.by_small_edges],
        "total": str(profile.total),
    }


def write_json(payload: dict[str, Any], out: TextIO) -> None:
    out.write(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    out.write("\n")


def write_counts(payload: dict[str, Any], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        write_json(payload, out)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "count"])
    for n, value in enumerate(payload["counts"]):
        writer.writerow([n, value])


def write_check(report: CheckReport, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        write_json(check_payload(report), out)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "formula", "oracle", "agree"])
    for n in range(report.n_max + 1):
        formula = "" if report.formula is None else str(report.formula[n])
        oracle = "" if report.oracle is None else str(report.oracle[n])
        writer.writerow([n, formula, oracle, "" if not report.compared else n not in report.mismatches])
