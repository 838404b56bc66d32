from __future__ import annotations

from .matching import EMPTY, Matching, canonicalize
from .patterns import UnlabeledMatching, cyclic_class

EMPTY_TOKENS = {"", "-", "()", "∅"}
LIST_SEPARATOR = ";"


def parse_matching(raw: str) -> Matching:
    text = "".join(ch for ch in raw.strip() if not ch.isspace())
    if text in EMPTY_TOKENS:
        return EMPTY
    if "," in text:
        tokens = [t for t in text.split(",") if t]
    else:
        tokens = list(text)
    if not all(t.isdigit() for t in tokens):
        raise ValueError(f"Not a matching: {raw!r}")
    values = [int(t) for t in tokens]
    if any(v <= 0 for v in values):
        raise ValueError(f"Matching values must be positive: {raw!r}")
    return canonicalize(values)


def parse_unlabeled(raw: str) -> UnlabeledMatching:
    text = raw.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"Unlabeled pattern must be written in brackets: {raw!r}")
    return cyclic_class(parse_matching(text[1:-1]))


def _compact_items(items: list[str]) -> frozenset[Matching] | None:
    try:
        return frozenset(parse_matching(item) for item in items if item.strip())
    except ValueError:
        return None


def parse_pattern_set(raw: str) -> frozenset[Matching]:
    # "1212,123132" lists compact patterns; "1,2,1,2" is one pattern in comma form;
    # ";" separates patterns once they use commas.
    text = raw.strip()
    if not text:
        raise ValueError("Empty pattern list")
    if LIST_SEPARATOR in text:
        patterns = frozenset(parse_matching(item) for item in text.split(LIST_SEPARATOR) if item.strip())
    else:
        found = _compact_items(text.split(","))
        patterns = found if found is not None else frozenset({parse_matching(text)})
    if not patterns:
        raise ValueError(f"Empty pattern list: {raw!r}")
    return patterns


def parse_int_tuple(raw: str, size: int) -> tuple[int, ...]:
    parts = [p.strip() for p in raw.split(",")]
    if len(parts) != size or not all(p.lstrip("-").isdigit() for p in parts):
        raise ValueError(f"Expected {size} comma-separated integers, got {raw!r}")
    return tuple(int(p) for p in parts)


def parse_permutation(raw: str) -> tuple[int, ...]:
    text = "".join(ch for ch in raw.strip() if not ch.isspace())
    tokens = text.split(",") if "," in text else list(text)
    if not tokens or not all(t.isdigit() for t in tokens):
        raise ValueError(f"Not a permutation: {raw!r}")
    return tuple(int(t) for t in tokens)


def format_matching(m: Matching) -> str:
    return str(m)


def format_unlabeled(u: UnlabeledMatching) -> str:
    return f"[{format_matching(u.representative)}]"


def format_pattern_set(patterns: frozenset[Matching] | set[Matching]) -> str:
    return LIST_SEPARATOR.join(format_matching(p) for p in sorted(patterns))
