from __future__ import annotations

import json
import logging
from pathlib import Path

LOGGER = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class CountCache:
    """Advisory JSON store of brute-force counts keyed by canonical query string."""

    def __init__(self, path: Path) -> None:
        self.path = path
        self._entries: dict[str, list[int]] | None = None

    def _load(self) -> dict[str, list[int]]:
        if self._entries is not None:
            return self._entries
        entries: dict[str, list[int]] = {}
        if self.path.exists():
            try:
                data = json.loads(self.path.read_text(encoding="utf-8"))
                if data.get("v") != SCHEMA_VERSION:
                    LOGGER.warning("Count cache %s has schema %r, ignoring it", self.path, data.get("v"))
                else:
                    for query, counts in data.get("entries", {}).items():
                        entries[query] = [int(c) for c in counts]
            except Exception as exc:
                LOGGER.warning("Count cache unreadable: %s (%s)", self.path, exc)
                entries = {}
        self._entries = entries
        return entries

    def _save(self) -> None:
        payload = {
            "v": SCHEMA_VERSION,
            "entries": {q: [str(c) for c in counts] for q, counts in sorted(self._load().items())},
        }
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.write_text(json.dumps(payload, indent=1), encoding="utf-8")
        except OSError as exc:
            LOGGER.warning("Count cache write failed: %s (%s)", self.path, exc)

    def get(self, query: str, n_max: int) -> list[int] | None:
        counts = self._load().get(query)
        if counts is None or len(counts) <= n_max:
            LOGGER.debug("Cache miss: %s up to %d", query, n_max)
            return None
        LOGGER.debug("Cache hit: %s up to %d", query, n_max)
        return counts[: n_max + 1]

    def put(self, query: str, counts: list[int]) -> None:
        entries = self._load()
        known = entries.get(query)
        if known is not None and len(known) >= len(counts):
            return
        entries[query] = list(counts)
        self._save()
