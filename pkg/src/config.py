from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
import logging
import os

from dotenv import load_dotenv

DEFAULT_MAX_ORDER = 10
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class Settings:
    cache_path: Path | None
    jobs: int
    max_order: int
    log_level: str


def _load_env() -> None:
    root = Path(__file__).resolve().parents[1]
    load_dotenv(root / ".env")


def _parse_positive(raw: str, default: int) -> int:
    value = raw.strip()
    if value.isdigit() and int(value) > 0:
        return int(value)
    return default


def get_settings() -> Settings:
    _load_env()
    cache_raw = os.getenv("MATCHKIT_CACHE", "").strip()
    jobs = _parse_positive(os.getenv("MATCHKIT_JOBS", ""), os.cpu_count() or 1)
    max_order = _parse_positive(os.getenv("MATCHKIT_MAX_ORDER", ""), DEFAULT_MAX_ORDER)
    log_level = os.getenv("MATCHKIT_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if not isinstance(logging.getLevelName(log_level), int):
        log_level = DEFAULT_LOG_LEVEL
    return Settings(
        cache_path=Path(cache_raw) if cache_raw else None,
        jobs=jobs,
        max_order=max_order,
        log_level=log_level,
    )
