from pathlib import Path

import pytest

from src.config import DEFAULT_MAX_ORDER, get_settings


def test_settings_from_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("MATCHKIT_CACHE", str(tmp_path / "counts.json"))
    monkeypatch.setenv("MATCHKIT_JOBS", "3")
    monkeypatch.setenv("MATCHKIT_MAX_ORDER", "12")
    monkeypatch.setenv("MATCHKIT_LOG_LEVEL", "info")
    settings = get_settings()
    assert settings.cache_path == tmp_path / "counts.json"
    assert settings.jobs == 3
    assert settings.max_order == 12
    assert settings.log_level == "INFO"


def test_settings_fall_back_on_bad_values(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MATCHKIT_CACHE", "  ")
    monkeypatch.setenv("MATCHKIT_JOBS", "-2")
    monkeypatch.setenv("MATCHKIT_MAX_ORDER", "ten")
    monkeypatch.setenv("MATCHKIT_LOG_LEVEL", "LOUD")
    settings = get_settings()
    assert settings.cache_path is None
    assert settings.jobs >= 1
    assert settings.max_order == DEFAULT_MAX_ORDER
    assert settings.log_level == "WARNING"
