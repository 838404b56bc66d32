import json

import pytest

from src.main import main


@pytest.fixture(autouse=True)
def _env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MATCHKIT_JOBS", "1")
    monkeypatch.setenv("MATCHKIT_CACHE", "")
    monkeypatch.setenv("MATCHKIT_MAX_ORDER", "8")


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def payload(out: str) -> dict:
    return json.loads(out)


def test_count_noncrossing(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "count", "--avoid", "1212", "--n", "5")
    assert code == 0
    data = payload(out)
    assert data["counts"] == ["1", "1", "2", "5", "14", "42"]
    assert data["source"] == "brute-force"


def test_count_from_formula(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "count", "--avoid", "12123434", "--n", "12", "--source", "formula")
    assert code == 0
    counts = payload(out)["counts"]
    assert counts[10] == "379308106"
    assert payload(out)["source"] == "pair-prefix(catalan)"


def test_count_csv(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "count", "--avoid", "1122", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == "n,count\n0,1\n1,1\n2,2\n3,6\n"


def test_count_checks(capsys: pytest.CaptureFixture[str]) -> None:
    for argv in (
        ("--avoid", "123231,123132,123213", "--n", "5"),
        ("--avoid-unlabeled", "[112323]", "--n", "6"),
        ("--mu", "1212", "--n", "5"),
        ("--avoid", "1221", "--connected", "--n", "6"),
    ):
        code, out, _ = run(capsys, "count", *argv, "--check")
        assert code == 0, argv
        assert payload(out)["agree"] is True


def test_count_check_without_formula(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "count", "--avoid", "123231", "--n", "4", "--check")
    assert code == 1
    data = payload(out)
    assert data["formula"] is None
    assert data["oracle"]["counts"][3] == "14"


def test_count_unknown_formula(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "count", "--avoid", "123231", "--n", "3", "--source", "formula")
    assert code == 2
    assert "123231" in err or "1,2,3,2,3,1" in err


def test_count_bound(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, err = run(capsys, "count", "--avoid", "1212", "--n", "9")
    assert code == 3
    assert out == ""
    assert "MATCHKIT_MAX_ORDER" in err


def test_count_bad_pattern(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "count", "--avoid", "12a1", "--n", "3")
    assert code == 2
    assert err.startswith("Ошибка")


def test_series_values(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "series", "--name", "catalan", "--order", "5")
    assert code == 0
    assert payload(out)["counts"] == ["1", "1", "2", "5", "14", "42"]

    _, plain, _ = run(capsys, "series", "--name", "lifted-1212", "--order", "10")
    _, radical, _ = run(capsys, "series", "--name", "lifted-1212-radical", "--order", "10")
    assert payload(plain)["counts"] == payload(radical)["counts"]


def test_series_checks(capsys: pytest.CaptureFixture[str]) -> None:
    for argv in (
        ("--name", "mu1212", "--order", "5"),
        ("--name", "a002054", "--order", "5"),
        ("--name", "ternary", "--order", "6"),
        ("--name", "m123132", "--order", "6"),
        ("--name", "unlabeled-112323", "--order", "6"),
        ("--name", "connected-nonnesting", "--order", "6"),
        ("--name", "interval-f", "--order", "7"),
        ("--name", "lifting", "--sigma", "1212", "--depth", "2", "--order", "5"),
    ):
        code, out, _ = run(capsys, "series", *argv, "--check")
        assert code == 0, argv
        assert payload(out)["agree"] is True


def test_series_lifting_needs_sigma(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "series", "--name", "lifting", "--order", "4")
    assert code == 2
    assert "--sigma" in err


def test_bijection_commands(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "bijection", "--phi", "((. . .) . .)")[1] == "1,2,1,2\n"
    assert run(capsys, "bijection", "--psi", "1221")[1] == "(. (. . .) .)\n"
    assert run(capsys, "bijection", "--perm", "312")[1] == "1,2,3,3,1,2\n"
    code, out, _ = run(capsys, "bijection", "--roundtrip", "4")
    assert code == 0
    assert out == "OK 55 cases\n"


def test_bijection_rejects_forbidden(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "bijection", "--psi", "123132")
    assert code == 2
    assert "unlabeled pattern" in err


def test_interval_family(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "interval", "--family", "6", "--check")
    assert code == 0
    data = payload(out)
    assert data["total"] == "20"
    assert data["agree"] is True
    assert data["formula"]["fibonacci"] == "20"


def test_interval_shapes(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "interval", "--khabc", "0,1,1,1,1", "--check")
    assert code == 0
    assert payload(out)["by_small_edges"] == ["0", "2", "3", "2"]

    code, out, _ = run(capsys, "interval", "--ks", "1,1,2", "--check")
    assert code == 0
    assert payload(out)["formula"]["total"] == "7"

    code, out, _ = run(capsys, "interval", "--tau", "1221")
    assert code == 0
    assert payload(out)["total"] == "2"
    assert "agree" not in payload(out)


def test_render_to_file(capsys: pytest.CaptureFixture[str], tmp_path) -> None:
    target = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "render", "--matching", "12342341", "--style", "circular", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").count('class="edge"') == 4


def test_render_unlabeled(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "render", "--unlabeled", "[123132]")
    assert code == 0
    assert "<text" not in out


def test_count_single_comma_pattern(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "count", "--avoid", "1,2,1,2", "--n", "4")
    assert code == 0
    data = payload(out)
    assert data["query"] == "avoid[1,2,1,2]"
    assert data["counts"] == ["1", "1", "2", "5", "14"]


def test_connected_only_with_avoid(capsys: pytest.CaptureFixture[str]) -> None:
    for argv in (("--mu", "1212"), ("--avoid-unlabeled", "[112323]")):
        code, out, err = run(capsys, "count", *argv, "--connected", "--n", "4")
        assert code == 2, argv
        assert out == ""
        assert "--connected" in err


def test_check_ignores_the_cache(
    capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch, tmp_path
) -> None:
    poisoned = tmp_path / "counts.json"
    poisoned.write_text('{"v": 1, "entries": {"avoid[1,2,1,2]": ["1", "1", "7", "7", "7"]}}', encoding="utf-8")
    monkeypatch.setenv("MATCHKIT_CACHE", str(poisoned))

    code, out, _ = run(capsys, "count", "--avoid", "1212", "--n", "4")
    assert code == 0
    assert payload(out)["counts"][2] == "7"

    code, out, _ = run(capsys, "count", "--avoid", "1212", "--n", "4", "--check")
    assert code == 0
    assert payload(out)["agree"] is True
    assert payload(out)["oracle"]["counts"][2] == "2"

    code, out, _ = run(capsys, "series", "--name", "catalan", "--order", "4", "--check")
    assert code == 0
    assert payload(out)["agree"] is True


def test_series_aliases(capsys: pytest.CaptureFixture[str]) -> None:
    for alias, name in (
        ("cor37-a", "lifted-1212"),
        ("cor37-b", "lifted-1212-radical"),
        ("eq3-mu1212", "mu1212"),
        ("interval-F", "interval-f"),
        ("bloom-elizalde", "m123132"),
    ):
        _, long_form, _ = run(capsys, "series", "--name", alias, "--order", "8")
        _, short_form, _ = run(capsys, "series", "--name", name, "--order", "8")
        assert payload(long_form) == payload(short_form), alias

    code, out, _ = run(capsys, "series", "--name", "thm36", "--sigma", "1212", "--order", "5", "--check")
    assert code == 0
    assert payload(out)["query"] == "lifting[1212;depth=1]"

    _, out, _ = run(capsys, "series", "--name", "eq3-mu1212", "--order", "6")
    assert payload(out)["counts"] == ["0", "0", "1", "5", "21", "84", "330"]


def test_bijection_operand_flags(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "bijection", "--psi", "--matching", "1221")[1] == "(. (. . .) .)\n"
    assert run(capsys, "bijection", "--phi", "--tree", "((. . .) . .)")[1] == "1,2,1,2\n"
    assert run(capsys, "bijection", "--phi", "--tree", ".")[1] == "\n"
    assert run(capsys, "bijection", "--psi", "--matching", "1212")[1] == "((. . .) . .)\n"
    assert run(capsys, "bijection", "--roundtrip", "--order", "4")[1] == "OK 55 cases\n"
    assert run(capsys, "bijection", "--roundtrip", "--order", "5")[1] == "OK 273 cases\n"


def test_bijection_operand_errors(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "bijection", "--psi")
    assert code == 2
    assert "--matching" in err
    code, _, _ = run(capsys, "bijection", "--psi", "1221", "--matching", "1212")
    assert code == 2
