from src.crosscheck import compare_tables, crosscheck, crosscheck_unlabeled
from src.matchings.enumerator import CountTable
from src.matchings.matching import Matching, canonicalize
from src.matchings.patterns import cyclic_class


def m(text: str) -> Matching:
    return canonicalize(int(ch) for ch in text)


def test_known_formula_agrees_with_brute_force() -> None:
    report = crosscheck([m("12123434")], 6)
    assert report.agree
    assert report.formula.source == "pair-prefix(catalan)"
    assert report.oracle.counts[6] == 9503


def test_lifted_class_agrees() -> None:
    report = crosscheck([m("123231"), m("123132"), m("123213")], 5)
    assert report.agree
    assert report.formula.counts[:4] == (1, 1, 3, 12)


def test_unknown_formula_is_reported_not_raised() -> None:
    report = crosscheck([m("123231")], 4)
    assert not report.compared
    assert not report.agree
    assert report.oracle is not None
    assert report.unavailable == ["formula: no closed form known for this query"]


def test_unlabeled_crosscheck() -> None:
    report = crosscheck_unlabeled(cyclic_class(m("112323")), 6)
    assert report.agree
    assert report.query == "avoid-unlabeled[1,1,2,3,2,3]"


def test_mismatch_positions() -> None:
    right = CountTable("q", (1, 1, 2, 5), "oracle")
    wrong = CountTable("q", (1, 1, 2, 6), "formula")
    report = compare_tables("q", 3, lambda: wrong, lambda: right)
    assert report.compared
    assert report.mismatches == [3]
    assert not report.agree


def test_failing_oracle_is_isolated() -> None:
    def broken() -> CountTable:
        raise RuntimeError("worker died")

    table = CountTable("q", (1, 1), "formula")
    report = compare_tables("q", 1, lambda: table, broken)
    assert report.formula == table
    assert report.oracle is None
    assert report.unavailable == ["oracle: worker died"]
