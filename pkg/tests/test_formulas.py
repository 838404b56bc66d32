import pytest

from src.matchings.enumerator import CountTable, count_avoiders, count_mu
from src.matchings.formulas import (
    CHI,
    CHI_BAR,
    a002054_series,
    catalan,
    catalan_series,
    composition_identity_check,
    juxtaposition_count,
    juxtaposition_table,
    gf_123132,
    gf_lifted_1212,
    gf_lifting,
    gf_lifting_iterated,
    gf_unlabeled_112323,
    small_edge_prefix_count,
    m123123_count,
    mgf_aux_series,
    mu1212_closed,
    mu1212_gf,
    mu1212_recursive,
    resolve_formula,
    resolve_unlabeled,
    series_connected,
    ternary_series,
    pair_prefix_count,
    unlabeled_closed_counts,
)
from src.matchings.matching import Matching, canonicalize, juxtapose, lift
from src.matchings.patterns import cyclic_class
from src.matchings.power_series import constant, from_counts, z
from src.reference import (
    NONCROSSING_PREFIX_PATTERNS,
    NONCROSSING_PREFIX_TABLE,
    PRINTED_UNLABELED_112323,
    UNLABELED_112323_FROM_N2,
)


def m(text: str) -> Matching:
    return canonicalize(int(ch) for ch in text)


CATALAN = [catalan(n) for n in range(12)]
CROSSING_TRIPLE = [m123123_count(n) for n in range(12)]


def test_catalan_numbers() -> None:
    assert CATALAN[:7] == [1, 1, 2, 5, 14, 42, 132]
    with pytest.raises(ValueError):
        catalan(-1)


def test_catalan_identity_behind_the_sum() -> None:
    c = catalan_series(12)
    zz = z(12)
    assert zz * c**3 * (1 - zz * c) == c - 1


def test_juxtaposition_sum_for_noncrossing_prefix() -> None:
    table = CountTable("catalan", tuple(CATALAN[:7]), "test")
    mu = count_mu(6, m("1212"))
    assert juxtaposition_table(6, 2, mu, table, table) == [1, 1, 3, 15, 104, 910, 9503]
    assert juxtaposition_count(4, 2, mu, table, table) == 104
    with pytest.raises(ValueError):
        juxtaposition_count(1, 2, mu, table, table)


def test_small_edge_prefix_sum() -> None:
    only_empty = [1, 0, 0, 0, 0]
    assert [small_edge_prefix_count(n, only_empty) for n in range(5)] == [1, 1, 2, 6, 24]
    # 11 followed by 1122 is 112233; M(1122) is counted by n!.
    factorial_counts = [1, 1, 2, 6, 24, 120]
    brute = count_avoiders(5, [m("112233")]).counts
    assert [small_edge_prefix_count(n, factorial_counts) for n in range(6)] == list(brute)


def test_minimal_containment_of_crossing_pair_three_ways() -> None:
    recursive = mu1212_recursive(20).counts
    closed = [mu1212_closed(n) for n in range(21)]
    assert list(recursive) == closed
    assert mu1212_gf(20).integers() == closed
    assert closed[2:6] == [1, 5, 21, 84]


def test_central_binomial_relative() -> None:
    assert a002054_series(10).integers() == [mu1212_closed(n + 1) for n in range(11)]


def test_composition_identity() -> None:
    for n in range(2, 9):
        check = composition_identity_check(n)
        assert check.equal, (n, check.lhs, check.rhs)
    with pytest.raises(ValueError):
        composition_identity_check(1)


def test_pair_prefix_sum_matches_printed_table() -> None:
    for n, (with_catalan, with_triple) in NONCROSSING_PREFIX_TABLE.items():
        assert pair_prefix_count(n, CATALAN) == with_catalan
        assert pair_prefix_count(n, CROSSING_TRIPLE) == with_triple


def test_crossing_triple_counts() -> None:
    assert CROSSING_TRIPLE[:5] == [1, 1, 3, 14, 84]
    assert list(count_avoiders(5, [m("123123")]).counts) == CROSSING_TRIPLE[:6]


def test_lifting_series() -> None:
    assert gf_lifting(constant(1, 8)) == catalan_series(8)
    lifted = gf_lifting(catalan_series(8)).integers()
    assert lifted[:4] == [1, 1, 3, 12]
    assert list(count_avoiders(5, [m("123231"), CHI, CHI_BAR]).counts) == lifted[:6]
    assert gf_lifting_iterated(constant(1, 8), 2) == gf_lifting(catalan_series(8))
    with pytest.raises(ValueError):
        gf_lifting(catalan_series(4) - 1)
    with pytest.raises(ValueError):
        gf_lifting_iterated(catalan_series(4), -1)


def test_two_forms_of_the_lifted_crossing_class_agree() -> None:
    forms = gf_lifted_1212(20)
    assert forms.form_a == forms.form_b
    assert forms.form_a.integers()[:4] == [1, 1, 3, 12]


def test_class_of_123132() -> None:
    series = gf_123132(8).integers()
    assert series[:4] == [1, 1, 3, 14]
    assert list(count_avoiders(6, [CHI]).counts) == series[:7]
    assert list(count_avoiders(6, [CHI_BAR]).counts) == series[:7]


def test_unlabeled_closed_forms() -> None:
    gf = gf_unlabeled_112323(12).integers()
    assert gf == [unlabeled_closed_counts("112323", n) for n in range(13)]
    assert tuple(gf[2:7]) == UNLABELED_112323_FROM_N2
    ternary = [unlabeled_closed_counts("123132", n) for n in range(10)]
    assert ternary[:6] == [1, 1, 3, 12, 55, 273]
    assert ternary_series(9).integers() == ternary
    with pytest.raises(ValueError):
        unlabeled_closed_counts("123321", 3)


def test_auxiliary_series() -> None:
    assert mgf_aux_series("1212", 5) == catalan_series(5)
    assert mgf_aux_series("1122", 3).integers() == [1, 1, 1, 1]
    with pytest.raises(ValueError):
        mgf_aux_series("1221", 3)


def test_connected_part() -> None:
    assert series_connected(catalan_series(6)).integers() == [0, 1, 1, 2, 5, 14, 42]


def test_resolve_single_patterns() -> None:
    assert resolve_formula([m("1221")]).name == "catalan"
    assert resolve_formula([m("1122")]).name == "factorial"
    assert resolve_formula([m("12123434")]).counts(6)[4:] == [104, 910, 9503]
    assert resolve_formula([m("1212345345")]).counts(5)[5] == 944
    assert resolve_formula([m("123231")]) is None


def test_resolve_uses_reversal() -> None:
    pattern = m("12321344")
    found = resolve_formula([pattern])
    assert found is not None
    assert found.name == "prefix11(m123132-gf)"
    assert found.counts(5) == list(count_avoiders(5, [pattern]).counts)


def test_resolve_reduces_the_basis_first() -> None:
    redundant = [m("1212"), m("123231"), m("123132"), m("123213")]
    assert resolve_formula(redundant).name == "catalan"
    lifted = resolve_formula([m("123231"), m("123132"), m("123213")])
    assert lifted is not None
    assert lifted.counts(3) == [1, 1, 3, 12]


def test_resolve_lifting_of_a_deeper_core() -> None:
    sigma = m("12343421")
    found = resolve_formula([sigma, CHI, CHI_BAR])
    assert found is not None
    assert found.counts(5) == list(count_avoiders(5, [sigma, CHI, CHI_BAR]).counts)


def test_resolve_unlabeled() -> None:
    table = resolve_unlabeled(cyclic_class(m("112323"))).table(6, "u")
    assert table.counts[2:] == UNLABELED_112323_FROM_N2
    assert resolve_unlabeled(cyclic_class(m("123132"))).counts(4) == [1, 1, 3, 12, 55]
    with pytest.raises(ValueError):
        resolve_formula([])


def test_registry_reproduces_printed_table() -> None:
    formulas = [resolve_formula([m(p)]) for p in NONCROSSING_PREFIX_PATTERNS]
    columns = [f.counts(10) for f in formulas]
    for n, printed in NONCROSSING_PREFIX_TABLE.items():
        assert (columns[0][n], columns[1][n]) == printed


def test_printed_unlabeled_sequence_has_an_extra_leading_one() -> None:
    assert PRINTED_UNLABELED_112323[3:] == UNLABELED_112323_FROM_N2
    assert PRINTED_UNLABELED_112323[2] != unlabeled_closed_counts("112323", 2)


def test_juxtaposition_sum_against_brute_force() -> None:
    for sigma in (m("11"), m("1212")):
        mu = count_mu(6, sigma)
        m_sigma = count_avoiders(6, [sigma])
        for tau in (m("11"), m("1212"), m("1221"), m("1122")):
            m_tau = count_avoiders(6, [tau])
            brute = count_avoiders(6, [juxtapose(sigma, tau)]).counts
            expected = juxtaposition_table(6, sigma.order, mu, m_sigma, m_tau)
            assert expected == list(brute), (sigma, tau)


@pytest.mark.slow
def test_lifted_crossing_class_order_seven() -> None:
    forms = gf_lifted_1212(7)
    brute = count_avoiders(7, [m("123231"), CHI, CHI_BAR], jobs=2).counts
    assert forms.form_a.integers() == list(brute)
    assert forms.form_b.integers() == list(brute)


def test_lifting_from_brute_forced_series() -> None:
    sigma = m("123123")
    base = count_avoiders(6, [sigma, CHI, CHI_BAR]).counts
    lifted = gf_lifting(from_counts(base)).integers()
    brute = count_avoiders(6, [lift(sigma), CHI, CHI_BAR]).counts
    assert lift(sigma) == m("12342341")
    assert lifted == list(brute)
