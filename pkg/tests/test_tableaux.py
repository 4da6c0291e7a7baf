"""Two-column tableaux, the maximal-orbit map, and exchange partner rules."""

import pytest

from orbitposet import (
    ColumnPairArray,
    InvalidTableau,
    Involution,
    NotInColumn,
    OutOfRange,
    ParseError,
    TwoColumnTableau,
    all_involutions,
    change,
    change_candidates_high,
    change_candidates_low,
    change_rule_partners,
    codim1_partners,
    dimension,
    enumerate_tableaux,
    hook_length_count,
    row_of,
    sigma_T,
    sigma_pairs_by_b,
    tableau_of,
)

EXAMPLE = TwoColumnTableau((1, 2, 3, 6), (4, 5, 7, 8))


def inv(text, n):
    return Involution.parse(text, n)


def test_parse_and_format():
    assert TwoColumnTableau.parse("1,2,3,6|4,5,7,8") == EXAMPLE
    assert str(EXAMPLE) == "1,2,3,6|4,5,7,8"
    single = TwoColumnTableau.parse("1,2,3")
    assert single.k == 0 and single.n == 3
    assert str(single) == "1,2,3"
    with pytest.raises(ParseError):
        TwoColumnTableau.parse("1,2|3|4")
    with pytest.raises(ParseError):
        TwoColumnTableau.parse("a,b")


def test_validation():
    with pytest.raises(InvalidTableau):
        TwoColumnTableau((1, 4), (2, 3))  # row 2 decreases
    with pytest.raises(InvalidTableau):
        TwoColumnTableau((2,), (1,))  # 1 must sit in the first column
    with pytest.raises(InvalidTableau):
        TwoColumnTableau((1,), (2, 3))  # second column longer
    with pytest.raises(InvalidTableau):
        TwoColumnTableau((1, 2), (2, 4))  # not a partition of 1..n


def test_sigma_T_worked_example():
    assert sigma_pairs_by_b(EXAMPLE) == ((3, 4), (2, 5), (6, 7), (1, 8))
    assert sigma_T(EXAMPLE) == inv("(1,8)(2,5)(3,4)(6,7)", 8)
    assert dimension(sigma_T(EXAMPLE)) == 16


def test_sigma_T_trivia():
    assert sigma_T(TwoColumnTableau.parse("1,2,3")) == Involution.identity(3)
    assert sigma_T(TwoColumnTableau((1, 3), (2, 4))) == inv("(1,2)(3,4)", 4)


def test_tableau_of_roundtrip():
    assert tableau_of(inv("(1,8)(2,5)(3,4)(6,7)", 8)) == EXAMPLE
    assert tableau_of(inv("(1,4)(2,5)", 5)) is None  # dimension 3, not 6
    assert tableau_of(Involution.identity(3)) == TwoColumnTableau.parse("1,2,3")


def test_bijection_small():
    for n in range(1, 8):
        for k in range(n // 2 + 1):
            tabs = list(enumerate_tableaux(n, k))
            images = {sigma_T(t): t for t in tabs}
            assert len(images) == len(tabs)
            maximal = {e for e in all_involutions(n, k) if dimension(e) == k * (n - k)}
            assert set(images) == maximal
            for sig, tab in images.items():
                assert tableau_of(sig) == tab


def test_tableau_counts_match_hook_lengths():
    assert hook_length_count(6, 3) == 5
    for n in range(1, 9):
        for k in range(n // 2 + 1):
            assert len(list(enumerate_tableaux(n, k))) == hook_length_count(n, k)


def test_pair_gaps_are_odd():
    for n in range(1, 9):
        for k in range(n // 2 + 1):
            for tab in enumerate_tableaux(n, k):
                assert all((b - a) % 2 == 1 for a, b in sigma_T(tab).pairs)


def test_row_of():
    assert row_of(EXAMPLE, 6) == 4
    assert row_of(EXAMPLE, 4) == 1
    assert row_of(EXAMPLE, 1) == 1
    with pytest.raises(OutOfRange):
        row_of(EXAMPLE, 9)


def test_change_examples():
    arr = change(EXAMPLE, 3, 4)
    assert arr == ColumnPairArray((1, 2, 4, 6), (3, 5, 7, 8))
    assert arr.is_tableau()
    bad = change(EXAMPLE, 1, 8)
    assert not bad.is_tableau()
    with pytest.raises(InvalidTableau):
        bad.to_tableau()
    # applying the same swap twice restores the tableau
    again = change(arr.to_tableau(), 4, 3)
    assert again.to_tableau() == EXAMPLE
    with pytest.raises(NotInColumn):
        change(EXAMPLE, 4, 5)
    with pytest.raises(NotInColumn):
        change(EXAMPLE, 1, 2)


def test_change_candidates_low():
    # b-ordered pairs (3,4)(2,5)(6,7)(1,8): thresholds 2,4,6,8
    assert change_candidates_low(EXAMPLE) == [(3, 4), (2, 5), (6, 7)]
    assert change_candidates_low(TwoColumnTableau((1, 3), (2, 4))) == []


def test_change_candidates_low_odd_second_entry_always_qualifies():
    for n in range(2, 8):
        for k in range(1, n // 2 + 1):
            for tab in enumerate_tableaux(n, k):
                low = dict(
                    (b, i) for i, b in change_candidates_low(tab)
                )
                for i, b in sigma_pairs_by_b(tab):
                    if b % 2 == 1:
                        assert b in low


def test_change_candidates_high():
    assert change_candidates_high(TwoColumnTableau((1, 3), (2, 4))) == [(3, (2,))]
    assert change_candidates_high(EXAMPLE) == [(6, (5,))]
    # entries a with a-1 in the first column contribute nothing
    for a, _ in change_candidates_high(EXAMPLE):
        assert a - 1 in EXAMPLE.col2


def test_change_candidates_high_interval_rule():
    tab = TwoColumnTableau((1, 3, 4, 7), (2, 5, 6, 8))
    assert change_candidates_high(tab) == [(3, (2,)), (7, (2, 6))]
    partner = change(tab, 7, 2).to_tableau()
    assert partner == TwoColumnTableau((1, 2, 3, 4), (5, 6, 7, 8))
    assert partner in codim1_partners(tab)


def test_partner_examples():
    t4 = TwoColumnTableau((1, 2), (3, 4))
    assert codim1_partners(t4) == {TwoColumnTableau((1, 3), (2, 4))}
    t3 = TwoColumnTableau((1, 2), (3,))
    assert codim1_partners(t3) == {TwoColumnTableau((1, 3), (2,))}
    single = TwoColumnTableau.parse("1,2,3,4")
    assert codim1_partners(single) == set()


def test_partner_rules_agree():
    for n in range(1, 8):
        for k in range(n // 2 + 1):
            for tab in enumerate_tableaux(n, k):
                assert change_rule_partners(tab) == codim1_partners(tab)


def test_partner_symmetry_and_odd_gap():
    for n in range(2, 7):
        for k in range(1, n // 2 + 1):
            tabs = list(enumerate_tableaux(n, k))
            partner_map = {tab: codim1_partners(tab) for tab in tabs}
            for tab in tabs:
                for other in partner_map[tab]:
                    assert tab in partner_map[other]
                for i, b in change_candidates_low(tab):
                    assert (b - i) % 2 == 1
                for a, bs in change_candidates_high(tab):
                    assert all((a - b) % 2 == 1 for b in bs)
