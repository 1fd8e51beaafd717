import logging

import pytest

from engine.bad_space import max_comparisons_reduced
from engine.closed_forms import (
    FAILS,
    HOLDS,
    OUTSIDE,
    UNVERIFIABLE,
    chi,
    gamma_increment,
    gamma_sequence,
    n1_closed,
    n2_closed,
    n2_expanded,
    n3_closed,
    n3_expanded,
    n4_closed,
    threshold_report,
    verify_chain,
    worst_case,
    worst_case_formula,
)
from engine.errors import DomainError
from engine.gapseq import GapSequence
from engine.published import PUBLISHED_FORMULA_ANCHORS, PUBLISHED_GAMMA

FORMULA = {2: n2_closed, 3: n3_closed, 4: n4_closed}


@pytest.mark.parametrize("key, expected", sorted(PUBLISHED_FORMULA_ANCHORS.items()))
def test_published_anchors(key, expected):
    i, n = key
    assert FORMULA[i](n) == expected


def test_chi():
    assert chi(3, 9) == 1
    assert chi(3, 10) == 0
    with pytest.raises(DomainError):
        chi(0, 4)


def test_linear():
    assert [n1_closed(n) for n in range(1, 7)] == [0, 1, 3, 6, 10, 15]


@pytest.mark.parametrize("n", range(3, 400))
def test_ceiling_and_chi_forms_agree(n):
    assert n2_expanded(n) == n2_closed(n)
    if n >= 4:
        assert n3_expanded(n) == n3_closed(n)


@pytest.mark.parametrize("n", range(3, 13))
def test_n2_against_enumeration(n):
    assert n2_closed(n) == max_comparisons_reduced(n, GapSequence.of(1, 2))[0]


@pytest.mark.parametrize("n", range(4, 13))
def test_n3_and_n4_against_enumeration(n):
    assert n3_closed(n) == max_comparisons_reduced(n, GapSequence.of(1, 3))[0]
    assert n4_closed(n) == max_comparisons_reduced(n, GapSequence.of(1, 2, 3))[0]


@pytest.mark.slow
@pytest.mark.parametrize("n", range(13, 19))
def test_closed_forms_against_enumeration_up_to_eighteen(n):
    assert n2_closed(n) == max_comparisons_reduced(n, GapSequence.of(1, 2))[0]
    assert n3_closed(n) == max_comparisons_reduced(n, GapSequence.of(1, 3))[0]
    if n <= 16 and n != 14:
        assert n4_closed(n) == max_comparisons_reduced(n, GapSequence.of(1, 2, 3))[0]


@pytest.mark.slow
def test_n4_at_fourteen():
    # the printed n=14 search log says 70
    assert n4_closed(14) == 73
    assert max_comparisons_reduced(14, GapSequence.of(1, 2, 3))[0] == 73


@pytest.mark.parametrize("formula, below", [(n2_closed, 3), (n3_closed, 4), (n4_closed, 4)])
def test_formula_domains(formula, below):
    with pytest.raises(DomainError):
        formula(below - 1)


def test_formula_dispatch():
    formula = worst_case_formula(3)
    assert formula.sequence == GapSequence.of(1, 3)
    assert formula(16) == 95
    with pytest.raises(DomainError):
        worst_case_formula(7)


def test_worst_case_falls_back_to_enumeration():
    assert worst_case(7, 9) == 29
    assert worst_case(4, 16) == 89
    assert worst_case(2047, 20, budget=1000) is None
    with pytest.raises(DomainError):
        worst_case(5, 4)


def test_gamma_increments():
    assert [gamma_increment(k) for k in range(1, 18)] == PUBLISHED_GAMMA
    assert gamma_sequence(1000) == [1, 4, 9, 20, 45, 102, 230, 516]


def test_gamma_beyond_certified_range_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="engine.closed_forms"):
        gamma_increment(18)
    assert "beyond the certified range" in caplog.text


def test_threshold_claims():
    claims = {c.name: c for c in threshold_report(2000)}
    assert all(c.passed for c in claims.values())
    # n_3 already beats n_2 below nine: at n=8 it is 25 against 28
    early = claims["n_3 < n_2"].early
    assert 8 in early
    assert not claims["n_3 < n_2"].iff_holds
    assert n3_closed(8) == 25 and n2_closed(8) == 28


def test_short_chain():
    report = verify_chain(range(8, 12), (7, 4, 3, 2, 1), domain_start=9)
    assert [r.verdict for r in report.rows] == [OUTSIDE, HOLDS, FAILS, FAILS]
    # n_4 catches up with n_3 at ten and overtakes it at eleven
    assert report.rows[2].values[4] == report.rows[2].values[3] == 39
    assert (report.rows[3].values[4], report.rows[3].values[3]) == (47, 46)
    assert not report.passed
    assert "fails" in report.render()


@pytest.mark.slow
def test_short_chain_up_to_thirteen():
    report = verify_chain(range(9, 14), (7, 4, 3, 2, 1), domain_start=9)
    assert [r.verdict for r in report.rows] == [HOLDS, FAILS, FAILS, HOLDS, HOLDS]


def test_long_chain_is_unverifiable_on_a_budget():
    report = verify_chain(range(19, 21), (11, 7, 4, 3, 2, 1), domain_start=19, budget=10**6)
    assert all(r.verdict == UNVERIFIABLE for r in report.rows)
    assert report.passed
    assert report.to_dict()["rows"][0]["values"]["11"] is None


def test_chain_failure_is_reported():
    # n_1 < n_2 is false wherever both are defined
    report = verify_chain(range(9, 11), (1, 2), domain_start=3)
    assert [r.verdict for r in report.rows] == [FAILS, FAILS]
    assert not report.passed
