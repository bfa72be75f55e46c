from hypothesis import given

from monideal.core import MonomialIdeal, Staircase, power
from monideal.normality import (
    FAIL, classify, is_normal, necessary_conditions, sufficient_conditions,
)
from monideal.polyhedra import integral_closure, normal_up_to

from conftest import m_full_staircases, staircases

SMALL = Staircase.from_gens([(2, 0), (1, 2), (0, 3)])


def test_counterexample(counterexample):
    nec = necessary_conditions(counterexample)
    assert nec.overall_necessary and not nec.failures()
    assert not is_normal(counterexample)
    assert not sufficient_conditions(counterexample).overall_sufficient


def test_small_normal_ideal_outside_sufficient_suites():
    assert is_normal(SMALL)
    suf = sufficient_conditions(SMALL)
    assert not suf.overall_sufficient
    # convexity 2 b_2 <= b_1 + b_3 fails: 4 > 3
    bad = [c for c in suf.checks if c.status == FAIL and c.condition.endswith("convex_b")]
    assert bad and bad[0].lhs == 4 and bad[0].rhs == 3


def test_powers_of_maximal_ideal():
    for k in range(1, 5):
        S = power(MonomialIdeal.maximal(2), k)
        assert is_normal(S)
        assert sufficient_conditions(S).overall_sufficient


def test_necessary_failure_names_a_condition():
    S = Staircase.from_gens([(4, 0), (2, 2), (0, 4)])  # gaps of 2 on both sides
    rep = necessary_conditions(S)
    assert not rep.overall_necessary
    assert any(c.condition == "gap_one" and c.index == 1 for c in rep.failures())
    assert not is_normal(S)


def test_sweep_witness_for_the_finiteness_question():
    S = Staircase.from_gens([(3, 0), (2, 3), (1, 5), (0, 6)])
    assert necessary_conditions(S).overall_necessary and not is_normal(S)


@given(staircases(nmax=6, emax=9))
def test_classification_consistency(S):
    c = classify(S)
    assert c.consistent, c.consistency
    if c.normal:
        assert c.m_full.is_m_full and c.necessary.overall_necessary
    if c.sufficient.overall_sufficient:
        assert c.normal


@given(m_full_staircases(nmax=5, emax=6))
def test_sufficiency_on_m_full_family(S):
    if sufficient_conditions(S).overall_sufficient:
        assert is_normal(S)
    if is_normal(S):
        assert necessary_conditions(S).overall_necessary


@given(staircases(nmax=5, emax=7))
def test_normal_means_closed_powers(S):
    assert is_normal(S) == normal_up_to(S.ideal, 3)[0]
    assert is_normal(S) == (integral_closure(S.ideal) == S.ideal)
