import pytest
from hypothesis import given

from monideal.core import MonomialIdeal, contains, multiply, order, power, to_staircase
from monideal.errors import MonomialIdealError, NotZeroDimensional
from monideal.fullness import (
    colon_by_linear, is_m_full, is_x_tight, is_y_tight, m_full_closure, maximal_times, tight_factorization,
)
from monideal.polyalg import Ring, ideal_colon, monomial_content
from monideal.polyhedra import integral_closure

from conftest import m_full_staircases, staircases, zero_dim_ideals

M = MonomialIdeal.maximal(2)
XY = Ring(("x", "y"))


def test_m_full_examples(counterexample):
    v = is_m_full(counterexample)
    assert v.is_m_full and v.k == 1 and v.witness_order == 3
    v = is_m_full(MonomialIdeal(2, [(3, 0), (0, 5)]))
    assert not v.is_m_full and v.failure
    for k in range(1, 6):
        assert is_m_full(power(M, k)).is_m_full


def test_tightness(counterexample):
    assert is_x_tight(counterexample) and not is_y_tight(counterexample)
    assert is_x_tight(power(M, 3)) and is_y_tight(power(M, 3))
    I = MonomialIdeal(2, [(3, 0), (0, 5)])
    assert not is_x_tight(I) and not is_y_tight(I)


def test_colon_examples():
    J = maximal_times(MonomialIdeal(2, [(3, 0), (0, 5)]))
    assert J == MonomialIdeal(2, [(4, 0), (3, 1), (1, 5), (0, 6)])
    assert colon_by_linear(J) == MonomialIdeal(2, [(3, 0), (2, 3), (1, 4), (0, 5)])
    assert colon_by_linear(power(M, 3)) == power(M, 2)
    with pytest.raises(NotZeroDimensional):
        colon_by_linear(MonomialIdeal(2, [(2, 0), (1, 1)]))


def test_closure_examples():
    trace = []
    I = MonomialIdeal(2, [(3, 0), (0, 5)])
    assert m_full_closure(I, trace=trace) == MonomialIdeal(2, [(3, 0), (2, 3), (1, 4), (0, 5)])
    assert trace[0] == trace[-1] and len(trace) == 2  # one strict step, then the fixed point
    I = MonomialIdeal(2, [(2, 0), (0, 3)])
    assert m_full_closure(I) == MonomialIdeal(2, [(2, 0), (1, 2), (0, 3)]) == integral_closure(I)


def test_factorization_examples(counterexample):
    X, Y = tight_factorization(counterexample)
    assert X == counterexample.ideal and Y.is_unit()
    X, Y = tight_factorization(power(M, 2))
    assert multiply(X, Y) == power(M, 2)
    with pytest.raises(MonomialIdealError):
        tight_factorization(MonomialIdeal(2, [(3, 0), (0, 5)]))


@given(staircases(nmax=6, emax=9))
def test_m_full_iff_order(S):
    v = is_m_full(S)
    assert v.is_m_full == (order(S.ideal) == S.n - 1)


@given(zero_dim_ideals(emax=10))
def test_colon_matches_groebner(J):
    x, y = XY.gens()
    G = ideal_colon([XY.monomial(g) for g in J.gens], x + y)
    assert MonomialIdeal(2, monomial_content(G.basis)) == colon_by_linear(J)


@given(zero_dim_ideals(emax=10))
def test_colon_contains_length_one_chains(J):
    C = colon_by_linear(J)
    A, B = J.pure_power(0), J.pure_power(1)
    for u in range(A + 1):
        for v in range(B + 1):
            if contains(J, (u + 1, v)) and contains(J, (u, v + 1)):
                assert contains(C, (u, v))


@given(zero_dim_ideals(emax=8))
def test_m_full_closure_laws(I):
    star = m_full_closure(I)
    assert I.issubset(star) and star.issubset(integral_closure(I))
    assert m_full_closure(star) == star
    if not star.is_unit():
        assert is_m_full(star).is_m_full


@given(zero_dim_ideals(emax=7), zero_dim_ideals(emax=7))
def test_m_full_closure_monotone(I, J):
    K = MonomialIdeal(2, list(I.gens) + list(J.gens))
    assert m_full_closure(I).issubset(m_full_closure(K))


@given(zero_dim_ideals(emax=9))
def test_integral_closure_is_m_full(I):
    bar = integral_closure(I)
    if not bar.is_unit():
        assert is_m_full(to_staircase(bar)).is_m_full


@given(m_full_staircases())
def test_factorization_product(S):
    assert is_m_full(S).is_m_full
    X, Y = tight_factorization(S)
    assert multiply(X, Y) == S.ideal
    if not X.is_unit():
        assert is_x_tight(X)
    if not Y.is_unit():
        assert is_y_tight(Y)
