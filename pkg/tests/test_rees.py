import itertools

import pytest
from hypothesis import given, settings, strategies as st

from monideal.core import MonomialIdeal, Staircase, multiply, power, to_staircase
from monideal.polyalg import DEGREVLEX, buchberger
from monideal.rees import (
    AT_MOST_ONE, content_ideal, expected_equations_check, fiber_hilbert, jacobian_dual,
    linear_equations, minors, rees_ideal, rees_presentation, reduction_number_probe, syzygy_matrix,
    two_minors,
)

from conftest import m_full_staircases, staircases


def product_of_lines(bs):
    I = MonomialIdeal.unit(2)
    for b in bs:
        I = multiply(I, MonomialIdeal(2, [(1, 0), (0, b)]))
    return to_staircase(I)


def test_syzygy_matrix_of_product_example(product_example):
    phi = syzygy_matrix(product_example)
    assert phi.as_lists() == [
        [[1, [0, 1]], None, None],
        [[-1, [1, 0]], [1, [0, 3]], None],
        [None, [-1, [1, 0]], [1, [0, 6]]],
        [None, None, [-1, [1, 0]]],
    ]
    assert content_ideal(phi) == (1, 1)
    assert minors(phi, 2) == MonomialIdeal(2, [(2, 0), (1, 1), (0, 4)])
    assert minors(phi, 2) != power(MonomialIdeal.maximal(2), 2)
    assert minors(phi, 3) == product_example.ideal
    assert minors(phi, 0).is_unit()


def test_jacobian_dual_of_product_example(product_example):
    d = jacobian_dual(product_example)
    assert [[str(p) for p in row] for row in d.B] == [["-T2", "-T3", "-T4"], ["T1", "y^2*T2", "y^5*T3"]]
    assert [[str(p) for p in row] for row in d.B0] == [["-T2", "-T3", "-T4"], ["T1", "0", "0"]]


def test_rees_ideal_of_product_example(product_example):
    pres = rees_presentation(product_example)
    Q = pres.ideals["elimination"]
    assert pres.routes_agree and pres.ideals["colon"] == Q
    T1, T2, T3, T4 = Q.ring.gens()[2:]
    y = Q.ring.var("y")
    extra = T2 * T4 - y ** 3 * T3 ** 2
    target = buchberger(pres.linear + [q for q in pres.quadrics if q] + [extra], DEGREVLEX, ring=Q.ring)
    assert Q == target
    assert [str(e) for e in pres.extra_generators] in (["y^3*T3^2 - T2*T4"], ["T2*T4 - y^3*T3^2"])
    assert pres.generated_in_degree_two and pres.quadrics_in_ideal
    assert not pres.expected.expected and not pres.expected.height_route


def test_reduction_probe_examples(product_example):
    v = reduction_number_probe(product_example)
    assert v.verdict == AT_MOST_ONE and v.certified
    for k in (1, 2, 3):
        v = reduction_number_probe(power(MonomialIdeal.maximal(2), k))
        assert v.verdict == AT_MOST_ONE and v.trials == 0 and v.witness == (f"x^{k}", f"y^{k}")


def test_reduction_probe_is_deterministic(product_example):
    assert reduction_number_probe(product_example, seed=3) == reduction_number_probe(product_example, seed=3)


def test_fiber_hilbert_counts_generators(product_example):
    fh = fiber_hilbert(product_example, 4)
    assert fh.values == (1, 4, 7, 10, 13) and fh.mismatches == ()
    with pytest.raises(ValueError):
        fiber_hilbert(product_example, 0)


@pytest.mark.parametrize("n", [4, 5])
def test_expected_equations_on_products(n):
    """Three routes agree on every product (x, y^b_1)...(x, y^b_{n-1}), b_i <= 4.

    The criterion holds exactly when the n-2 smallest b_i coincide.
    """
    for bs in itertools.combinations_with_replacement(range(1, 5), n - 1):
        S = product_of_lines(bs)
        r = expected_equations_check(S)
        assert r.cm_hypothesis == "verified" and r.routes_agree
        assert r.expected == (len(set(bs[:-1])) == 1), bs
        if n == 4:
            Q = rees_ideal(S)
            K = buchberger(linear_equations(S) + [q for q in two_minors(jacobian_dual(S).B) if q],
                           DEGREVLEX, ring=Q.ring)
            assert (K == Q) == r.expected


@given(staircases(nmax=6, emax=12))
def test_syzygy_and_dual_identities(S):
    phi = syzygy_matrix(S)  # raises if [gens] . phi != 0
    d = jacobian_dual(S)  # raises if T . phi != [x^r, y^s] . B
    r, s = content_ideal(phi)
    assert (r, s) == (d.r, d.s)
    assert minors(phi, 1) == MonomialIdeal(2, [(r, 0), (0, s)])
    assert minors(phi, S.n - 1) == S.ideal


@settings(max_examples=200)
@given(staircases(nmax=4, emax=5))
def test_quadrics_lie_in_rees_ideal(S):
    Q = rees_ideal(S)
    d = jacobian_dual(S)
    assert Q.contains_ideal(linear_equations(S) + two_minors(d.B))


@settings(max_examples=30)
@given(staircases(nmax=4, emax=4))
def test_routes_agree_for_normal_ideals(S):
    from monideal.normality import is_normal
    if is_normal(S):
        assert rees_ideal(S, "colon") == rees_ideal(S, "elimination")


@given(m_full_staircases(nmax=6, emax=8))
def test_fiber_hilbert_on_m_full(S):
    fh = fiber_hilbert(S, 5)
    assert fh.values == fh.predicted


@given(staircases(nmax=4, emax=6), st.data())
def test_local_reduction_test_matches_groebner(S, data):
    from monideal.rees import XY, _reduces_locally, _socle_degree

    I, I2 = S.ideal, power(S.ideal, 2)
    D = _socle_degree(I2) + 1
    gens = [XY.monomial(v) for v in I.gens]
    coeffs = st.lists(st.integers(-2, 2), min_size=len(gens), max_size=len(gens))
    f = sum((c * m for c, m in zip(data.draw(coeffs), gens)), XY.zero())
    g = sum((c * m for c, m in zip(data.draw(coeffs), gens)), XY.zero())
    if not f or not g:
        return
    G = buchberger([h * XY.monomial(v) for h in (f, g) for v in I.gens]
                   + [XY.monomial((D - k, k)) for k in range(D + 1)], DEGREVLEX, ring=XY)
    assert _reduces_locally(f, g, I, I2, D) == all(G.contains(XY.monomial(v)) for v in I2.gens)


def test_reduction_probe_non_cm_example():
    S = Staircase.from_gens([(11, 0), (8, 1), (6, 2), (5, 3), (1, 4), (0, 10)])
    v = reduction_number_probe(S, trials=5, seed=7)
    assert v.verdict == "atLeastTwo" and not v.certified and v.trials == 5
