import numpy as np
import pytest
from hypothesis import given, strategies as st
from utils.errors import BadSubfieldDegree, DivByZero, ZeroBeta
from utils.gf_tower import build_tower
from utils.skew_poly import (LinearizedPoly, SkewPoly, conjugate_of_one, evaluate, left_divide, lin_evaluate,
                             minimal_linearized_poly, norm_i, norms, op_D, right_divide, to_linearized)

tower = build_tower(2, 1, 2, 2, 3)
coefficients = st.lists(st.integers(0, 15), max_size=6)


def test_commutation_rule():
    a = tower.GF(2)
    z = SkewPoly.z_power(tower, 1)
    constant = SkewPoly(tower, [a])
    assert z * constant == SkewPoly(tower, [0, tower.sigma(a)])
    assert constant * z == SkewPoly(tower, [0, a])


def test_zero_and_degree():
    assert SkewPoly(tower).degree == float("-inf")
    assert SkewPoly(tower, [1, 0, 0]).degree == 0
    assert SkewPoly.z_power_minus_one(tower, 3).degree == 3
    assert SkewPoly(tower, [3, 1]).is_monic
    assert SkewPoly(tower, [1, 3]).monic().is_monic


@given(coefficients, coefficients.filter(lambda c: any(c)))
def test_right_division(f, g):
    f, g = SkewPoly(tower, f), SkewPoly(tower, g)
    quotient, remainder = right_divide(f, g)
    assert quotient * g + remainder == f
    assert remainder.degree < g.degree


@given(coefficients, coefficients.filter(lambda c: any(c)))
def test_left_division(f, g):
    f, g = SkewPoly(tower, f), SkewPoly(tower, g)
    quotient, remainder = left_divide(f, g)
    assert g * quotient + remainder == f
    assert remainder.degree < g.degree


def test_division_by_zero():
    with pytest.raises(DivByZero):
        right_divide(SkewPoly(tower, [1]), SkewPoly(tower))
    with pytest.raises(DivByZero):
        left_divide(SkewPoly(tower, [1]), SkewPoly(tower))


@given(coefficients, st.integers(0, 15))
def test_evaluation_is_remainder(f, alpha):
    f = SkewPoly(tower, f)
    _, remainder = right_divide(f, SkewPoly(tower, [int(-tower.GF(alpha)), 1]))
    assert remainder.coefficient(0) == evaluate(f, tower.GF(alpha))


@given(coefficients, coefficients, st.integers(0, 15))
def test_product_rule(f, g, alpha):
    f, g, alpha = SkewPoly(tower, f), SkewPoly(tower, g), tower.GF(alpha)
    value = g(alpha)
    expected = f(op_D(tower, alpha, 1, value) / value) * value if value != 0 else tower.GF(0)
    assert (f * g)(alpha) == expected


def test_norms():
    a = tower.GF(7)
    assert norm_i(tower, a, 0) == 1
    assert norm_i(tower, a, 2) == tower.sigma(a) * a
    assert np.array_equal(norms(tower, a, 3), tower.GF([int(norm_i(tower, a, i)) for i in range(3)]))


@given(coefficients, st.integers(1, 15))
def test_arithmetic_and_linearized_evaluation(f, beta):
    f, beta = SkewPoly(tower, f), tower.GF(beta)
    assert evaluate(f, conjugate_of_one(tower, beta)) * beta == lin_evaluate(to_linearized(f), beta)


def test_conjugate_of_zero():
    with pytest.raises(ZeroBeta):
        conjugate_of_one(tower, 0)


@given(coefficients, coefficients, st.integers(0, 15))
def test_linearized_composition(f, g, y):
    f, g = LinearizedPoly(tower, f or [0]), LinearizedPoly(tower, g or [0])
    assert f.compose(g)(tower.GF(y)) == f(g(tower.GF(y)))


def test_minimal_linearized_poly():
    beta = tower.normal_element
    g = minimal_linearized_poly(tower, [int(beta)], 2)
    assert g.is_monic
    assert g.degree == 1
    assert lin_evaluate(to_linearized(g), beta) == 0
    # over F the root brings its conjugate σ(β) along
    assert minimal_linearized_poly(tower, [int(beta)], 1) == SkewPoly.z_power_minus_one(tower, 2)
    full = minimal_linearized_poly(tower, tower.sigma_orbit(beta, 2), 2)
    assert full == SkewPoly.z_power_minus_one(tower, 2)
    assert minimal_linearized_poly(tower, [], 2) == SkewPoly(tower, [1])


def test_minimal_linearized_poly_degree_check():
    with pytest.raises(BadSubfieldDegree):
        minimal_linearized_poly(tower, [1], 3)


def test_reduce_cyclic():
    f = SkewPoly.z_power(tower, 3) + SkewPoly(tower, [1])
    assert f.reduce_cyclic(2) == SkewPoly(tower, [1, 1])
    assert SkewPoly.z_power_minus_one(tower, 2).reduce_cyclic(2).is_zero
