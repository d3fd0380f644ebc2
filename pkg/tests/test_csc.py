import numpy as np
import pytest
from hypothesis import given, strategies as st
from utils.csc import (CSCCode, defining_set, dimension_from_defining_set, evaluation_component, from_components,
                       is_csc, is_left_ideal, largest_csc_from_root_pairs, shift_inter, shift_intra)
from utils.errors import NotDivisor, NotMonic, RequiresNEqualsM, ZeroBeta
from utils.gf_tower import build_tower
from utils.lrs import csc_lrs
from utils.matrices import rank
from utils.quotient_rings import BivarElem, ev_total, factor_cyclotomic, nu, nu_inverse
from utils.skew_poly import SkewPoly

tower = build_tower(2, 1, 2, 2, 3)
fact = factor_cyclotomic(tower)
root_pairs = st.lists(st.tuples(st.integers(0, 2), st.integers(1, 15)), max_size=3)


def ones(count):
    return [SkewPoly(tower, [1]) for _ in range(count)]


def test_shifts():
    vector = tower.GF(np.arange(6))
    assert np.array_equal(shift_inter(vector, 3, 2), tower.GF([4, 5, 0, 1, 2, 3]))
    assert np.array_equal(shift_inter(vector, 1, 6), vector)
    expected = tower.sigma(tower.GF([1, 0, 3, 2, 5, 4]))
    assert np.array_equal(shift_intra(tower, vector, 3, 2), expected)


def test_shift_intra_is_identity_for_single_entries(tower_classical):
    vector = tower_classical.GF([1, 0, 1])
    assert np.array_equal(shift_intra(tower_classical, vector, 3, 1), vector)


def test_shifts_match_ring_multiplication():
    vector = tower.subfield_elements(2)[[1, 2, 3, 0, 1, 3]]
    x = BivarElem.monomial(tower, 3, 1, 0, 2)
    z = BivarElem.monomial(tower, 3, 0, 1, 2)
    assert np.array_equal(nu_inverse(x * nu(tower, vector, 3, 2)), shift_inter(vector, 3, 2))
    assert np.array_equal(nu_inverse(z * nu(tower, vector, 3, 2)), shift_intra(tower, vector, 3, 2))


def test_trivial_codes():
    full = from_components(tower, 2, ones(len(fact.cosets)), fact)
    assert full.dimension == 6
    assert rank(full.generator_matrix) == 6
    zero = from_components(tower, 2, [SkewPoly.z_power_minus_one(tower, 2)] * len(fact.cosets), fact)
    assert zero.dimension == 0
    assert zero.generator_matrix.shape == (0, 6)
    assert is_csc(tower, full.generator_matrix, 3, 2)
    assert is_csc(tower, zero.generator_matrix, 3, 2)


def test_component_checks():
    with pytest.raises(NotMonic):
        from_components(tower, 2, [SkewPoly(tower, [1, 2])] + ones(len(fact.cosets) - 1), fact)
    with pytest.raises(NotDivisor):
        from_components(tower, 2, [SkewPoly(tower, [0, 1])] + ones(len(fact.cosets) - 1), fact)


def test_lrs_code_is_csc():
    code = csc_lrs(tower, tower.primitive_root_of_unity, tower.normal_element, 0, 2)
    assert is_csc(tower, code.genmat, 3, 2)
    assert is_left_ideal(tower, code.genmat, 3, 2)


def test_random_subspace_closure_tests_agree():
    rng = np.random.default_rng(1)
    F = tower.subfield_elements(2)
    for _ in range(50):
        basis = F[rng.integers(0, F.size, size=(int(rng.integers(1, 7)), 6))]
        assert is_csc(tower, basis, 3, 2) == is_left_ideal(tower, basis, 3, 2)


@given(root_pairs)
def test_root_pair_codes(pairs):
    code = largest_csc_from_root_pairs(tower, pairs, fact)
    matrix = code.generator_matrix
    assert rank(matrix) == code.dimension
    assert is_csc(tower, matrix, 3, 2)
    assert is_left_ideal(tower, matrix, 3, 2)
    assert code.g * code.h == BivarElem.z_power_minus_one(tower, 3, 2)
    ds = defining_set(code)
    assert dimension_from_defining_set(ds, fact, 6) == code.dimension
    assert sum(evaluation_component(code, root).dimension_over_small_field for root in fact.roots) == code.dimension


@given(root_pairs, st.lists(st.integers(0, 3), min_size=6, max_size=6))
def test_membership_through_defining_set(pairs, digits):
    code = largest_csc_from_root_pairs(tower, pairs, fact)
    if code.dimension == 0:
        return
    message = tower.subfield_elements(2)[digits[: code.dimension]]
    codeword = message @ code.generator_matrix
    assert code.contains(codeword)
    ds = defining_set(code)
    f = nu(tower, codeword, 3, 2)
    for rep, basis in zip(ds.reps, ds.bases):
        for beta in basis:
            assert ev_total(fact.a ** rep, beta, f) == 0


def test_largest_code_contains_the_pairs():
    beta = tower.normal_element
    code = largest_csc_from_root_pairs(tower, [(1, beta)], fact)
    ds = defining_set(code)
    i, h = fact.shift_to_rep(1)
    shifted = tower.q0_power(beta, h * tower.params.m)
    assert tower.rank_over(np.concatenate([ds.bases[i], tower.GF([int(shifted)])]), tower.q_degree) == ds.dimensions[i]


def test_full_normal_basis_zeroes_a_component():
    beta = tower.normal_element
    code = largest_csc_from_root_pairs(tower, [(0, beta), (0, tower.sigma(beta))], fact)
    assert code.components[0] == SkewPoly.z_power_minus_one(tower, 2)
    assert code.dimension == 6 - 2
    assert largest_csc_from_root_pairs(tower, [], fact).dimension == 6


def test_zero_beta():
    with pytest.raises(ZeroBeta):
        largest_csc_from_root_pairs(tower, [(0, 0)], fact)


def test_defining_set_needs_n_equal_m():
    code = from_components(tower, 4, ones(len(fact.cosets)), fact)
    assert code.dimension == 12
    with pytest.raises(RequiresNEqualsM):
        defining_set(code)


def test_record_round_trip():
    code = largest_csc_from_root_pairs(tower, [(1, tower.normal_element)], fact)
    rebuilt = CSCCode.from_record(code.to_record())
    assert rebuilt.g == code.g
    assert rebuilt.dimension == code.dimension


def test_classical_cyclic_codes(tower_classical):
    factors = factor_cyclotomic(tower_classical)
    one = SkewPoly(tower_classical, [1])
    z_minus_one = SkewPoly.z_power_minus_one(tower_classical, 1)
    code = from_components(tower_classical, 1, [one, z_minus_one], factors)
    e_0, e_1 = factors.idempotents
    expected = BivarElem.one(tower_classical, 3).times_s(e_0) + \
        BivarElem.z_power_minus_one(tower_classical, 3, 1).times_s(e_1)
    assert code.g == expected
    assert code.dimension == 1


def test_gabidulin_single_component(tower_gabidulin):
    factors = factor_cyclotomic(tower_gabidulin)
    beta = tower_gabidulin.normal_element
    code = largest_csc_from_root_pairs(tower_gabidulin, [(0, beta)], factors)
    assert code.g == BivarElem(tower_gabidulin, 1, code.components[0].coeffs.reshape(-1, 1))
    assert code.dimension == 2
