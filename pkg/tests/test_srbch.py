import io
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from models.code import Extension
from utils.const import CSV_HEADER
from utils.csc import defining_set, dimension_from_defining_set
from utils.errors import AssumptionViolated, BadPartition, LengthMismatch
from utils.gf_tower import build_tower
from utils.quotient_rings import cyclotomic_cosets, factor_cyclotomic
from utils.srbch import (appendix_params, appendix_rows, bound_delsarte, bound_eq33, construct, coset_profile,
                         defining_structure, generate_table, params_cosets, singleton, write_csv)
from utils.sum_rank import min_sum_rank_distance_bruteforce

NORMAL_A = [int(beta) for beta in build_tower(2, 1, 2, 2, 3).normal_elements()]
NORMAL_B = [int(beta) for beta in build_tower(2, 1, 2, 3, 7).normal_elements()]

# (delta, b): (singleton, eq33, delsarte) for q0 = 2, m = 2, ell = 2^s - 1
APPENDIX_TABLES = {
    1: {(2, 0): (1, 1, 1), (2, 1): (1, 1, 1)},
    2: {(2, 0): (5, 4, 4), (2, 1): (5, 4, 4), (3, 0): (4, 2, 2), (3, 1): (4, 2, 2)},
    3: {(2, 0): (13, 12, 11), (2, 1): (13, 11, 11), (3, 0): (12, 9, 8), (3, 1): (12, 8, 8),
        (4, 0): (11, 6, 5), (4, 1): (11, 5, 5), (5, 0): (10, 3, 2), (5, 1): (10, 5, 2),
        (6, 0): (9, 3, -1), (6, 1): (9, 2, -1), (7, 0): (8, 0, -4), (7, 1): (8, 2, -4)},
    4: {(2, 0): (29, 28, 26), (2, 1): (29, 26, 26), (3, 0): (28, 24, 22), (3, 1): (28, 22, 22),
        (4, 0): (27, 20, 18), (4, 1): (27, 18, 18), (5, 0): (26, 16, 14), (5, 1): (26, 18, 14),
        (6, 0): (25, 16, 10), (6, 1): (25, 16, 10), (7, 0): (24, 14, 6), (7, 1): (24, 12, 6),
        (8, 0): (23, 10, 2), (8, 1): (23, 8, 2), (9, 0): (22, 6, -2), (9, 1): (22, 8, -2),
        (10, 0): (21, 6, -6), (10, 1): (21, 8, -6), (11, 0): (20, 6, -10), (11, 1): (20, 6, -10),
        (12, 0): (19, 4, -14), (12, 1): (19, 2, -14), (14, 0): (17, 0, -22), (14, 1): (17, 2, -22)},
    5: {(2, 0): (61, 60, 57), (2, 1): (61, 57, 57), (3, 0): (60, 55, 52), (3, 1): (60, 52, 52),
        (4, 0): (59, 50, 47), (4, 1): (59, 47, 47), (5, 0): (58, 45, 42), (5, 1): (58, 47, 42),
        (6, 0): (57, 45, 37), (6, 1): (57, 42, 37), (7, 0): (56, 40, 32), (7, 1): (56, 37, 32),
        (8, 0): (55, 35, 27), (8, 1): (55, 32, 27), (10, 0): (53, 30, 17), (10, 1): (53, 27, 17),
        (12, 0): (51, 25, 7), (12, 1): (51, 22, 7), (14, 0): (49, 20, -3), (14, 1): (49, 17, -3),
        (18, 0): (45, 5, -23), (18, 1): (45, 7, -23), (22, 0): (41, 5, -43), (22, 1): (41, 7, -43),
        (26, 0): (37, 0, -63), (26, 1): (37, 2, -63), (30, 0): (33, 0, -83), (30, 1): (33, 2, -83)},
    6: {(2, 0): (125, 124, 120), (2, 1): (125, 120, 120), (3, 0): (124, 118, 114), (3, 1): (124, 114, 114),
        (4, 0): (123, 112, 108), (4, 1): (123, 108, 108), (5, 0): (122, 106, 102), (5, 1): (122, 108, 102),
        (6, 0): (121, 106, 96), (6, 1): (121, 102, 96), (7, 0): (120, 100, 90), (7, 1): (120, 96, 90),
        (10, 0): (117, 88, 72), (10, 1): (117, 84, 72), (14, 0): (113, 70, 48), (14, 1): (113, 66, 48),
        (22, 0): (105, 52, 0), (22, 1): (105, 52, 0), (30, 0): (97, 26, -48), (30, 1): (97, 28, -48),
        (38, 0): (89, 14, -96), (38, 1): (89, 16, -96), (46, 0): (81, 6, -144), (46, 1): (81, 8, -144),
        (54, 0): (73, 0, -192), (54, 1): (73, 2, -192), (62, 0): (65, 0, -240), (62, 1): (65, 2, -240)},
    7: {(2, 0): (253, 252, 247), (2, 1): (253, 247, 247), (3, 0): (252, 245, 240), (3, 1): (252, 240, 240),
        (4, 0): (251, 238, 233), (4, 1): (251, 233, 233), (5, 0): (250, 231, 226), (5, 1): (250, 233, 226),
        (6, 0): (249, 231, 219), (6, 1): (249, 226, 219), (7, 0): (248, 224, 212), (7, 1): (248, 219, 212),
        (10, 0): (245, 210, 191), (10, 1): (245, 205, 191), (14, 0): (241, 189, 163), (14, 1): (241, 184, 163),
        (22, 0): (233, 154, 107), (22, 1): (233, 149, 107), (30, 0): (225, 112, 51), (30, 1): (225, 107, 51),
        (38, 0): (217, 91, -5), (38, 1): (217, 86, -5), (46, 0): (209, 70, -61), (46, 1): (209, 65, -61),
        (54, 0): (201, 42, -117), (54, 1): (201, 44, -117), (62, 0): (193, 28, -173), (62, 1): (193, 23, -173)},
}


@pytest.mark.parametrize("s", sorted(APPENDIX_TABLES))
def test_appendix_tables(s):
    rows = generate_table(appendix_params(s), appendix_rows(s))
    expected = APPENDIX_TABLES[s]
    assert [(row.delta, row.b) for row in rows] == sorted(expected)
    for row in rows:
        assert (row.singleton, row.eq33, row.delsarte) == expected[(row.delta, row.b)]
        assert row.beats_delsarte == (row.eq33 > row.delsarte)
        assert row.exact_dim is None
        assert row.delsarte <= row.eq33 <= row.singleton


def test_appendix_rows():
    assert len(appendix_rows(4)) == 24
    with pytest.raises(AssumptionViolated):
        appendix_rows(8)


def test_coset_profile():
    cosets = cyclotomic_cosets(4, 15)
    assert coset_profile(cosets, 1, 5) == [0, 2, 1, 1, 0, 0, 0, 0, 0]
    assert bound_eq33(cosets, 1, 5, 2, 4) == 18
    assert params_cosets(appendix_params(4)) == cosets


def test_plain_bounds():
    assert singleton(30, 5) == 26
    assert bound_delsarte(30, 4, 5) == 14
    assert bound_delsarte(14, 3, 7) == -4


def test_small_code(tower_a):
    code = construct(tower_a, 0, 3)
    assert code.exact_dim == code.dimension == 2
    assert code.eq33 == 2
    assert code.singleton == 4
    assert code.delsarte == 2
    assert code.radius == 1
    assert code.parent is not None
    assert code.table_row().exact_dim == 2


def test_single_block_code():
    code = construct(build_tower(2, 1, 2, 1, 1), 0, 2)
    assert code.dimension == 1


@pytest.mark.parametrize("delta, expected", [(5, 5), (7, 2)])
def test_codes_of_length_fourteen(tower_b, delta, expected):
    code = construct(tower_b, 1, delta)
    assert code.dimension == expected
    assert code.exact_dim == code.eq33


def test_structure_records(tower_b):
    code = construct(tower_b, 1, 5)
    record = code.to_record()
    assert record.n == 14
    assert len(record.generator_matrix) == 5
    assert [part.exponents for part in record.structure] == [[], [0, 1, 3], [2]]
    assert sum(part.degree * part.dimension for part in record.structure) == 14 - 5


def test_matches_largest_csc_code(tower_a):
    code = construct(tower_a, 0, 3)
    csc = code.as_csc()
    assert csc.dimension == code.dimension
    for row in code.genmat:
        assert csc.contains(row)


def test_encode_and_contains(tower_a):
    code = construct(tower_a, 1, 3)
    F = tower_a.subfield_elements(tower_a.small_degree)
    codeword = code.encode(F[[1, 2]])
    assert code.contains(codeword)
    assert not code.contains(codeword + F[[1, 0, 0, 0, 0, 0]])
    assert not code.contains(tower_a.GF.Zeros(5))
    with pytest.raises(LengthMismatch):
        code.encode(F[[1]])
    with pytest.raises(BadPartition):
        code.encode(tower_a.GF([int(tower_a.normal_element), 0]))


def test_construction_assumptions(tower_a):
    with pytest.raises(AssumptionViolated):
        construct(build_tower(2, 1, 3, 2, 3), 0, 2)
    with pytest.raises(AssumptionViolated):
        construct(tower_a, 0, 7)


@pytest.mark.parametrize("b", [0, 1, 2])
@pytest.mark.parametrize("delta", [2, 3, 4, 5, 6])
def test_designed_distance(tower_a, b, delta):
    code = construct(tower_a, b, delta)
    if delta >= 4:
        # every coset holds a full normal basis, so only the zero word is left
        assert code.dimension == 0
    distance = min_sum_rank_distance_bruteforce(tower_a, code.genmat, 3, 2, Extension.small)
    assert distance >= delta
    if code.dimension == 0:
        assert distance == 7


@pytest.mark.parametrize("b", [0, 1])
@pytest.mark.parametrize("delta", range(4, 15))
def test_designed_distance_length_fourteen(tower_b, b, delta):
    code = construct(tower_b, b, delta)
    distance = min_sum_rank_distance_bruteforce(tower_b, code.genmat, 7, 2, Extension.small)
    assert distance >= delta


@pytest.mark.parametrize("b", [0, 1, 3])
@pytest.mark.parametrize("delta", range(2, 15))
def test_dimension_computations_agree(tower_b, b, delta):
    code = construct(tower_b, b, delta)
    csc = code.as_csc()
    from_defining_set = dimension_from_defining_set(defining_set(csc), code.fact, 14)
    assert code.exact_dim == code.dimension == from_defining_set == csc.dimension
    assert code.delsarte <= code.eq33 <= code.exact_dim


@pytest.mark.parametrize("delta, dimension", [(3, 11), (5, 7), (7, 5)])
def test_binary_bch_when_m_is_one(delta, dimension):
    # m = N = 1: sum-rank weight is Hamming weight and the codes are binary BCH codes of length 15
    tower = build_tower(2, 1, 1, 4, 15)
    code = construct(tower, 1, delta)
    assert code.dimension == dimension
    assert min_sum_rank_distance_bruteforce(tower, code.genmat, 15, 1, Extension.small) == delta


@settings(max_examples=30)
@given(st.sampled_from(NORMAL_A), st.integers(0, 2), st.integers(2, 6))
def test_dimension_does_not_depend_on_beta(beta, b, delta):
    tower = build_tower(2, 1, 2, 2, 3)
    code = construct(tower, b, delta, beta=beta)
    assert code.exact_dim == code.dimension == construct(tower, b, delta).dimension


@settings(max_examples=10)
@given(st.sampled_from(NORMAL_B), st.integers(0, 6), st.integers(2, 14))
def test_dimension_does_not_depend_on_beta_length_fourteen(beta, b, delta):
    tower = build_tower(2, 1, 2, 3, 7)
    code = construct(tower, b, delta, beta=beta)
    assert code.exact_dim == code.dimension == construct(tower, b, delta).dimension


@given(st.integers(0, 6), st.integers(2, 14), st.integers(0, 100))
def test_structure_does_not_depend_on_anchor(b, delta, pick):
    tower = build_tower(2, 1, 2, 3, 7)
    fact = factor_cyclotomic(tower)
    beta = tower.normal_element
    smallest = defining_structure(tower, fact, b, delta, beta)
    other = defining_structure(tower, fact, b, delta, beta,
                               anchor=lambda exponents: exponents[pick % len(exponents)])
    assert [part.dimension for part in other] == [part.dimension for part in smallest]


def test_dual_fallback():
    # ell = 3 and m = 4 leave no dual of the shifted LRS form
    tower = build_tower(2, 1, 4, 2, 3)
    code = construct(tower, 0, 3)
    assert code.parent is None
    assert code.parent_genmat.shape == (12 - 2, 12)
    assert not np.any(code.parity @ code.parent_genmat.T)


def test_write_csv():
    stream = io.StringIO()
    write_csv(generate_table(appendix_params(2), [(3, 0)]), stream)
    assert stream.getvalue().splitlines() == [",".join(CSV_HEADER), "3,0,4,2,2,,false"]


def test_exact_column():
    rows = generate_table(appendix_params(2), [(3, 0), (2, 1), (3, 0)], exact=True)
    assert [(row.delta, row.b, row.exact_dim) for row in rows] == [(2, 1, 4), (3, 0, 2)]
