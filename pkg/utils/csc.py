import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple
import numpy as np
from models.code import ComponentRecord, CSCRecord
from utils.errors import (ComponentCountMismatch, ComponentFieldMismatch, NotDivisor, NotMonic,
                          RequiresNEqualsM, ZeroBeta)
from utils.gf_tower import Tower, tower_from_params
from utils.matrices import rank, row_space_contains
from utils.quotient_rings import (BivarElem, CycFactorization, crt_inverse, ev_partial, factor_cyclotomic, nu,
                                  nu_inverse)
from utils.skew_poly import LinearizedPoly, SkewPoly, minimal_linearized_poly, right_divide

logger = logging.getLogger(__name__)


def shift_inter(vector, ell: int, N: int):
    """ φ: rotate the ell blocks of length N one step to the right """
    return np.roll(vector.reshape(ell, N), 1, axis=0).reshape(-1)


def shift_intra(tower: Tower, vector, ell: int, N: int):
    """ ψ on every block: (c_0, ..., c_{N-1}) ↦ (σ(c_{N-1}), σ(c_0), ..., σ(c_{N-2})) """
    blocks = tower.sigma(vector.reshape(ell, N), 1)
    return np.roll(blocks, 1, axis=1).reshape(-1)


def is_csc(tower: Tower, basis, ell: int, N: int) -> bool:
    """ True iff the row space of `basis` is closed under φ and ψ """
    basis = tower.GF(basis).reshape(-1, ell * N)
    if basis.shape[0] == 0:
        return True
    inter = np.stack([shift_inter(row, ell, N) for row in basis])
    intra = np.stack([shift_intra(tower, row, ell, N) for row in basis])
    return row_space_contains(basis, inter) and row_space_contains(basis, intra)


def is_left_ideal(tower: Tower, basis, ell: int, N: int) -> bool:
    """ True iff the ν-images of the rows span a left ideal of R, checked on x·f and z·f """
    basis = tower.GF(basis).reshape(-1, ell * N)
    if basis.shape[0] == 0:
        return True
    x = BivarElem.monomial(tower, ell, 1, 0, N)
    z = BivarElem.monomial(tower, ell, 0, 1, N)
    images = []
    for row in basis:
        f = nu(tower, row, ell, N)
        images.append(nu_inverse(x * f, N))
        images.append(nu_inverse(z * f, N))
    return row_space_contains(basis, np.stack(images))


@dataclass
class DefiningSet:
    """ F_q-basis of T_C(a^j) ∪ {0} for every coset representative j """
    reps: List[int]
    bases: List

    @property
    def dimensions(self) -> List[int]:
        return [basis.size for basis in self.bases]


class CSCCode:
    """
    Cyclic-skew-cyclic code of length n = ell·N over F = F_{q0^m}, stored through its components
    g_i ∈ F_{q0^(m d_i)}[z;σ], one per q0^m-cyclotomic coset of ell.
    """

    def __init__(self, tower: Tower, N: int, fact: CycFactorization, components: Sequence[SkewPoly],
                 checks: Sequence[SkewPoly], g: BivarElem, h: BivarElem):
        self.tower = tower
        self.ell = fact.ell
        self.N = N
        self.fact = fact
        self.components = list(components)
        self.checks = list(checks)
        self.g = g
        self.h = h

    @property
    def n(self) -> int:
        return self.ell * self.N

    @property
    def ks(self) -> List[int]:
        """ k_i = N - deg_z g_i """
        return [self.N - component.degree for component in self.components]

    @property
    def dimension(self) -> int:
        return sum(d * k for d, k in zip(self.fact.degrees, self.ks))

    @cached_property
    def generator_matrix(self):
        """ Rows φ^u(ψ^v(e_i·g)) for u < d_i and v < k_i """
        rows = []
        for i, e_i in enumerate(self.fact.idempotents):
            base = nu_inverse(self.g.times_s(e_i).reduce(self.N), self.N)
            for u in range(self.fact.degrees[i]):
                row = base
                for _ in range(u):
                    row = shift_inter(row, self.ell, self.N)
                for _ in range(self.ks[i]):
                    rows.append(row)
                    row = shift_intra(self.tower, row, self.ell, self.N)
        matrix = self.tower.GF(np.stack(rows)) if rows else self.tower.GF.Zeros((0, self.n))
        assert rank(matrix) == matrix.shape[0], "generator rows are dependent"
        return matrix

    def contains(self, vector) -> bool:
        vector = self.tower.GF(vector).reshape(-1)
        if self.dimension == 0:
            return not np.any(vector)
        return row_space_contains(self.generator_matrix, vector)

    def to_record(self) -> CSCRecord:
        components = [ComponentRecord(coset=list(coset), coefficients=self.tower.vector_text(component.coeffs))
                      for coset, component in zip(self.fact.cosets, self.components)]
        return CSCRecord(tower=self.tower.params, ell=self.ell, N=self.N, components=components)

    @classmethod
    def from_record(cls, record: CSCRecord) -> "CSCCode":
        tower = tower_from_params(record.tower)
        components = [SkewPoly(tower, tower.parse_vector(component.coefficients)) for component in record.components]
        return from_components(tower, record.N, components)


def from_components(tower: Tower, N: int, components: Sequence[SkewPoly],
                    fact: Optional[CycFactorization] = None) -> CSCCode:
    """ Assemble g = Σ e_i·g̃_i and h = Σ e_i·h̃_i from monic right divisors g_i of z^N - 1 """
    fact = fact or factor_cyclotomic(tower)
    if len(components) != len(fact.cosets):
        raise ComponentCountMismatch(f"Expected {len(fact.cosets)} components, got {len(components)}.")
    modulus = SkewPoly.z_power_minus_one(tower, N)
    checks = []
    for i, component in enumerate(components):
        if not component.is_monic:
            raise NotMonic(f"Component {i} is not monic.")
        field_degree = tower.small_degree * fact.degrees[i]
        if not tower.all_in_subfield(component.coeffs, field_degree):
            raise ComponentFieldMismatch(f"Component {i} is not defined over the field of degree {field_degree}.")
        check, remainder = right_divide(modulus, component)
        if not remainder.is_zero:
            raise NotDivisor(f"Component {i} does not right-divide z^{N} - 1.")
        checks.append(check)

    g = crt_inverse(components, fact)
    h = crt_inverse(checks, fact)
    z_n_minus_one = BivarElem.z_power_minus_one(tower, fact.ell, N)
    assert g * h == z_n_minus_one and h * g == z_n_minus_one, "g·h differs from z^N - 1"
    code = CSCCode(tower, N, fact, components, checks, g, h)
    logger.debug(f"CSC code of length {code.n} with component degrees {[c.degree for c in components]}")
    return code


def _require_n_equals_m(tower: Tower, N: int):
    if N != tower.params.m:
        raise RequiresNEqualsM(f"Defining sets need N = m = {tower.params.m}, got N = {N}.")


def root_space(tower: Tower, component: SkewPoly):
    """ F_q-basis of the β with Σ_j g_j σ^j(β) = 0 """
    lin = LinearizedPoly(tower, component.coeffs)
    return tower.independent_subset(tower.kernel(lin), tower.q_degree)


def defining_set(code: CSCCode) -> DefiningSet:
    _require_n_equals_m(code.tower, code.N)
    bases = []
    for root in code.fact.roots:
        bases.append(root_space(code.tower, ev_partial(root, code.g)))
    return DefiningSet(reps=code.fact.reps, bases=bases)


def dimension_from_defining_set(ds: DefiningSet, fact: CycFactorization, n: int) -> int:
    return n - sum(d * dim for d, dim in zip(fact.degrees, ds.dimensions))


def largest_csc_from_root_pairs(tower: Tower, pairs: Sequence[Tuple[int, object]],
                                fact: Optional[CycFactorization] = None) -> CSCCode:
    """ Largest CSC code with N = m whose defining set contains every pair (a^j, β) """
    N = tower.params.m
    fact = fact or factor_cyclotomic(tower)
    attached: Dict[int, List[int]] = {i: [] for i in range(len(fact.cosets))}
    for j, beta in pairs:
        beta = tower.GF(beta)
        if beta == 0:
            raise ZeroBeta(f"Root pair with exponent {j} has beta = 0.")
        i, h = fact.shift_to_rep(j)
        attached[i].append(int(tower.q0_power(beta, h * tower.params.m)))
    components = [minimal_linearized_poly(tower, attached[i], fact.degrees[i]) for i in range(len(fact.cosets))]
    return from_components(tower, N, components, fact)


class EvaluationCode:
    """ Skew-cyclic code C(a) of length N generated by g(a, z) over F_{q0^(m d)} """

    def __init__(self, tower: Tower, N: int, generator: SkewPoly, field_degree: int):
        self.tower = tower
        self.N = N
        self.generator = generator
        self.field_degree = field_degree

    @property
    def dimension(self) -> int:
        return self.N - self.generator.degree

    @property
    def dimension_over_small_field(self) -> int:
        return self.dimension * self.field_degree // self.tower.small_degree

    @cached_property
    def generator_matrix(self):
        rows = []
        row = self.generator.padded(self.N)
        for _ in range(self.dimension):
            rows.append(row)
            row = shift_intra(self.tower, row, 1, self.N)
        return self.tower.GF(np.stack(rows)) if rows else self.tower.GF.Zeros((0, self.N))


def evaluation_component(code: CSCCode, a) -> EvaluationCode:
    generator = ev_partial(a, code.g)
    exponent = code.fact.exponent_of(a)
    field_degree = code.tower.small_degree * code.fact.degrees[code.fact.coset_index(exponent)]
    return EvaluationCode(code.tower, code.N, generator, field_degree)
