import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import IO, Callable, List, Optional, Sequence, Tuple
import numpy as np
from models.code import CodeRecord, CosetStructureRecord
from models.table import TableRow
from models.tower import TowerParams
from utils.const import APPENDIX_BS, APPENDIX_DELTAS, CSV_HEADER, SUMRANK_JOBS
from utils.csc import CSCCode, largest_csc_from_root_pairs
from utils.errors import (AssumptionViolated, BadPartition, CrossCheckMismatch, LengthMismatch,
                          VerificationFailed)
from utils.gf_tower import Tower, check_params, tower_from_params
from utils.lrs import LRSCode, csc_lrs, dual_csc_lrs, dual_matrix
from utils.quotient_rings import CycFactorization, coset_base, cyclotomic_cosets, factor_cyclotomic

logger = logging.getLogger(__name__)


@dataclass
class CosetStructure:
    """ Defining data of one cyclotomic coset: J_i, the shifts h_λ and the subspace V_i """
    coset: Tuple[int, ...]
    exponents: List[int]
    shifts: List[int]
    subspace: object

    @property
    def degree(self) -> int:
        return len(self.coset)

    @property
    def dimension(self) -> int:
        return self.subspace.size

    def to_record(self, tower: Tower) -> CosetStructureRecord:
        return CosetStructureRecord(coset=list(self.coset), degree=self.degree, exponents=self.exponents,
                                    shifts=self.shifts, subspace=tower.vector_text(self.subspace),
                                    dimension=self.dimension)


def singleton(n: int, delta: int) -> int:
    return n - delta + 1


def bound_delsarte(n: int, s: int, delta: int) -> int:
    return n - s * (delta - 1)


def coset_profile(cosets: Sequence[Tuple[int, ...]], b: int, delta: int) -> List[int]:
    """ k_i: how many of the exponents b, ..., b + delta - 2 fall in each coset (mod ell) """
    ell = sum(len(coset) for coset in cosets)
    lookup = {j: i for i, coset in enumerate(cosets) for j in coset}
    counts = [0] * len(cosets)
    for j in range(delta - 1):
        counts[lookup[(b + j) % ell]] += 1
    return counts


def bound_eq33(cosets: Sequence[Tuple[int, ...]], b: int, delta: int, m: int, s: int) -> int:
    """ n - Σ d_i·min(m, s·k_i/d_i), where each term is min(m·d_i, s·k_i) """
    ell = sum(len(coset) for coset in cosets)
    profile = coset_profile(cosets, b, delta)
    return ell * m - sum(min(m * len(coset), s * k) for coset, k in zip(cosets, profile))


def params_cosets(params: TowerParams) -> List[Tuple[int, ...]]:
    return cyclotomic_cosets(pow(params.q0, params.m, params.ell), params.ell)


def subfield_subcode(tower: Tower, parity) -> np.ndarray:
    """
    Basis of {c ∈ F^n : parity·c = 0}: each parity row over F_{q^m} is expanded into s rows
    of coordinates over F, then the kernel is taken.
    """
    n = parity.shape[1]
    if parity.shape[0] == 0:
        return tower.GF.Identity(n)
    coords = tower.coordinates(parity, tower.small_degree)
    expanded = np.swapaxes(coords, 1, 2).reshape(-1, n)
    basis = expanded.null_space()
    assert tower.all_in_subfield(basis, tower.small_degree), "subfield subcode basis left F"
    return basis


def defining_structure(tower: Tower, fact: CycFactorization, b: int, delta: int, beta,
                       anchor: Callable[[List[int]], int] = min) -> List[CosetStructure]:
    """
    For each coset, J_i = {j < delta - 1 : b + j in the coset}; with j̃ = anchor(J_i) every j_λ is
    moved onto b + j̃ by q0^(h_λ m), and V_i is the F_q-span of β^(q0^v) for
    v = s·j_λ + m(u·d_i + h_λ) mod sm, u < s/d_i.
    """
    params = tower.params
    s, m, ell = params.s, params.m, params.ell
    base = coset_base(tower)
    structure = []
    for coset in fact.cosets:
        d = len(coset)
        assert s % d == 0, f"coset degree {d} does not divide s={s}"
        exponents = [j for j in range(delta - 1) if (b + j) % ell in coset]
        if not exponents:
            structure.append(CosetStructure(coset, [], [], tower.GF.Zeros(0)))
            continue
        target = (b + anchor(exponents)) % ell
        shifts = []
        for j in exponents:
            value = (b + j) % ell
            h = next(h for h in range(d) if value * pow(base, h, ell) % ell == target)
            shifts.append(h)
        powers = sorted({(s * j + m * (u * d + h)) % (s * m)
                         for j, h in zip(exponents, shifts) for u in range(s // d)})
        images = tower.GF([int(tower.q0_power(beta, v)) for v in powers])
        structure.append(CosetStructure(coset, exponents, shifts, tower.independent_subset(images, tower.q_degree)))
    return structure


class SRBCHCode:
    """ Sum-rank BCH code C_δ(a^b, β): the subfield subcode over F of the dual of C_{δ-1}(A, B) """

    def __init__(self, tower: Tower, b: int, delta: int, a, beta, fact: CycFactorization, primal: LRSCode,
                 parent: Optional[LRSCode], genmat, structure: List[CosetStructure]):
        self.tower = tower
        self.b = b
        self.delta = delta
        self.a = a
        self.beta = beta
        self.fact = fact
        self.primal = primal
        self.parent = parent
        self.genmat = genmat
        self.structure = structure

    @property
    def n(self) -> int:
        return self.tower.params.n

    @property
    def dimension(self) -> int:
        return self.genmat.shape[0]

    @property
    def exact_dim(self) -> int:
        return self.n - sum(part.degree * part.dimension for part in self.structure)

    @property
    def radius(self) -> int:
        return (self.delta - 1) // 2

    @property
    def singleton(self) -> int:
        return singleton(self.n, self.delta)

    @property
    def eq33(self) -> int:
        params = self.tower.params
        return bound_eq33(self.fact.cosets, self.b, self.delta, params.m, params.s)

    @property
    def delsarte(self) -> int:
        return bound_delsarte(self.n, self.tower.params.s, self.delta)

    @property
    def parity(self):
        """ Parity checks over F_{q^m}: the generator matrix of C_{δ-1}(A, B) """
        return self.primal.genmat

    @cached_property
    def parent_genmat(self):
        """ Generator matrix of the parent code over F_{q^m} """
        return self.parent.genmat if self.parent is not None else dual_matrix(self.parity)

    @property
    def root_pairs(self) -> List[Tuple[int, object]]:
        """ (b + j, σ^j(β)) for j < delta - 1 """
        return [(self.b + j, self.tower.sigma(self.beta, j)) for j in range(self.delta - 1)]

    def check_vector(self, vector, length: int):
        vector = self.tower.GF(vector).reshape(-1)
        if vector.size != length:
            raise LengthMismatch(f"Expected {length} entries, got {vector.size}.")
        if not self.tower.all_in_subfield(vector, self.tower.small_degree):
            raise BadPartition("Entries do not lie in F.")
        return vector

    def encode(self, message):
        message = self.check_vector(message, self.dimension)
        if self.dimension == 0:
            return self.tower.GF.Zeros(self.n)
        return message @ self.genmat

    def contains(self, vector) -> bool:
        vector = self.tower.GF(vector).reshape(-1)
        if vector.size != self.n or not self.tower.all_in_subfield(vector, self.tower.small_degree):
            return False
        return not np.any(self.parity @ vector)

    def as_csc(self) -> CSCCode:
        """ Largest CSC code whose defining set holds the consecutive root pairs """
        return largest_csc_from_root_pairs(self.tower, self.root_pairs, self.fact)

    def to_record(self) -> CodeRecord:
        tower = self.tower
        return CodeRecord(tower=tower.params, b=self.b, delta=self.delta, a=tower.element_text(self.a),
                          beta=tower.element_text(self.beta), n=self.n, exact_dim=self.exact_dim,
                          singleton=self.singleton, eq33=self.eq33, delsarte=self.delsarte,
                          generator_matrix=[tower.vector_text(row) for row in self.genmat],
                          structure=[part.to_record(tower) for part in self.structure])

    def table_row(self) -> TableRow:
        return TableRow(delta=self.delta, b=self.b, singleton=self.singleton, eq33=self.eq33,
                        delsarte=self.delsarte, exact_dim=self.exact_dim, beats_delsarte=self.eq33 > self.delsarte)


def construct(tower: Tower, b: int, delta: int, a=None, beta=None) -> SRBCHCode:
    params = tower.params
    issues = params.coprimality_issues()
    if issues:
        raise AssumptionViolated("; ".join(issues))
    if not 2 <= delta <= params.n:
        raise AssumptionViolated(f"delta={delta} is outside 2..{params.n}.")
    a = tower.primitive_root_of_unity if a is None else tower.GF(a)
    beta = tower.normal_element if beta is None else tower.GF(beta)
    fact = factor_cyclotomic(tower, a)
    primal = csc_lrs(tower, a, beta, b, delta - 1)
    try:
        _, _, parent = dual_csc_lrs(primal)
    except VerificationFailed as e:
        logger.warning(f"Error building dual code: {e.detail}; using the plain parity-check parent")
        parent = None

    genmat = subfield_subcode(tower, primal.genmat)
    structure = defining_structure(tower, fact, b, delta, beta)
    code = SRBCHCode(tower, b, delta, a, beta, fact, primal, parent, genmat, structure)
    algebraic = genmat.shape[0]
    if code.exact_dim != algebraic:
        raise CrossCheckMismatch(f"Structure dimension {code.exact_dim} differs from subfield subcode rank {algebraic}.")
    logger.info(f"Built SR-BCH code b={b} delta={delta} on {tower.text()}: dim {code.exact_dim}")
    return code


@lru_cache(maxsize=64)
def build_code(params: TowerParams, b: int, delta: int) -> SRBCHCode:
    return construct(tower_from_params(params), b, delta)


def appendix_params(s: int) -> TowerParams:
    """ q0 = 2, m = 2, ell = 2^s - 1 """
    return TowerParams(p=2, e=1, m=2, s=s, ell=2 ** s - 1)


def appendix_rows(s: int) -> List[Tuple[int, int]]:
    if s not in APPENDIX_DELTAS:
        raise AssumptionViolated(f"No appendix table for s={s}.")
    return [(delta, b) for delta in APPENDIX_DELTAS[s] for b in APPENDIX_BS]


def table_row(params: TowerParams, delta: int, b: int, exact: bool = False) -> TableRow:
    cosets = params_cosets(params)
    n = params.n
    eq33 = bound_eq33(cosets, b, delta, params.m, params.s)
    delsarte = bound_delsarte(n, params.s, delta)
    exact_dim = build_code(params, b, delta).exact_dim if exact else None
    return TableRow(delta=delta, b=b, singleton=singleton(n, delta), eq33=eq33, delsarte=delsarte,
                    exact_dim=exact_dim, beats_delsarte=eq33 > delsarte)


def generate_table(params: TowerParams, rows: Sequence[Tuple[int, int]], exact: bool = False,
                   jobs: int = SUMRANK_JOBS) -> List[TableRow]:
    """ One row per (delta, b), sorted by (delta, b) """
    check_params(params)
    ordered = sorted(set(rows))
    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as executor:
        return list(executor.map(lambda row: table_row(params, row[0], row[1], exact), ordered))


def write_csv(rows: Sequence[TableRow], stream: IO[str]):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_values())
