import logging
from math import gcd
from typing import Iterator, Optional, Tuple
import galois
import numpy as np
from models.code import Extension
from utils.const import SUMRANK_MSRD_BUDGET
from utils.errors import (AssumptionViolated, ConjugateEvaluationPoints, DependentBasis, VerificationFailed,
                          ZeroEntry)
from utils.gf_tower import Tower
from utils.matrices import rank, same_row_space
from utils.sum_rank import min_sum_rank_distance_bruteforce

logger = logging.getLogger(__name__)


class LRSCode:
    """ Linearized Reed-Solomon code C_k(A, B) over F_{q^m}, length n = ell·N """

    def __init__(self, tower: Tower, k: int, A, B, genmat, a=None, beta=None, b: Optional[int] = None):
        self.tower = tower
        self.k = k
        self.A = A
        self.B = B
        self.genmat = genmat
        # set when built by csc_lrs
        self.a = a
        self.beta = beta
        self.b = b

    @property
    def ell(self) -> int:
        return self.B.shape[0]

    @property
    def N(self) -> int:
        return self.B.shape[1]

    @property
    def n(self) -> int:
        return self.ell * self.N


def norms_to_fq(tower: Tower, A):
    """ a^((q^m - 1)/(q - 1)), the norm of each a down to F_q """
    return A ** ((tower.GF.order - 1) // (tower.params.q - 1))


def pairwise_nonconjugate(tower: Tower, A) -> bool:
    A = tower.GF(A).reshape(-1)
    if np.any(A == 0):
        raise ZeroEntry("Evaluation points must be nonzero.")
    values = [int(x) for x in norms_to_fq(tower, A)]
    return len(set(values)) == len(values)


def build_genmat(tower: Tower, k: int, A, B):
    """ Row r, block i, column j holds D_{a_i}^r(β_ij) = σ^r(β_ij)·N_r(a_i) """
    A = tower.GF(A).reshape(-1)
    B = tower.GF(B).reshape(A.size, -1)
    ell, N = B.shape
    n = ell * N
    if not 1 <= k <= n:
        raise AssumptionViolated(f"k={k} is outside 1..{n}.")
    if not pairwise_nonconjugate(tower, A):
        raise ConjugateEvaluationPoints("Two evaluation points are conjugate.")
    for i, basis in enumerate(B):
        if tower.rank_over(basis, tower.q_degree) != N:
            raise DependentBasis(f"Block {i} is not linearly independent over F_q.")

    rows = tower.GF.Zeros((k, ell, N))
    rows[0] = B
    for r in range(1, k):
        rows[r] = tower.sigma(rows[r - 1], 1) * A[:, np.newaxis]
    return rows.reshape(k, n)


def check_csc_assumptions(tower: Tower, a, beta):
    params = tower.params
    ell = params.ell
    if gcd(ell, params.m) != 1:
        raise AssumptionViolated(f"gcd(ell, m) = {gcd(ell, params.m)} is not 1.")
    if gcd(ell, params.q) != 1:
        raise AssumptionViolated(f"gcd(ell, q) = {gcd(ell, params.q)} is not 1.")
    if (params.q - 1) % ell:
        raise AssumptionViolated(f"ell={ell} does not divide q - 1.")
    primes = galois.factors(ell)[0] if ell > 1 else []
    if a ** ell != 1 or any(a ** (ell // prime) == 1 for prime in primes):
        raise AssumptionViolated(f"a is not a primitive {ell}-th root of unity.")
    if not tower.is_normal(beta):
        raise AssumptionViolated("beta is not a normal element.")


def csc_basis(tower: Tower, a, beta, b: int):
    """ B_i = {β a^(bi), σ(β) a^(bi), ..., σ^(m-1)(β) a^(bi)} """
    ell, m = tower.params.ell, tower.params.m
    orbit = tower.sigma_orbit(beta, m)
    scale = tower.GF([int(a ** (b * i % ell)) for i in range(ell)])
    return scale[:, np.newaxis] * orbit[np.newaxis, :]


def csc_lrs(tower: Tower, a, beta, b: int, k: int) -> LRSCode:
    a, beta = tower.GF(a), tower.GF(beta)
    check_csc_assumptions(tower, a, beta)
    ell = tower.params.ell
    A = tower.GF([int(a ** i) for i in range(ell)])
    B = csc_basis(tower, a, beta, b)
    genmat = build_genmat(tower, k, A, B)
    return LRSCode(tower, k, A, B, genmat, a=a, beta=beta, b=b)


def dual_matrix(genmat):
    """ Generator matrix of the dual code under the standard bilinear form """
    return genmat.null_space()


def is_dual(primal, dual) -> bool:
    if primal.shape[1] != dual.shape[1] or primal.shape[0] + dual.shape[0] != primal.shape[1]:
        return False
    if primal.shape[0] == 0 or dual.shape[0] == 0:
        return rank(primal) + rank(dual) == primal.shape[1]
    return not np.any(primal @ dual.T) and rank(primal) + rank(dual) == primal.shape[1]


def double_dual_matches(genmat) -> bool:
    return same_row_space(dual_matrix(dual_matrix(genmat)), genmat)


def _discrete_log(tower: Tower, a, value, ell: int) -> Optional[int]:
    for c in range(ell):
        if a ** c == value:
            return c
    return None


def _hilbert90(tower: Tower, rho):
    """ First ν ≠ 0 in canonical order with ν = rho·σ(ν) """
    candidates = tower.GF.Range(1, tower.GF.order)
    hits = np.flatnonzero(candidates == rho * tower.sigma(candidates, 1))
    return candidates[hits[0]] if hits.size else None


def constructive_dual_parameters(code: LRSCode) -> Tuple[int, object]:
    """
    (c, γ̃) read off the one-dimensional dual of C_{n-1}(A, B): that dual is spanned by a vector whose
    blocks are ν·σ^j(γ̃)·a^(ci), so c comes from the block ratio and ν from σ-ratios inside block 0.
    """
    tower, a, ell = code.tower, code.a, code.ell
    parent = build_genmat(tower, code.n - 1, code.A, code.B)
    null = dual_matrix(parent)
    if null.shape[0] != 1:
        raise VerificationFailed(f"Dual of C_(n-1) has dimension {null.shape[0]}, expected 1.")
    alpha = null[0].reshape(ell, code.N)
    if np.any(alpha == 0):
        raise VerificationFailed("Dual vector of C_(n-1) has a zero entry.")
    c = 0
    if ell > 1:
        c = _discrete_log(tower, a, alpha[1, 0] / alpha[0, 0], ell)
        if c is None:
            raise VerificationFailed("Block ratio of the dual vector is not a power of a.")
    if code.N > 1:
        nu = _hilbert90(tower, alpha[0, 1] / tower.sigma(alpha[0, 0], 1))
        if nu is None:
            raise VerificationFailed("No solution to the Hilbert 90 equation.")
    else:
        nu = tower.GF(1)
    return c, alpha[0, 0] / nu


def _dual_candidates(code: LRSCode, delta: int) -> Iterator[Tuple[int, object]]:
    """ The constructive pair and its σ-conjugates, then every normal γ with every c """
    tower = code.tower
    try:
        c0, gamma_tilde = constructive_dual_parameters(code)
    except VerificationFailed as e:
        logger.debug(f"No constructive dual parameters: {e.detail}")
    else:
        yield c0, tower.sigma(gamma_tilde, -code.n + delta)
        for w in range(tower.params.m):
            for c in range(code.ell):
                yield c, tower.sigma(gamma_tilde, w)
    for gamma in tower.normal_elements():
        for c in range(code.ell):
            yield c, gamma


def dual_csc_lrs(code: LRSCode) -> Tuple[int, object, LRSCode]:
    """
    (c, γ, dual) with dual = C_{n-k}(A, B') and B'_i = {γ a^(ci), σ(γ) a^(ci), ...}, verified by
    orthogonality; the first verified pair in candidate order is returned, so VerificationFailed means
    no shaped dual exists.
    """
    if code.a is None:
        raise AssumptionViolated("Dual parameters need a code built by csc_lrs.")
    tower, n, k = code.tower, code.n, code.k
    if k >= n:
        raise AssumptionViolated(f"k={k} leaves no dual of positive dimension.")
    for c, gamma in _dual_candidates(code, k + 1):
        if not tower.is_normal(gamma):
            continue
        dual = build_genmat(tower, n - k, code.A, csc_basis(tower, code.a, gamma, c))
        if not np.any(code.genmat @ dual.T):
            logger.debug(f"Dual of C_{k} found with c={c}, gamma={tower.element_text(gamma)}")
            return c, gamma, LRSCode(tower, n - k, code.A, csc_basis(tower, code.a, gamma, c), dual,
                                     a=code.a, beta=gamma, b=c)
    raise VerificationFailed(f"No dual of the form C_{n - k}(A, B') for k={k}.")


def is_msrd(code: LRSCode, budget: int = SUMRANK_MSRD_BUDGET) -> bool:
    """ Brute-force check that d_SR = n - k + 1 over F_q ⊆ F_{q^m} """
    distance = min_sum_rank_distance_bruteforce(code.tower, code.genmat, code.ell, code.N, Extension.large, budget)
    return distance == code.n - code.k + 1
