import logging
from typing import Callable, List, Optional
import numpy as np
from models.table import CheckResult
from utils.const import SUMRANK_MSRD_BUDGET
from utils.csc import (dimension_from_defining_set, defining_set, from_components, is_csc, is_left_ideal,
                       largest_csc_from_root_pairs)
from utils.errors import SumRankError, VerificationFailed
from utils.gf_tower import Tower
from utils.lrs import csc_lrs, double_dual_matches, dual_csc_lrs, is_dual, is_msrd
from utils.matrices import rank
from utils.quotient_rings import BivarElem, crt_inverse, crt_rho, ev_partial, ev_total, factor_cyclotomic
from utils.skew_poly import SkewPoly, conjugate_of_one, evaluate, to_linearized
from utils.srbch import construct

logger = logging.getLogger(__name__)


class Checks:
    """ Randomized algebraic checks on one tower, with N = m """

    def __init__(self, tower: Tower, cases: int = 200, seed: int = 0, budget: Optional[int] = None):
        self.tower = tower
        self.cases = cases
        self.budget = budget
        self.rng = np.random.default_rng(seed)
        self.fact = factor_cyclotomic(tower)
        self.ell = tower.params.ell
        self.N = tower.params.m

    def element(self, nonzero: bool = False):
        low = 1 if nonzero else 0
        return self.tower.GF(int(self.rng.integers(low, self.tower.GF.order)))

    def small_elements(self, shape):
        scalars = self.tower.subfield_elements(self.tower.small_degree)
        return scalars[self.rng.integers(0, scalars.size, size=shape)]

    def bivariate(self) -> BivarElem:
        return BivarElem(self.tower, self.ell, self.small_elements((self.N, self.ell)), self.N)

    def random_csc(self):
        pairs = [(int(self.rng.integers(0, self.ell)), self.element(nonzero=True))
                 for _ in range(int(self.rng.integers(0, 3)))]
        return largest_csc_from_root_pairs(self.tower, pairs, self.fact)

    def idempotents(self):
        # primitive_idempotents asserts e_i^2 = e_i, e_i e_j = 0 and Σ e_i = 1
        return len(self.fact.idempotents) == len(self.fact.cosets)

    def crt_round_trip(self):
        for _ in range(self.cases):
            f = self.bivariate()
            if crt_inverse(crt_rho(f, self.fact), self.fact, self.N) != f:
                return False
        return True

    def partial_multiplicative(self):
        """ Ev_{a,z} is a ring morphism R -> F_{q^m}[z;σ]/(z^N - 1) """
        for _ in range(self.cases):
            f = BivarElem(self.tower, self.ell, self.bivariate().coeffs)
            g = BivarElem(self.tower, self.ell, self.bivariate().coeffs)
            product = f * g
            for root in self.fact.roots:
                if ev_partial(root, product) != ev_partial(root, f) * ev_partial(root, g):
                    return False
        return True

    def product_rule(self):
        """ Ev_{a,β}(fg) = Ev_{a,βc}(f)·c with c = Ev_{a,β}(g), which is 0 when c = 0 """
        a = self.fact.a
        for _ in range(self.cases):
            f, g = self.bivariate(), self.bivariate()
            root = a ** int(self.rng.integers(0, self.ell))
            beta = self.element(nonzero=True)
            c = ev_total(root, beta, g)
            expected = ev_total(root, beta * c, f) * c if c != 0 else 0
            if ev_total(root, beta, f * g) != expected:
                return False
        for _ in range(self.cases // 10 + 1):
            code = self.random_csc()
            f = self.bivariate()
            ds = defining_set(code)
            for rep, basis in zip(ds.reps, ds.bases):
                if any(ev_total(a ** rep, beta, f * code.g) != 0 for beta in basis):
                    return False
        return True

    def total_evaluation(self):
        # ev_total raises CrossCheckMismatch when its two formulas disagree
        for _ in range(self.cases):
            ev_total(self.fact.roots[int(self.rng.integers(0, len(self.fact.roots)))], self.element(nonzero=True),
                     self.bivariate())
        return True

    def arithmetic_linearized(self):
        """ f(1^β)·β equals the linearized evaluation of f at β """
        for _ in range(self.cases):
            f = SkewPoly(self.tower, [int(self.element()) for _ in range(self.N + 1)])
            beta = self.element(nonzero=True)
            if evaluate(f, conjugate_of_one(self.tower, beta)) * beta != to_linearized(f)(beta):
                return False
        return True

    def ideal_equivalence(self):
        n = self.ell * self.N
        for case in range(self.cases):
            if case % 2:
                basis = self.random_csc().generator_matrix
            else:
                basis = self.small_elements((int(self.rng.integers(1, n + 1)), n))
            if is_csc(self.tower, basis, self.ell, self.N) != is_left_ideal(self.tower, basis, self.ell, self.N):
                return False
        return True

    def generator_check_product(self):
        # from_components asserts g·h = h·g = z^N - 1
        for _ in range(self.cases):
            code = self.random_csc()
            if rank(code.generator_matrix) != code.dimension:
                return False
            rebuilt = from_components(self.tower, self.N, code.components, self.fact)
            if rebuilt.g != code.g:
                return False
        return True

    def defining_set_dimension(self):
        n = self.ell * self.N
        for _ in range(self.cases):
            code = self.random_csc()
            if dimension_from_defining_set(defining_set(code), self.fact, n) != code.dimension:
                return False
        return True

    def srbch_dimensions(self):
        """ Structure, subfield subcode rank and defining-set dimension agree """
        n = self.ell * self.N
        for delta in range(2, n + 1):
            for b in range(self.ell):
                code = construct(self.tower, b, delta)
                csc = code.as_csc()
                from_defining = dimension_from_defining_set(defining_set(csc), self.fact, n)
                if not code.exact_dim == code.dimension == from_defining == csc.dimension:
                    return False
        return True

    def duality(self):
        tower = self.tower
        a, beta = tower.primitive_root_of_unity, tower.normal_element
        n = self.ell * self.N
        shaped = self.N <= 2 or self.ell <= 2
        for k in range(1, n):
            code = csc_lrs(tower, a, beta, 0, k)
            if not double_dual_matches(code.genmat):
                return False
            try:
                _, _, dual = dual_csc_lrs(code)
            except VerificationFailed:
                if shaped:
                    return False
                continue
            if not is_dual(code.genmat, dual.genmat):
                return False
        return True

    def msrd(self):
        tower = self.tower
        a, beta = tower.primitive_root_of_unity, tower.normal_element
        n = self.ell * self.N
        for k in range(1, n + 1):
            if tower.GF.order ** k > (self.budget or SUMRANK_MSRD_BUDGET):
                break
            if not is_msrd(csc_lrs(tower, a, beta, 0, k)):
                return False
        return True

    def all(self) -> List[Callable[[], bool]]:
        return [self.idempotents, self.crt_round_trip, self.partial_multiplicative, self.product_rule,
                self.total_evaluation, self.arithmetic_linearized, self.ideal_equivalence,
                self.generator_check_product, self.defining_set_dimension, self.srbch_dimensions, self.duality,
                self.msrd]


def run_suite(tower: Tower, cases: int = 200, seed: int = 0, budget: Optional[int] = None) -> List[CheckResult]:
    checks = Checks(tower, cases, seed, budget)
    results = []
    for check in checks.all():
        name = check.__name__
        try:
            passed, detail = bool(check()), ""
        except (SumRankError, AssertionError) as e:
            passed, detail = False, f"{e.__class__.__name__}: {e}"
        if not passed:
            logger.error(f"Check {name} failed on {tower.text()} {detail}")
        results.append(CheckResult(name=name, passed=passed, detail=detail))
    return results
