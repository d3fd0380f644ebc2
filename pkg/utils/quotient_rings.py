import logging
from functools import cached_property
from typing import List, Optional, Sequence, Tuple
import galois
import numpy as np
from utils.const import NOT_ROOT_OF_UNITY_MSG, ZERO_BETA_MSG
from utils.errors import (ComponentCountMismatch, ComponentFieldMismatch, CrossCheckMismatch,
                          LengthMismatch, NonCoprimeFactors, NotRootOfUnity, PDividesEll, ZeroBeta)
from utils.gf_tower import Tower
from utils.skew_poly import SkewPoly, conjugate_of_one, evaluate

logger = logging.getLogger(__name__)


def cyclic_mul(a, b, ell: int):
    """ Product in F[x]/(x^ell - 1) of two length-ell coefficient vectors """
    full = np.convolve(a, b)
    out = full[:ell].copy()
    out[: full.size - ell] += full[ell:]
    return out


def poly_to_vector(poly: galois.Poly, size: int):
    coeffs = poly.coeffs[::-1]
    out = type(coeffs).Zeros(size)
    out[: coeffs.size] = coeffs
    return out


class SElem:
    """ Element of S = F[x]/(x^ell - 1); σ acts on coefficients and fixes x """

    def __init__(self, tower: Tower, ell: int, coeffs=()):
        self.tower = tower
        self.ell = ell
        coeffs = tower.GF(coeffs).reshape(-1)
        self.coeffs = tower.GF.Zeros(ell)
        for i, c in enumerate(coeffs):
            self.coeffs[i % ell] += c

    @classmethod
    def x_power(cls, tower: Tower, ell: int, u: int):
        coeffs = tower.GF.Zeros(ell)
        coeffs[u % ell] = 1
        return cls(tower, ell, coeffs)

    @classmethod
    def from_poly(cls, tower: Tower, ell: int, poly: galois.Poly):
        return cls(tower, ell, poly.coeffs[::-1])

    def __eq__(self, other) -> bool:
        return isinstance(other, SElem) and np.array_equal(self.coeffs, other.coeffs)

    def __add__(self, other: "SElem") -> "SElem":
        return SElem(self.tower, self.ell, self.coeffs + other.coeffs)

    def __sub__(self, other: "SElem") -> "SElem":
        return SElem(self.tower, self.ell, self.coeffs - other.coeffs)

    def __mul__(self, other: "SElem") -> "SElem":
        return SElem(self.tower, self.ell, cyclic_mul(self.coeffs, other.coeffs, self.ell))

    def sigma(self, k: int = 1) -> "SElem":
        return SElem(self.tower, self.ell, self.tower.sigma(self.coeffs, k))

    def __call__(self, a):
        a = self.tower.GF(a)
        return np.sum(self.coeffs * self.tower.GF([int(a ** i) for i in range(self.ell)]))

    @property
    def is_zero(self) -> bool:
        return not np.any(self.coeffs)


class BivarElem:
    """
    Element of S[z;σ], stored as a (rows, ell) array whose row j is the coefficient of z^j.
    With N set it lives in R = S[z;σ]/(z^N - 1) and z^N = 1 is applied eagerly.
    """

    def __init__(self, tower: Tower, ell: int, coeffs=None, N: Optional[int] = None):
        self.tower = tower
        self.ell = ell
        self.N = N
        coeffs = tower.GF.Zeros((0, ell)) if coeffs is None else tower.GF(coeffs).reshape(-1, ell)
        if N is None:
            nonzero = np.flatnonzero(np.any(coeffs != 0, axis=1))
            self.coeffs = coeffs[: nonzero[-1] + 1].copy() if nonzero.size else tower.GF.Zeros((0, ell))
        else:
            self.coeffs = tower.GF.Zeros((N, ell))
            for j, row in enumerate(coeffs):
                self.coeffs[j % N] += row

    @classmethod
    def one(cls, tower: Tower, ell: int, N: Optional[int] = None):
        return cls.monomial(tower, ell, 0, 0, N)

    @classmethod
    def monomial(cls, tower: Tower, ell: int, u: int, v: int, N: Optional[int] = None, constant=1):
        """ constant·x^u·z^v """
        coeffs = tower.GF.Zeros((v + 1, ell))
        coeffs[v, u % ell] = constant
        return cls(tower, ell, coeffs, N)

    @classmethod
    def z_power_minus_one(cls, tower: Tower, ell: int, k: int):
        """ z^k - 1 in S[z;σ] """
        return cls.monomial(tower, ell, 0, k) - cls.one(tower, ell)

    @property
    def z_degree(self):
        nonzero = np.flatnonzero(np.any(self.coeffs != 0, axis=1))
        return int(nonzero[-1]) if nonzero.size else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def row(self, j: int) -> SElem:
        if j >= self.coeffs.shape[0]:
            return SElem(self.tower, self.ell)
        return SElem(self.tower, self.ell, self.coeffs[j])

    def _padded(self, rows: int):
        out = self.tower.GF.Zeros((rows, self.ell))
        out[: self.coeffs.shape[0]] = self.coeffs
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarElem) or self.N != other.N:
            return False
        rows = max(self.coeffs.shape[0], other.coeffs.shape[0])
        return np.array_equal(self._padded(rows), other._padded(rows))

    def __add__(self, other: "BivarElem") -> "BivarElem":
        rows = max(self.coeffs.shape[0], other.coeffs.shape[0])
        return BivarElem(self.tower, self.ell, self._padded(rows) + other._padded(rows), self.N)

    def __sub__(self, other: "BivarElem") -> "BivarElem":
        rows = max(self.coeffs.shape[0], other.coeffs.shape[0])
        return BivarElem(self.tower, self.ell, self._padded(rows) - other._padded(rows), self.N)

    def __mul__(self, other: "BivarElem") -> "BivarElem":
        """ (f_j z^j)(g_k z^k) = f_j σ^j(g_k) z^(j+k) """
        rows = self.coeffs.shape[0] + other.coeffs.shape[0] - 1
        out = self.tower.GF.Zeros((max(rows, 0), self.ell))
        for j, fj in enumerate(self.coeffs):
            if not np.any(fj):
                continue
            twisted = self.tower.sigma(other.coeffs, j)
            for k, gk in enumerate(twisted):
                out[j + k] += cyclic_mul(fj, gk, self.ell)
        return BivarElem(self.tower, self.ell, out, self.N or other.N)

    def times_s(self, s: SElem) -> "BivarElem":
        """ s(x)·f, with s of z-degree zero """
        out = self.tower.GF.Zeros(self.coeffs.shape)
        for j, row in enumerate(self.coeffs):
            out[j] = cyclic_mul(s.coeffs, row, self.ell)
        return BivarElem(self.tower, self.ell, out, self.N)

    def reduce(self, N: int) -> "BivarElem":
        return BivarElem(self.tower, self.ell, self.coeffs, N)


def _check_length(vector, ell: int, N: int):
    if vector.size != ell * N:
        raise LengthMismatch(f"Vector of length {vector.size} is not partitioned as {ell} blocks of {N}.")


def mu(tower: Tower, vector, ell: int, N: int):
    """ Coordinates in R' = F[x]/(x^ell - 1) ⊗ F[z]/(z^N - 1): entry [i, j] multiplies x^i z^j """
    vector = tower.GF(vector).reshape(-1)
    _check_length(vector, ell, N)
    return vector.reshape(ell, N).copy()


def mu_inverse(coords):
    return coords.reshape(-1).copy()


def nu(tower: Tower, vector, ell: int, N: int) -> BivarElem:
    """ c ↦ Σ_j c_j(x) z^j with c_j(x) = Σ_i c^(i)_j x^i """
    vector = tower.GF(vector).reshape(-1)
    _check_length(vector, ell, N)
    return BivarElem(tower, ell, vector.reshape(ell, N).T, N)


def nu_inverse(f: BivarElem, N: Optional[int] = None):
    N = N or f.N
    return f.reduce(N).coeffs.T.reshape(-1).copy()


def cyclotomic_cosets(base: int, ell: int) -> List[Tuple[int, ...]]:
    """ Orbits of {0..ell-1} under multiplication by base, ordered by smallest element """
    seen = set()
    cosets = []
    for j in range(ell):
        if j in seen:
            continue
        orbit = []
        x = j
        while x not in orbit:
            orbit.append(x)
            x = x * base % ell
        cosets.append(tuple(sorted(orbit)))
        seen.update(orbit)
    return cosets


def coset_base(tower: Tower) -> int:
    """ q0^m mod ell """
    params = tower.params
    return pow(params.q0, params.m, params.ell)


class CycFactorization:
    """ x^ell - 1 = Π m_i(x) over F, one factor per q0^m-cyclotomic coset """

    def __init__(self, tower: Tower, a, cosets: List[Tuple[int, ...]], factors: List[galois.Poly]):
        self.tower = tower
        self.a = tower.GF(a)
        self.ell = tower.params.ell
        self.cosets = cosets
        self.factors = factors

    @property
    def reps(self) -> List[int]:
        return [coset[0] for coset in self.cosets]

    @property
    def degrees(self) -> List[int]:
        return [len(coset) for coset in self.cosets]

    @property
    def roots(self):
        """ a_i = a^(j_i) for each coset representative j_i """
        return self.tower.GF([int(self.a ** j) for j in self.reps])

    def coset_index(self, exponent: int) -> int:
        exponent %= self.ell
        for i, coset in enumerate(self.cosets):
            if exponent in coset:
                return i
        raise ValueError(f"Exponent {exponent} is in no coset.")

    def shift_to_rep(self, exponent: int) -> Tuple[int, int]:
        """ (i, h) with exponent·q0^(hm) ≡ j_i (mod ell) """
        i = self.coset_index(exponent)
        base = coset_base(self.tower)
        value = exponent % self.ell
        for h in range(self.degrees[i]):
            if value == self.reps[i]:
                return i, h
            value = value * base % self.ell
        raise AssertionError(f"Exponent {exponent} never reaches its representative.")

    def exponent_of(self, root) -> int:
        """ j with a^j = root, for an ell-th root of unity """
        root = self.tower.GF(root)
        for j in range(self.ell):
            if self.a ** j == root:
                return j
        raise NotRootOfUnity(NOT_ROOT_OF_UNITY_MSG)

    @cached_property
    def idempotents(self) -> List[SElem]:
        return primitive_idempotents(self)


def factor_cyclotomic(tower: Tower, a=None) -> CycFactorization:
    params = tower.params
    if params.ell % params.p == 0:
        raise PDividesEll(f"p={params.p} divides ell={params.ell}.")
    a = tower.primitive_root_of_unity if a is None else tower.GF(a)
    if a ** params.ell != 1:
        raise NotRootOfUnity(NOT_ROOT_OF_UNITY_MSG)
    cosets = cyclotomic_cosets(coset_base(tower), params.ell)
    factors = []
    for coset in cosets:
        factor = galois.Poly.Roots(tower.GF([int(a ** j) for j in coset]), field=tower.GF)
        assert tower.all_in_subfield(factor.coeffs, tower.small_degree), "m_i(x) is not defined over F"
        factors.append(factor)
    product = galois.Poly.One(field=tower.GF)
    for factor in factors:
        product = product * factor
    assert product == x_ell_minus_one(tower, params.ell)
    return CycFactorization(tower, a, cosets, factors)


def x_ell_minus_one(tower: Tower, ell: int) -> galois.Poly:
    return galois.Poly.Degrees([ell], field=tower.GF) - galois.Poly.One(field=tower.GF)


def primitive_idempotents(fact: CycFactorization) -> List[SElem]:
    """ e_i(x) = a_i(x)·(x^ell - 1)/m_i(x), from the Bézout identity a_i·M_i + b_i·m_i = 1 """
    tower, ell = fact.tower, fact.ell
    modulus = x_ell_minus_one(tower, ell)
    idempotents = []
    for factor in fact.factors:
        cofactor = modulus // factor
        divisor, a_i, _ = galois.egcd(cofactor, factor)
        if divisor.degree != 0:
            raise NonCoprimeFactors(f"gcd of cofactor and factor has degree {divisor.degree}.")
        idempotents.append(SElem.from_poly(tower, ell, (a_i * cofactor) % modulus))

    one = SElem(tower, ell, [1])
    total = SElem(tower, ell)
    for i, e_i in enumerate(idempotents):
        assert e_i * e_i == e_i and e_i.sigma() == e_i
        for j in range(i + 1, len(idempotents)):
            assert (e_i * idempotents[j]).is_zero
        total = total + e_i
    assert total == one
    return idempotents


def ev_partial(a, f: BivarElem) -> SkewPoly:
    """ Ev_{a,z}: substitute x := a in every z-coefficient """
    tower = f.tower
    a = tower.GF(a)
    if a ** f.ell != 1:
        raise NotRootOfUnity(NOT_ROOT_OF_UNITY_MSG)
    powers = tower.GF([int(a ** i) for i in range(f.ell)])
    if f.coeffs.shape[0] == 0:
        return SkewPoly(tower)
    return SkewPoly(tower, f.coeffs @ powers)


def ev_total(a, beta, f: BivarElem):
    """ Ev_{a,β}(f) = f(a, 1^β), cross-checked against (Σ_j f_j(a) σ^j(β))·β^(-1) """
    tower = f.tower
    beta = tower.GF(beta)
    if beta == 0:
        raise ZeroBeta(ZERO_BETA_MSG)
    partial = ev_partial(a, f)
    arithmetic = evaluate(partial, conjugate_of_one(tower, beta))
    if partial.is_zero:
        linearized = tower.GF(0)
    else:
        linearized = np.sum(partial.coeffs * tower.sigma_orbit(beta, partial.coeffs.size)) / beta
    if arithmetic != linearized:
        raise CrossCheckMismatch("Total evaluation disagrees between its two formulas.")
    return arithmetic


def crt_rho(f: BivarElem, fact: CycFactorization) -> List[SkewPoly]:
    """ Components f(a_i, z) in F_{q0^(m d_i)}[z;σ], one per coset """
    return [ev_partial(root, f) for root in fact.roots]


def lift_component(component: SkewPoly, i: int, fact: CycFactorization, rows: int) -> BivarElem:
    """ Preimage with F-coefficients of a component, by interpolation at the coset roots """
    tower, params = fact.tower, fact.tower.params
    root = fact.roots[i]
    xs = tower.GF([int(tower.q0_power(root, h * params.m)) for h in range(fact.degrees[i])])
    coeffs = tower.GF.Zeros((rows, fact.ell))
    for j in range(min(rows, component.coeffs.size)):
        c = component.coeffs[j]
        ys = tower.GF([int(tower.q0_power(c, h * params.m)) for h in range(fact.degrees[i])])
        interpolant = galois.lagrange_poly(xs, ys)
        if not tower.all_in_subfield(interpolant.coeffs, tower.small_degree):
            raise ComponentFieldMismatch(f"Component {i} has a coefficient outside F_q0^(m d_i).")
        coeffs[j] = poly_to_vector(interpolant, fact.ell)
    return BivarElem(tower, fact.ell, coeffs)


def crt_inverse(components: Sequence[SkewPoly], fact: CycFactorization, N: Optional[int] = None) -> BivarElem:
    """ f = Σ e_i(x)·lift(f_i) """
    if len(components) != len(fact.cosets):
        raise ComponentCountMismatch(f"Expected {len(fact.cosets)} components, got {len(components)}.")
    tower = fact.tower
    rows = max([component.coeffs.size for component in components] + [1])
    total = BivarElem(tower, fact.ell, None, N)
    for i, component in enumerate(components):
        lifted = lift_component(component, i, fact, rows)
        term = lifted.times_s(fact.idempotents[i])
        total = total + (term.reduce(N) if N else term)
    return total
