import logging
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, Tuple
import galois
import numpy as np
from models.code import Extension
from models.tower import TowerInfo, TowerParams
from utils.errors import BadDegree, EllNotDividingQMinus1, InvalidVector, NonPrimeP, PDividesEll

logger = logging.getLogger(__name__)


def check_params(params: TowerParams):
    if not galois.is_prime(params.p):
        raise NonPrimeP(f"p={params.p} is not prime.")
    if params.ell % params.p == 0:
        raise PDividesEll(f"p={params.p} divides ell={params.ell}.")
    if (params.q - 1) % params.ell:
        raise EllNotDividingQMinus1(f"ell={params.ell} does not divide q - 1 = {params.q - 1}.")


class Tower:
    """
    The whole tower lives inside one ambient galois field F_{q^m} = GF(p^big_degree).
    Subfields are recognised by x^(p^d) = x, so inclusions are identities.
    Elements are ordered canonically by their integer representation.
    """

    def __init__(self, params: TowerParams):
        check_params(params)
        self.params = params
        self.degree = params.big_degree
        # Lexicographically smallest monic irreducible polynomial of the right degree
        self.modulus = galois.irreducible_poly(params.p, self.degree, method="min")
        if self.degree == 1:
            self.GF = galois.GF(params.p)
        else:
            self.GF = galois.GF(params.p ** self.degree, irreducible_poly=self.modulus)
        self._duals: Dict[Tuple[int, int], Tuple[galois.FieldArray, galois.FieldArray]] = {}
        self._subfields: Dict[int, galois.FieldArray] = {}
        self._root_of_unity = None
        self._normal_element = None
        logger.debug(f"Built tower {self.text()}")

    def __repr__(self):
        return f"Tower({self.text()})"

    # Field degrees over F_p of the named fields
    @property
    def small_degree(self) -> int:
        """ F = F_{q0^m} """
        return self.params.e * self.params.m

    @property
    def q_degree(self) -> int:
        """ F_q = F_{q0^s} """
        return self.params.e * self.params.s

    def extension_degrees(self, extension: Extension) -> Tuple[int, int]:
        """ (degree of K, degree of L) for the extension K ⊆ L the sum-rank metric is taken over """
        if Extension(extension) == Extension.small:
            return self.params.e, self.small_degree
        return self.q_degree, self.degree

    def sigma(self, x, k: int = 1):
        """ σ^k(x) = x^(q^k); σ has order m on the ambient field, so negative k is fine """
        k %= self.params.m
        if k == 0:
            return x.copy()
        return x ** (self.params.q ** k)

    def frobenius(self, x, t: int = 1):
        """ x^(p^t) """
        t %= self.degree
        if t == 0:
            return x.copy()
        return x ** (self.params.p ** t)

    def q0_power(self, x, v: int):
        """ x^(q0^v) """
        return self.frobenius(x, self.params.e * v)

    def sigma_orbit(self, x, count: int):
        """ Rows σ^0(x), ..., σ^(count-1)(x) """
        x = self.GF(x)
        out = self.GF.Zeros((count,) + x.shape)
        for k in range(count):
            out[k] = self.sigma(x, k)
        return out

    def _check_degree(self, subfield_degree: int):
        if subfield_degree <= 0 or self.degree % subfield_degree:
            raise BadDegree(f"{subfield_degree} does not divide {self.degree}.")

    def in_subfield(self, x, subfield_degree: int):
        self._check_degree(subfield_degree)
        x = self.GF(x)
        result = x ** (self.params.p ** subfield_degree) == x
        return bool(result) if np.ndim(result) == 0 else result

    def all_in_subfield(self, values, subfield_degree: int) -> bool:
        values = self.GF(values)
        if values.size == 0:
            return True
        return bool(np.all(self.in_subfield(values.reshape(-1), subfield_degree)))

    def min_subfield_degree(self, values) -> int:
        """ Degree of the smallest subfield containing every value """
        for d in range(1, self.degree + 1):
            if self.degree % d == 0 and self.all_in_subfield(values, d):
                return d
        return self.degree

    def subfield_elements(self, subfield_degree: int):
        """ All elements of the subfield, in canonical order """
        self._check_degree(subfield_degree)
        if subfield_degree not in self._subfields:
            elements = self.GF.elements
            self._subfields[subfield_degree] = elements[self.in_subfield(elements, subfield_degree)]
        return self._subfields[subfield_degree]

    def subfield_generator(self, subfield_degree: int):
        self._check_degree(subfield_degree)
        order = self.GF.order - 1
        return self.GF.primitive_element ** (order // (self.params.p ** subfield_degree - 1))

    def trace(self, y, base_degree: int, field_degree: int = None):
        """ Tr_{L/K}(y) for K of degree base_degree inside L of degree field_degree """
        field_degree = field_degree or self.degree
        y = self.GF(y)
        total = y.copy()
        for t in range(1, field_degree // base_degree):
            total = total + self.frobenius(y, base_degree * t)
        return total

    def basis(self, base_degree: int, field_degree: int = None):
        """ Fixed K-basis of L (powers of a generator of L) and its trace-dual basis """
        field_degree = field_degree or self.degree
        self._check_degree(base_degree)
        self._check_degree(field_degree)
        if field_degree % base_degree:
            raise BadDegree(f"{base_degree} does not divide {field_degree}.")
        key = (base_degree, field_degree)
        if key not in self._duals:
            r = field_degree // base_degree
            theta = self.subfield_generator(field_degree)
            powers = self.GF([int(theta ** i) for i in range(r)])
            gram = self.trace(powers[:, np.newaxis] * powers[np.newaxis, :], base_degree, field_degree)
            dual = np.linalg.inv(gram) @ powers
            self._duals[key] = (powers, dual)
        return self._duals[key]

    def coordinates(self, values, base_degree: int, field_degree: int = None):
        """ K-coordinates of elements of L, appended as a trailing axis of length [L:K] """
        _, dual = self.basis(base_degree, field_degree)
        values = self.GF(values)
        return self.trace(values[..., np.newaxis] * dual, base_degree, field_degree)

    def from_coordinates(self, coords, base_degree: int, field_degree: int = None):
        powers, _ = self.basis(base_degree, field_degree)
        return np.sum(self.GF(coords) * powers, axis=-1)

    def rank_over(self, values, base_degree: int) -> int:
        """ Dimension of the K-span of a list of ambient elements """
        values = self.GF(values).reshape(-1)
        if values.size == 0:
            return 0
        return int(np.linalg.matrix_rank(self.coordinates(values, base_degree)))

    def independent_subset(self, values, base_degree: int):
        """ Greedy K-basis of the span of `values`, keeping input order """
        chosen = []
        for value in self.GF(values).reshape(-1):
            if value != 0 and self.rank_over(self.GF(chosen + [int(value)]), base_degree) == len(chosen) + 1:
                chosen.append(int(value))
        return self.GF(chosen) if chosen else self.GF.Zeros(0)

    def span(self, values, base_degree: int):
        """ Every element of the K-span of `values` """
        basis = self.independent_subset(values, base_degree)
        if basis.size == 0:
            return self.GF.Zeros(1)
        scalars = self.subfield_elements(base_degree)
        digits = np.array(list(product(range(scalars.size), repeat=basis.size)))
        return scalars[digits] @ basis

    def kernel(self, linear_map: Callable):
        """ F_p-basis of the kernel of an F_p-linear map on the ambient field """
        prime = self.GF.prime_subfield
        unit = self.GF.Vector(prime(np.eye(self.degree, dtype=int)))
        images = self.GF(linear_map(unit)).vector()
        null = images.left_null_space()
        if null.shape[0] == 0:
            return self.GF.Zeros(0)
        return self.GF.Vector(null)

    @property
    def primitive_root_of_unity(self):
        """ Smallest element of multiplicative order exactly ell """
        if self._root_of_unity is None:
            ell = self.params.ell
            candidates = self.GF.Range(1, self.GF.order)
            ok = candidates ** ell == 1
            if ell > 1:
                for prime in galois.factors(ell)[0]:
                    ok &= candidates ** (ell // prime) != 1
            self._root_of_unity = candidates[int(np.argmax(ok))]
        return self._root_of_unity

    def is_normal(self, beta) -> bool:
        beta = self.GF(beta)
        if beta == 0:
            return False
        return self.rank_over(self.sigma_orbit(beta, self.params.m), self.q_degree) == self.params.m

    @property
    def normal_element(self):
        """ First element, in canonical order, whose Frobenius orbit is an F_q-basis """
        if self._normal_element is None:
            for value in range(1, self.GF.order):
                if self.is_normal(value):
                    self._normal_element = self.GF(value)
                    break
        return self._normal_element

    def normal_elements(self):
        return self.GF([value for value in range(1, self.GF.order) if self.is_normal(value)])

    # Text forms
    def element_text(self, x) -> str:
        return np.base_repr(int(x), self.params.p).zfill(self.degree)

    def parse_element(self, text: str):
        try:
            return self.GF(int(text, self.params.p))
        except ValueError as e:
            raise InvalidVector(f"{text!r} is not a base-{self.params.p} element of GF({self.GF.order}).") from e

    def vector_text(self, values):
        return [self.element_text(x) for x in self.GF(values).reshape(-1)]

    def parse_vector(self, texts):
        return self.GF([int(self.parse_element(text)) for text in texts])

    def modulus_text(self) -> str:
        return np.base_repr(int(self.modulus), self.params.p)

    def text(self) -> str:
        return self.params.text(self.modulus_text())


@lru_cache(maxsize=None)
def tower_from_params(params: TowerParams) -> Tower:
    return Tower(params)


def build_tower(p: int, e: int, m: int, s: int, ell: int) -> Tower:
    return tower_from_params(TowerParams(p=p, e=e, m=m, s=s, ell=ell))


def tower_info(tower: Tower) -> TowerInfo:
    params = tower.params
    return TowerInfo(params=params, description=tower.text(), modulus=tower.modulus_text(), q0=params.q0, q=params.q,
                     big_degree=params.big_degree, n=params.n, a=tower.element_text(tower.primitive_root_of_unity),
                     beta=tower.element_text(tower.normal_element))
