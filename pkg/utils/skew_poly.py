import logging
from typing import Iterable, Tuple
import galois
import numpy as np
from utils.errors import BadSubfieldDegree, DivByZero, ZeroBeta
from utils.gf_tower import Tower

logger = logging.getLogger(__name__)


class SkewPoly:
    """
    Element of K[z;σ] with ascending coefficients, multiplied by the rule z·a = σ(a)·z.
    The zero polynomial has no coefficients and degree -inf.
    """

    def __init__(self, tower: Tower, coeffs=()):
        self.tower = tower
        coeffs = tower.GF(coeffs).reshape(-1)
        nonzero = np.flatnonzero(coeffs)
        self.coeffs = coeffs[: nonzero[-1] + 1].copy() if nonzero.size else tower.GF.Zeros(0)

    @classmethod
    def z_power(cls, tower: Tower, k: int, constant=1):
        coeffs = tower.GF.Zeros(k + 1)
        coeffs[k] = constant
        return cls(tower, coeffs)

    @classmethod
    def z_power_minus_one(cls, tower: Tower, k: int):
        return cls.z_power(tower, k) - cls(tower, [1])

    @property
    def degree(self):
        return self.coeffs.size - 1 if self.coeffs.size else float("-inf")

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.coeffs[-1] == 1

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < self.coeffs.size else self.tower.GF(0)

    def padded(self, size: int):
        out = self.tower.GF.Zeros(size)
        out[: self.coeffs.size] = self.coeffs
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewPoly) and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self):
        return f"SkewPoly({self.text()})"

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        size = max(self.coeffs.size, other.coeffs.size)
        return SkewPoly(self.tower, self.padded(size) + other.padded(size))

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        size = max(self.coeffs.size, other.coeffs.size)
        return SkewPoly(self.tower, self.padded(size) - other.padded(size))

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.tower, -self.coeffs)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, other)

    def scale(self, constant) -> "SkewPoly":
        """ constant·f """
        return SkewPoly(self.tower, self.tower.GF(constant) * self.coeffs)

    def sigma(self, k: int = 1) -> "SkewPoly":
        """ σ^k applied to the coefficients """
        return SkewPoly(self.tower, self.tower.sigma(self.coeffs, k))

    def q0_power(self, v: int) -> "SkewPoly":
        return SkewPoly(self.tower, self.tower.q0_power(self.coeffs, v))

    def monic(self) -> "SkewPoly":
        if self.is_zero:
            raise DivByZero("The zero polynomial has no monic associate.")
        return self.scale(self.coeffs[-1] ** -1)

    def reduce_cyclic(self, N: int) -> "SkewPoly":
        """ Reduction modulo z^N - 1, valid when σ^N fixes the coefficients """
        out = self.tower.GF.Zeros(N)
        for i, c in enumerate(self.coeffs):
            out[i % N] += c
        return SkewPoly(self.tower, out)

    def __call__(self, alpha):
        return evaluate(self, alpha)

    def text(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            digits = self.tower.element_text(c)
            terms.append(digits if i == 0 else f"{digits}*z" if i == 1 else f"{digits}*z^{i}")
        return " + ".join(terms)


class LinearizedPoly:
    """ G(y) = Σ G_i y^(q^i), an F_q-linear map of the ambient field """

    def __init__(self, tower: Tower, coeffs):
        self.tower = tower
        self.coeffs = tower.GF(coeffs).reshape(-1)

    def __call__(self, y):
        return lin_evaluate(self, y)

    def compose(self, inner: "LinearizedPoly") -> "LinearizedPoly":
        """ y ↦ self(inner(y)), which corresponds to the skew product self·inner """
        product = SkewPoly(self.tower, self.coeffs) * SkewPoly(self.tower, inner.coeffs)
        return to_linearized(product)


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    tower = f.tower
    if f.is_zero or g.is_zero:
        return SkewPoly(tower)
    out = tower.GF.Zeros(f.coeffs.size + g.coeffs.size - 1)
    for i, fi in enumerate(f.coeffs):
        if fi != 0:
            out[i: i + g.coeffs.size] += fi * tower.sigma(g.coeffs, i)
    return SkewPoly(tower, out)


def right_divide(f: SkewPoly, g: SkewPoly) -> Tuple[SkewPoly, SkewPoly]:
    """ f = quotient·g + remainder with deg(remainder) < deg(g) """
    tower = f.tower
    if g.is_zero:
        raise DivByZero("Right division by the zero skew polynomial.")
    rest = f.coeffs.copy()
    db = g.coeffs.size - 1
    quotient = tower.GF.Zeros(max(rest.size - db, 0))
    for d in range(rest.size - 1, db - 1, -1):
        if rest[d] == 0:
            continue
        shift = d - db
        t = rest[d] / tower.sigma(g.coeffs[-1], shift)
        quotient[shift] = t
        rest[shift: d + 1] -= t * tower.sigma(g.coeffs, shift)
    return SkewPoly(tower, quotient), SkewPoly(tower, rest)


def left_divide(f: SkewPoly, g: SkewPoly) -> Tuple[SkewPoly, SkewPoly]:
    """ f = g·quotient + remainder with deg(remainder) < deg(g) """
    tower = f.tower
    if g.is_zero:
        raise DivByZero("Left division by the zero skew polynomial.")
    rest = f.coeffs.copy()
    db = g.coeffs.size - 1
    quotient = tower.GF.Zeros(max(rest.size - db, 0))
    for d in range(rest.size - 1, db - 1, -1):
        if rest[d] == 0:
            continue
        shift = d - db
        t = tower.sigma(rest[d] / g.coeffs[-1], -db)
        quotient[shift] = t
        rest[shift: d + 1] -= g.coeffs * tower.sigma_orbit(t, db + 1)
    return SkewPoly(tower, quotient), SkewPoly(tower, rest)


def norm_i(tower: Tower, a, i: int):
    """ N_i(a) = σ^(i-1)(a)···σ(a)·a, with N_0(a) = 1 """
    result = tower.GF(1)
    for k in range(i):
        result = result * tower.sigma(tower.GF(a), k)
    return result


def norms(tower: Tower, a, count: int):
    """ N_0(a), ..., N_(count-1)(a) """
    out = tower.GF.Ones(count)
    for i in range(1, count):
        out[i] = out[i - 1] * tower.sigma(tower.GF(a), i - 1)
    return out


def op_D(tower: Tower, a, i: int, b):
    """ D_a^i(b) = σ^i(b)·N_i(a) """
    return tower.sigma(tower.GF(b), i) * norm_i(tower, a, i)


def evaluate(f: SkewPoly, alpha):
    """ Remainder of the right division of f by z - alpha, computed as Σ f_i N_i(alpha) """
    tower = f.tower
    if f.is_zero:
        return tower.GF(0)
    return np.sum(f.coeffs * norms(tower, alpha, f.coeffs.size))


def to_linearized(f: SkewPoly) -> LinearizedPoly:
    return LinearizedPoly(f.tower, f.coeffs)


def lin_evaluate(G: LinearizedPoly, y):
    tower = G.tower
    y = tower.GF(y)
    total = tower.GF.Zeros(y.shape)
    for i, c in enumerate(G.coeffs):
        if c != 0:
            total = total + c * tower.sigma(y, i)
    return total


def conjugate_of_one(tower: Tower, beta):
    """ 1^β = σ(β)β^(-1) """
    beta = tower.GF(beta)
    if beta == 0:
        raise ZeroBeta("The conjugate of 1 needs a nonzero beta.")
    return tower.sigma(beta) / beta


def minimal_linearized_poly(tower: Tower, B: Iterable, d: int) -> SkewPoly:
    """
    Minimal skew polynomial with coefficients in F_{q0^(md)} vanishing, as a linearized map,
    on every element of B.  V is the F_q-span of the F_{q0^(md)}-conjugates of B, and the
    linearized polynomial Π_{v∈V}(y - v) is read off its q-power coefficients.
    """
    params = tower.params
    if d <= 0 or params.s % d:
        raise BadSubfieldDegree(f"d={d} does not divide s={params.s}.")
    values = [int(b) for b in np.asarray(B).reshape(-1)]
    if not values:
        return SkewPoly(tower, [1])
    B = tower.GF(values)
    conjugates = [tower.q0_power(B, u * params.m * d) for u in range(params.s // d)]
    V = tower.span(np.concatenate(conjugates), tower.q_degree)
    product = galois.Poly.Roots(V, field=tower.GF)
    ascending = product.coeffs[::-1]
    q_degrees = [params.q ** i for i in range(params.m + 1) if params.q ** i <= product.degree]
    others = np.ones(ascending.size, dtype=bool)
    others[q_degrees] = False
    assert not np.any(ascending[others]), "subspace polynomial has non q-power terms"
    result = SkewPoly(tower, ascending[q_degrees])
    assert result.is_monic
    assert tower.all_in_subfield(result.coeffs, params.e * params.m * d)
    return result
