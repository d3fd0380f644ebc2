from math import gcd
from typing import List
from pydantic import BaseModel, PositiveInt


class TowerParams(BaseModel):
    """ F_p ⊆ F_q0 ⊆ {F = F_q0^m, F_q = F_q0^s} ⊆ F_q^m, with q0 = p^e and q = q0^s """
    p: PositiveInt
    e: PositiveInt = 1
    m: PositiveInt
    s: PositiveInt
    ell: PositiveInt

    class Config:
        frozen = True

    @property
    def q0(self) -> int:
        return self.p ** self.e

    @property
    def q(self) -> int:
        return self.q0 ** self.s

    @property
    def big_degree(self) -> int:
        return self.e * self.s * self.m

    @property
    def n(self) -> int:
        # Code length; N = m throughout
        return self.ell * self.m

    def coprimality_issues(self) -> List[str]:
        """ Standing assumptions of SR-BCH construction that do not hold """
        issues = []
        if gcd(self.ell, self.m) != 1:
            issues.append("ell and m are not coprime")
        if gcd(self.ell, self.q) != 1:
            issues.append("ell and q are not coprime")
        if (self.q - 1) % self.ell:
            issues.append("ell does not divide q - 1")
        return issues

    def text(self, modulus: str) -> str:
        return f"p={self.p},e={self.e},m={self.m},s={self.s},ell={self.ell},modulus={modulus}"


class TowerInfo(BaseModel):
    params: TowerParams
    description: str
    modulus: str
    q0: int
    q: int
    big_degree: int
    n: int
    a: str
    beta: str
