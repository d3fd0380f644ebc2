from enum import Enum
from typing import List
from pydantic import BaseModel, Field
from models.tower import TowerParams


class Extension(Enum):
    small: str = "small"  # F_q0 ⊆ F, the metric of wt^0_SR
    large: str = "large"  # F_q ⊆ F_q^m


class CodeRequest(BaseModel):
    tower: TowerParams
    b: int = Field(0, ge=0)
    delta: int = Field(..., ge=2)


class CosetStructureRecord(BaseModel):
    coset: List[int]
    degree: int
    exponents: List[int]  # J_i
    shifts: List[int]  # h_lambda, one per element of J_i
    subspace: List[str]  # F_q-basis of V_i
    dimension: int


class CodeRecord(BaseModel):
    tower: TowerParams
    b: int
    delta: int
    a: str
    beta: str
    n: int
    exact_dim: int
    singleton: int
    eq33: int
    delsarte: int
    generator_matrix: List[List[str]]
    structure: List[CosetStructureRecord] = []


class ComponentRecord(BaseModel):
    coset: List[int]
    coefficients: List[str]  # g_i, lowest degree first


class CSCRecord(BaseModel):
    tower: TowerParams
    ell: int
    N: int
    components: List[ComponentRecord]


class EncodeRequest(BaseModel):
    code: CodeRequest
    message: List[str]


class DecodeRequest(BaseModel):
    code: CodeRequest
    received: List[str]


class EncodeResult(BaseModel):
    codeword: List[str]


class MinDistResult(BaseModel):
    min_distance: int
    delta: int
    dimension: int
