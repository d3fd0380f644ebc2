from enum import Enum
from typing import List, Optional
from pydantic import BaseModel, Field
from models.tower import TowerParams


class Subcommand(Enum):
    tower: str = "tower"
    table: str = "table"
    construct: str = "construct"
    encode: str = "encode"
    decode: str = "decode"
    mindist: str = "mindist"
    verify: str = "verify"


class CliConfig(BaseModel):
    subcommand: Subcommand
    tower: TowerParams
    deltas: List[int] = []
    bs: List[int] = []
    preset: Optional[str] = None
    exact: bool = False
    budget: int = Field(..., gt=0)
    jobs: int = Field(1, ge=1)
    output: Optional[str] = None
    code: Optional[str] = None
    values: List[str] = []
    cases: int = Field(200, gt=0)
    seed: int = 0

    class Config:
        use_enum_values = True
