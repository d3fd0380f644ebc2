from typing import Optional
from pydantic import BaseModel


class TableRow(BaseModel):
    delta: int
    b: int
    singleton: int
    eq33: int
    delsarte: int
    exact_dim: Optional[int] = None
    beats_delsarte: bool

    def csv_values(self):
        exact = "" if self.exact_dim is None else self.exact_dim
        return [self.delta, self.b, self.singleton, self.eq33, self.delsarte, exact, str(self.beats_delsarte).lower()]


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""
