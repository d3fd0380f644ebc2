from typing import List
from pydantic import BaseModel


class DecodeResult(BaseModel):
    codeword: List[str]
    message: List[str]
    error_weight: int  # wt^0_SR of the correction
    radius: int
