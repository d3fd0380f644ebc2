import logging
from typing import List
from fastapi import APIRouter, HTTPException, Query
from starlette.status import HTTP_201_CREATED, HTTP_400_BAD_REQUEST, HTTP_413_REQUEST_ENTITY_TOO_LARGE
from models.code import (CodeRecord, CodeRequest, DecodeRequest, EncodeRequest, EncodeResult, Extension,
                         MinDistResult)
from models.decode import DecodeResult
from models.table import TableRow
from models.tower import TowerInfo, TowerParams
from utils.const import APPENDIX_BS, SUMRANK_BUDGET
from utils.decoder import decode
from utils.errors import BudgetExceeded, SumRankError
from utils.gf_tower import tower_from_params, tower_info
from utils.srbch import SRBCHCode, appendix_params, appendix_rows, build_code, generate_table
from utils.sum_rank import min_sum_rank_distance_bruteforce

logger = logging.getLogger(__name__)

app = APIRouter()


def http_error(e: SumRankError) -> HTTPException:
    logger.info(f"Request failed: {e.__class__.__name__}: {e.detail}")
    if isinstance(e, BudgetExceeded):
        return HTTPException(status_code=HTTP_413_REQUEST_ENTITY_TOO_LARGE, detail=e.detail)
    return HTTPException(status_code=HTTP_400_BAD_REQUEST, detail=f"{e.__class__.__name__}: {e.detail}")


def get_code(request: CodeRequest) -> SRBCHCode:
    return build_code(request.tower, request.b, request.delta)


@app.get('/towers', response_model=TowerInfo, tags=['Towers'])
def get_tower(p: int = 2, e: int = 1, m: int = 2, s: int = Query(..., gt=0), ell: int = Query(None, gt=0)):
    try:
        params = TowerParams(p=p, e=e, m=m, s=s, ell=ell or (p ** e) ** s - 1)
        return tower_info(tower_from_params(params))
    except SumRankError as e:
        raise http_error(e)


@app.get('/tables', response_model=List[TableRow], tags=['Tables'])
def get_table(s: int = Query(..., gt=0), delta: List[int] = Query([]), b: List[int] = Query([]),
              exact: bool = False):
    """ Bound table for q0 = 2, m = 2, ell = 2^s - 1; the appendix rows unless deltas are given """
    try:
        params = appendix_params(s)
        rows = [(d, b_) for d in delta for b_ in (b or APPENDIX_BS)] if delta else appendix_rows(s)
        return generate_table(params, rows, exact=exact)
    except SumRankError as e:
        raise http_error(e)


@app.post('/codes', status_code=HTTP_201_CREATED, response_model=CodeRecord, tags=['Codes'])
def post_code(request: CodeRequest):
    try:
        return get_code(request).to_record()
    except SumRankError as e:
        raise http_error(e)


@app.post('/codes/encode', response_model=EncodeResult, tags=['Codes'])
def post_encode(request: EncodeRequest):
    try:
        code = get_code(request.code)
        codeword = code.encode(code.tower.parse_vector(request.message))
        return EncodeResult(codeword=code.tower.vector_text(codeword))
    except SumRankError as e:
        raise http_error(e)


@app.post('/codes/decode', response_model=DecodeResult, tags=['Codes'])
def post_decode(request: DecodeRequest):
    try:
        code = get_code(request.code)
        return decode(code, code.tower.parse_vector(request.received)).to_result(code.tower)
    except SumRankError as e:
        raise http_error(e)


@app.post('/codes/mindist', response_model=MinDistResult, tags=['Codes'])
def post_mindist(request: CodeRequest):
    try:
        code = get_code(request)
        params = request.tower
        distance = min_sum_rank_distance_bruteforce(code.tower, code.genmat, params.ell, params.m, Extension.small,
                                                    SUMRANK_BUDGET)
        return MinDistResult(min_distance=distance, delta=code.delta, dimension=code.dimension)
    except SumRankError as e:
        raise http_error(e)
