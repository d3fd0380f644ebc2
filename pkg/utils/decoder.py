import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Optional, Tuple
from weakref import WeakKeyDictionary
import numpy as np
from models.code import Extension
from models.decode import DecodeResult
from utils.const import RADIUS_EXCEEDED_MSG, SUMRANK_BUDGET, SUMRANK_CACHE_LIMIT
from utils.errors import RadiusExceeded, WeightInfeasible
from utils.gf_tower import Tower
from utils.matrices import check_budget, chunks, enumerate_vectors, rank, solve_message
from utils.srbch import SRBCHCode
from utils.sum_rank import weights

logger = logging.getLogger(__name__)


@dataclass
class Decoding:
    codeword: object
    message: object
    error_weight: int
    radius: int

    def to_result(self, tower: Tower) -> DecodeResult:
        return DecodeResult(codeword=tower.vector_text(self.codeword), message=tower.vector_text(self.message),
                            error_weight=self.error_weight, radius=self.radius)


# engine(code, received, budget) -> codeword within the radius, or None
Engine = Callable[[SRBCHCode, object, int], Optional[object]]
ENGINES: Dict[str, Engine] = {}
_codeword_cache: "WeakKeyDictionary[SRBCHCode, Dict[str, Tuple]]" = WeakKeyDictionary()


def register_engine(name: str):
    """ Decorator adding a decoding engine to the registry """
    def decorator(engine: Engine) -> Engine:
        ENGINES[name] = engine
        return engine
    return decorator


def _codeword_chunks(code: SRBCHCode, key: str, generator, field_degree: int, budget: int) -> Iterator[Tuple]:
    """ (messages, codewords) in chunks; small codes are enumerated once and cached """
    tower = code.tower
    cached = _codeword_cache.get(code, {}).get(key)
    if cached is not None:
        yield cached
        return
    scalars = tower.subfield_elements(field_degree)
    k = generator.shape[0]
    total = scalars.size ** k
    check_budget(total, budget)
    if k == 0:
        yield tower.GF.Zeros((1, 0)), tower.GF.Zeros((1, code.n))
        return
    if total <= SUMRANK_CACHE_LIMIT:
        messages = enumerate_vectors(scalars, k, 0, total)
        _codeword_cache.setdefault(code, {})[key] = (messages, messages @ generator)
        yield _codeword_cache[code][key]
        return
    for indices in chunks(total):
        messages = enumerate_vectors(scalars, k, indices.start, indices.stop)
        yield messages, messages @ generator


def _nearest(code: SRBCHCode, key: str, generator, received, extension: Extension, budget: int):
    """ Closest codeword of the code spanned by `generator` and its distance """
    tower = code.tower
    _, field_degree = tower.extension_degrees(extension)
    best, best_message, best_distance = None, None, code.n + 1
    for messages, codewords in _codeword_chunks(code, key, generator, field_degree, budget):
        distances = weights(tower, received[np.newaxis, :] - codewords, tower.params.ell, tower.params.m, extension)
        index = int(np.argmin(distances))
        if distances[index] < best_distance:
            best, best_message, best_distance = codewords[index], messages[index], int(distances[index])
    return best, best_message, best_distance


@register_engine("nearest")
def nearest_engine(code: SRBCHCode, received, budget: int):
    """ Exhaustive nearest codeword in the SR-BCH code under wt^0_SR """
    codeword, _, distance = _nearest(code, "nearest", code.genmat, received, Extension.small, budget)
    return codeword if distance <= code.radius else None


@register_engine("parent")
def parent_engine(code: SRBCHCode, received, budget: int):
    """ Nearest codeword in the parent code over F_{q^m} under wt_SR, kept only if it lies in F^n """
    codeword, _, distance = _nearest(code, "parent", code.parent_genmat, received, Extension.large, budget)
    if distance > code.radius or not code.contains(codeword):
        return None
    return codeword


def select_engine(code: SRBCHCode, budget: int) -> str:
    """ The parent path when the parent code is enumerable, otherwise the SR-BCH code itself """
    tower = code.tower
    parent_size = tower.GF.order ** code.parent_genmat.shape[0]
    return "parent" if parent_size <= budget else "nearest"


def decode(code: SRBCHCode, received, budget: int = SUMRANK_BUDGET, engine: Optional[str] = None) -> Decoding:
    tower = code.tower
    received = code.check_vector(received, code.n)
    name = engine or select_engine(code, budget)
    codeword = ENGINES[name](code, received, budget)
    if codeword is None:
        raise RadiusExceeded(RADIUS_EXCEEDED_MSG.format(radius=code.radius))
    error_weight = int(weights(tower, received - codeword, tower.params.ell, tower.params.m, Extension.small)[0])
    if error_weight > code.radius:
        raise RadiusExceeded(RADIUS_EXCEEDED_MSG.format(radius=code.radius))
    message = solve_message(code.genmat, codeword)
    assert message is not None, "decoded word is not in the code"
    logger.debug(f"Decoded with engine {name}, error weight {error_weight}")
    return Decoding(codeword=codeword, message=message, error_weight=error_weight, radius=code.radius)


def _random_full_rank(tower: Tower, scalars, rows: int, cols: int, rng: np.random.Generator):
    while True:
        matrix = scalars[rng.integers(0, scalars.size, size=(rows, cols))]
        if rank(matrix) == min(rows, cols):
            return matrix


def sample_error(tower: Tower, ell: int, N: int, weight: int, extension: Extension = Extension.small,
                 rng: Optional[np.random.Generator] = None):
    """ Random vector of exact sum-rank weight `weight`, built block by block from rank-r products X·Y """
    rng = rng or np.random.default_rng()
    base_degree, field_degree = tower.extension_degrees(extension)
    r_max = field_degree // base_degree
    capacity = min(r_max, N)
    if not 0 <= weight <= ell * capacity:
        raise WeightInfeasible(f"Weight {weight} is outside 0..{ell * capacity}.")
    ranks = np.zeros(ell, dtype=int)
    for _ in range(weight):
        open_blocks = np.flatnonzero(ranks < capacity)
        ranks[rng.choice(open_blocks)] += 1

    scalars = tower.subfield_elements(base_degree)
    blocks = []
    for r in ranks:
        if r == 0:
            blocks.append(tower.GF.Zeros(N))
            continue
        matrix = _random_full_rank(tower, scalars, r_max, r, rng) @ _random_full_rank(tower, scalars, r, N, rng)
        blocks.append(tower.from_coordinates(matrix.T, base_degree, field_degree))
    return np.concatenate(blocks)
