import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List
import numpy as np
from models.code import Extension
from utils.const import SUMRANK_BUDGET, SUMRANK_JOBS
from utils.errors import BadPartition
from utils.gf_tower import Tower
from utils.matrices import batched_rank, check_budget, chunks, enumerate_vectors

logger = logging.getLogger(__name__)


class PartitionedVector:
    """ Vector of length n = ell·N split into ell blocks; ranks are taken over K ⊆ L """

    def __init__(self, tower: Tower, data, ell: int, N: int, extension: Extension = Extension.small):
        data = tower.GF(data).reshape(-1)
        if data.size != ell * N:
            raise BadPartition(f"Length {data.size} is not {ell} blocks of {N}.")
        base_degree, field_degree = tower.extension_degrees(extension)
        if not tower.all_in_subfield(data, field_degree):
            raise BadPartition(f"Entries do not lie in the field of degree {field_degree}.")
        self.tower = tower
        self.data = data
        self.ell = ell
        self.N = N
        self.extension = Extension(extension)

    @property
    def blocks(self):
        return self.data.reshape(self.ell, self.N)


def block_ranks(tower: Tower, words, ell: int, N: int, extension: Extension = Extension.small) -> np.ndarray:
    """ Per-block K-ranks of a batch of words, shape (count, ell) """
    base_degree, field_degree = tower.extension_degrees(extension)
    words = tower.GF(words).reshape(-1, ell, N)
    count = words.shape[0]
    # (count, ell, N, r) coordinates; each block becomes an r×N matrix over K
    coords = tower.coordinates(words, base_degree, field_degree)
    r = coords.shape[-1]
    mats = np.swapaxes(coords, -1, -2).reshape(count * ell, r, N)
    return batched_rank(mats).reshape(count, ell)


def weights(tower: Tower, words, ell: int, N: int, extension: Extension = Extension.small) -> np.ndarray:
    return block_ranks(tower, words, ell, N, extension).sum(axis=1)


def sum_rank_weight(v: PartitionedVector) -> int:
    return int(weights(v.tower, v.data, v.ell, v.N, v.extension)[0])


def to_matrices(v: PartitionedVector) -> List:
    """ One [L:K] × N matrix over K per block, coordinates w.r.t. the fixed K-basis of L """
    base_degree, field_degree = v.tower.extension_degrees(v.extension)
    coords = v.tower.coordinates(v.blocks, base_degree, field_degree)
    return [np.swapaxes(block, 0, 1).copy() for block in coords]


def from_matrices(tower: Tower, matrices, extension: Extension = Extension.small) -> PartitionedVector:
    base_degree, field_degree = tower.extension_degrees(extension)
    blocks = [tower.from_coordinates(np.swapaxes(tower.GF(matrix), 0, 1), base_degree, field_degree) for matrix in matrices]
    N = blocks[0].size if blocks else 0
    return PartitionedVector(tower, np.concatenate(blocks) if blocks else tower.GF.Zeros(0), len(blocks), N, extension)


def min_sum_rank_distance_bruteforce(tower: Tower, generator, ell: int, N: int, extension: Extension = Extension.small,
                                     budget: int = SUMRANK_BUDGET, jobs: int = SUMRANK_JOBS) -> int:
    """
    Minimum sum-rank weight of the nonzero codewords of the L-linear code spanned by `generator`,
    by enumerating every message over L.
    """
    _, field_degree = tower.extension_degrees(extension)
    generator = tower.GF(generator)
    k = generator.shape[0]
    if k == 0:
        return ell * N + 1
    scalars = tower.subfield_elements(field_degree)
    total = scalars.size ** k
    check_budget(total, budget)

    def chunk_minimum(indices: range) -> int:
        messages = enumerate_vectors(scalars, k, indices.start, indices.stop)
        codewords = messages @ generator
        found = weights(tower, codewords, ell, N, extension)
        found = found[found > 0]
        return int(found.min()) if found.size else ell * N + 1

    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as executor:
        best = min(executor.map(chunk_minimum, chunks(total)), default=ell * N + 1)
    logger.debug(f"Enumerated {total} codewords, minimum sum-rank weight {best}")
    return best


def singleton_rhs(n: int, d: int) -> int:
    """ Exponent n - d + 1 of the Singleton bound |C| ≤ |L|^(n-d+1) """
    return n - d + 1
