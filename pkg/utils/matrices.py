from typing import Iterator, List, Optional
import numpy as np
from utils.const import BUDGET_EXCEEDED_MSG, SUMRANK_CHUNK
from utils.errors import BudgetExceeded


def batched_rank(mats) -> np.ndarray:
    """ Ranks of a stack of matrices with shape (count, rows, cols), by Gaussian elimination """
    work = mats.copy()
    count, rows, cols = work.shape
    rank = np.zeros(count, dtype=np.int64)
    batch = np.arange(count)
    row_index = np.arange(rows)
    for col in range(cols):
        live = (work[:, :, col] != 0) & (row_index[np.newaxis, :] >= rank[:, np.newaxis])
        has_pivot = live.any(axis=1)
        if not has_pivot.any():
            continue
        b, r = batch[has_pivot], rank[has_pivot]
        pivot = live[has_pivot].argmax(axis=1)
        pivot_rows = work[b, pivot]
        pivot_rows = pivot_rows / pivot_rows[:, col][:, np.newaxis]
        work[b, pivot] = work[b, r]
        work[b, r] = pivot_rows
        factors = work[b, :, col]
        factors[np.arange(b.size), r] = 0
        work[b] = work[b] - factors[:, :, np.newaxis] * pivot_rows[:, np.newaxis, :]
        rank[has_pivot] += 1
    return rank


def rank(matrix) -> int:
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def row_space_contains(matrix, vectors) -> bool:
    """ True iff every row of `vectors` lies in the row space of `matrix` """
    vectors = vectors.reshape(-1, matrix.shape[1])
    if vectors.shape[0] == 0:
        return True
    return rank(np.concatenate([matrix, vectors])) == rank(matrix)


def same_row_space(first, second) -> bool:
    return row_space_contains(first, second) and row_space_contains(second, first)


def pivot_columns(matrix) -> List[int]:
    reduced = matrix.row_reduce()
    pivots = []
    for row in reduced:
        nonzero = np.flatnonzero(row)
        if nonzero.size:
            pivots.append(int(nonzero[0]))
    return pivots


def solve_message(generator, codeword) -> Optional[np.ndarray]:
    """ The message m with m·G = codeword, or None if codeword is outside the row space """
    field = type(generator)
    if generator.shape[0] == 0:
        return field.Zeros(0) if not np.any(codeword) else None
    pivots = pivot_columns(generator)
    message = codeword[pivots] @ np.linalg.inv(generator[:, pivots])
    if np.array_equal(message @ generator, codeword):
        return message
    return None


def check_budget(count: int, budget: int):
    if count > budget:
        raise BudgetExceeded(BUDGET_EXCEEDED_MSG.format(count=count, budget=budget))


def enumerate_vectors(elements, length: int, start: int, stop: int):
    """ Vectors number start..stop-1 of elements^length, lexicographic in the index order """
    base = elements.size
    index = np.arange(start, stop, dtype=np.int64)
    digits = np.zeros((index.size, length), dtype=np.int64)
    for position in range(length - 1, -1, -1):
        digits[:, position] = index % base
        index //= base
    return elements[digits]


def chunks(total: int, size: int = SUMRANK_CHUNK) -> Iterator[range]:
    for start in range(0, total, size):
        yield range(start, min(start + size, total))
