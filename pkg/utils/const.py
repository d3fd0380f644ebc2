import os

SUMRANK_BUDGET = int(os.environ.get("SUMRANK_BUDGET", 2 ** 22))  # max codewords enumerated
SUMRANK_MSRD_BUDGET = int(os.environ.get("SUMRANK_MSRD_BUDGET", 2 ** 20))
SUMRANK_CHUNK = int(os.environ.get("SUMRANK_CHUNK", 4096))
SUMRANK_JOBS = int(os.environ.get("SUMRANK_JOBS", 1))
SUMRANK_LOG_LEVEL = os.environ.get("SUMRANK_LOG_LEVEL", "WARNING")
SUMRANK_CACHE_LIMIT = int(os.environ.get("SUMRANK_CACHE_LIMIT", 2 ** 16))  # codewords kept per code for decoding
PORT = int(os.environ.get("PORT", 8000))

BUDGET_EXCEEDED_MSG = "Enumeration of {count} codewords exceeds the budget of {budget}."
RADIUS_EXCEEDED_MSG = "No codeword within sum-rank radius {radius}."
NOT_ROOT_OF_UNITY_MSG = "Evaluation point is not an ell-th root of unity."
ZERO_BETA_MSG = "beta must be nonzero."

CSV_HEADER = ["delta", "b", "singleton", "eq33", "delsarte", "exact_dim", "beats_delsarte"]

# delta values of the published tables, q0 = 2, m = 2, ell = 2^s - 1, b in {0, 1}
APPENDIX_DELTAS = {
    1: [2],
    2: [2, 3],
    3: [2, 3, 4, 5, 6, 7],
    4: [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14],
    5: [2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 18, 22, 26, 30],
    6: [2, 3, 4, 5, 6, 7, 10, 14, 22, 30, 38, 46, 54, 62],
    7: [2, 3, 4, 5, 6, 7, 10, 14, 22, 30, 38, 46, 54, 62],
}
APPENDIX_BS = [0, 1]
