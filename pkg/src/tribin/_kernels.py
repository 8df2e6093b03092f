"""Integer enumeration kernels behind the brute-force variation sums.

Enumerating all ``s**k`` argument prefixes is the only loop in the package
whose cost grows exponentially, so it runs as a numba kernel when numba is
importable.  Set ``TRIBIN_DISABLE_NUMBA=1`` to force the chunked numpy path.
Both paths only count; the exact rational reduction happens in the caller.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

__all__ = ["USE_NUMBA", "beta_weight_histogram", "histogram_numba", "histogram_numpy"]

USE_NUMBA = numba is not None and os.environ.get("TRIBIN_DISABLE_NUMBA", "").lower() not in ("1", "true", "yes")

_CHUNK = 1 << 18


def histogram_numpy(s: int, k: int, in_a1: np.ndarray, hold_on_equal: bool) -> np.ndarray:
    """Count rank-``k`` prefixes by the number of ones in their beta word."""
    in_a1 = np.asarray(in_a1, dtype=bool)
    total = s**k
    hist = np.zeros(k + 1, dtype=np.int64)
    powers = s ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        prev = (idx // powers[0]) % s
        beta = in_a1[prev].astype(np.int64)
        ones = beta.copy()
        for j in range(1, k):
            cur = (idx // powers[j]) % s
            changed = cur != prev
            flip = changed if hold_on_equal else ~changed
            beta ^= flip
            ones += beta
            prev = cur
        hist += np.bincount(ones, minlength=k + 1)
    return hist


def _histogram_py(s, k, in_a1, hold_on_equal):
    # odometer over prefixes in lex order; only the suffix after a carry is recomputed
    hist = np.zeros(k + 1, dtype=np.int64)
    digits = np.zeros(k, dtype=np.int64)
    betas = np.zeros(k, dtype=np.int64)
    ones = np.zeros(k, dtype=np.int64)
    start = 0
    while True:
        for j in range(start, k):
            if j == 0:
                b = 1 if in_a1[digits[0]] else 0
                ones[0] = b
            else:
                changed = digits[j] != digits[j - 1]
                b = betas[j - 1]
                if changed == hold_on_equal:
                    b = 1 - b
                ones[j] = ones[j - 1] + b
            betas[j] = b
        hist[ones[k - 1]] += 1
        j = k - 1
        while j >= 0 and digits[j] == s - 1:
            digits[j] = 0
            j -= 1
        if j < 0:
            break
        digits[j] += 1
        start = j
    return hist


if numba is not None:
    histogram_numba = numba.njit(cache=True, nogil=True)(_histogram_py)
else:  # pragma: no cover
    histogram_numba = None


def beta_weight_histogram(s: int, k: int, a1: frozenset[int] | set[int], hold_on_equal: bool = True) -> np.ndarray:
    """``hist[j]`` = number of rank-``k`` prefixes whose beta word has ``j`` ones.

    ``hold_on_equal`` selects the standard rule (beta holds while the digit
    repeats); ``False`` is the flipped variant.
    """
    in_a1 = np.zeros(s, dtype=np.bool_)
    for d in a1:
        in_a1[d] = True
    if USE_NUMBA:
        return histogram_numba(s, k, in_a1, hold_on_equal)
    return histogram_numpy(s, k, in_a1, hold_on_equal)
