import os
import subprocess
import sys
from itertools import product

import numpy as np
import pytest

from tribin import _kernels

numba_only = pytest.mark.skipif(_kernels.histogram_numba is None, reason="numba not installed")


def reference(s, k, a1, hold):
    hist = [0] * (k + 1)
    for word in product(range(s), repeat=k):
        beta = 1 if word[0] in a1 else 0
        ones = beta
        for a, b in zip(word, word[1:]):
            if (a != b) == hold:
                beta = 1 - beta
            ones += beta
        hist[ones] += 1
    return hist


CASES = [(3, k, {2}, True) for k in range(1, 8)] + [
    (4, 5, {0, 3}, True),
    (4, 5, {1}, False),
    (5, 4, {1, 2, 4}, True),
    (3, 6, {0}, False),
]


@pytest.mark.parametrize("s,k,a1,hold", CASES)
def test_numpy_path_matches_reference(s, k, a1, hold):
    mask = np.array([d in a1 for d in range(s)])
    assert _kernels.histogram_numpy(s, k, mask, hold).tolist() == reference(s, k, a1, hold)


@numba_only
@pytest.mark.parametrize("s,k,a1,hold", CASES)
def test_numba_path_matches_numpy(s, k, a1, hold):
    mask = np.array([d in a1 for d in range(s)])
    fast = _kernels.histogram_numba(s, k, mask, hold)
    assert fast.tolist() == _kernels.histogram_numpy(s, k, mask, hold).tolist()


def test_numpy_path_crosses_chunk_boundary(monkeypatch):
    monkeypatch.setattr(_kernels, "_CHUNK", 7)
    mask = np.array([False, True, False])
    assert _kernels.histogram_numpy(3, 5, mask, True).tolist() == reference(3, 5, {1}, True)


def test_histogram_counts_every_prefix():
    hist = _kernels.beta_weight_histogram(3, 9, frozenset({2}))
    assert hist.sum() == 3**9


def test_env_flag_selects_numpy_path():
    code = "from tribin import _kernels; print(_kernels.USE_NUMBA)"
    env = dict(os.environ, TRIBIN_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


@pytest.mark.parametrize("s,k,a1,hold", CASES[:4] + CASES[-2:])
def test_uncompiled_kernel_matches_reference(s, k, a1, hold):
    mask = np.array([d in a1 for d in range(s)])
    assert _kernels._histogram_py(s, k, mask, hold).tolist() == reference(s, k, a1, hold)
