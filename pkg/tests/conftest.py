import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from ringcodes.ring import MUL

settings.register_profile("ci", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

# lines printed by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


def all_codewords(bits: np.ndarray) -> np.ndarray:
    """Every F2 combination of the rows (brute-force oracle, k <= 20)."""
    bits = np.asarray(bits, dtype=np.uint8)
    k = bits.shape[0]
    combos = np.array(list(itertools.product([0, 1], repeat=k)), dtype=np.uint8)
    return (combos.astype(np.int32) @ bits.astype(np.int32)) % 2


def brute_distribution(bits: np.ndarray) -> dict[int, int]:
    w = all_codewords(bits).sum(axis=1)
    vals, counts = np.unique(w, return_counts=True)
    return dict(zip(vals.tolist(), counts.tolist()))


def f2_rank(bits: np.ndarray) -> int:
    """Plain Gaussian elimination, independent of the packed kernels."""
    m = np.array(bits, dtype=np.uint8) % 2
    r = 0
    for c in range(m.shape[1]):
        piv = np.flatnonzero(m[r:, c])
        if piv.size == 0:
            continue
        p = r + piv[0]
        m[[r, p]] = m[[p, r]]
        for i in np.flatnonzero(m[:, c]):
            if i != r:
                m[i] ^= m[r]
        r += 1
        if r == m.shape[0]:
            break
    return r


def r_matmul_oracle(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = 0
            for k in range(a.shape[1]):
                acc ^= int(MUL[a[i, k], b[k, j]])
            out[i, j] = acc
    return out
