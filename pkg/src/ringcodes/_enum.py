"""Numba kernels for codeword enumeration.

Two primitives:

* ``walk_histogram`` visits all 2^k codewords.  The low ``TABLE_BITS``
  generators are expanded into a lookup table once; the remaining high
  generators are walked in Gray-code order, one row XOR per step, and each
  step sweeps the table (XOR + popcount per codeword).
* ``combo_*`` kernels visit all sums of exactly ``w`` rows, keeping the
  partial sums of the prefix so that each leaf costs one XOR.  The outermost
  index is distributed over threads.
"""

import numpy as np
from numba import njit, prange

from ._bits import popcount, trailing_zeros

TABLE_BITS = 16


@njit(cache=True)
def _gray_table(rows):
    """All 2^m sums of ``rows`` (m x nw), in Gray-code order."""
    m, nw = rows.shape
    size = 1 << m
    out = np.zeros((size, nw), dtype=np.uint64)
    for i in range(1, size):
        b = trailing_zeros(np.uint64(i))
        for k in range(nw):
            out[i, k] = out[i - 1, k] ^ rows[b, k]
    return out


@njit(cache=True)
def _sweep1(table, a0, hist):
    n = table.shape[0]
    h0 = hist[0]
    h1 = hist[1]
    h2 = hist[2]
    h3 = hist[3]
    i = 0
    while i + 4 <= n:
        h0[popcount(table[i, 0] ^ a0)] += 1
        h1[popcount(table[i + 1, 0] ^ a0)] += 1
        h2[popcount(table[i + 2, 0] ^ a0)] += 1
        h3[popcount(table[i + 3, 0] ^ a0)] += 1
        i += 4
    while i < n:
        h0[popcount(table[i, 0] ^ a0)] += 1
        i += 1


@njit(cache=True)
def _sweep2(table, a0, a1, hist):
    n = table.shape[0]
    h0 = hist[0]
    h1 = hist[1]
    h2 = hist[2]
    h3 = hist[3]
    i = 0
    while i + 4 <= n:
        h0[popcount(table[i, 0] ^ a0) + popcount(table[i, 1] ^ a1)] += 1
        h1[popcount(table[i + 1, 0] ^ a0) + popcount(table[i + 1, 1] ^ a1)] += 1
        h2[popcount(table[i + 2, 0] ^ a0) + popcount(table[i + 2, 1] ^ a1)] += 1
        h3[popcount(table[i + 3, 0] ^ a0) + popcount(table[i + 3, 1] ^ a1)] += 1
        i += 4
    while i < n:
        h0[popcount(table[i, 0] ^ a0) + popcount(table[i, 1] ^ a1)] += 1
        i += 1


@njit(cache=True)
def _sweepn(table, acc, hist):
    n, nw = table.shape
    h0 = hist[0]
    for i in range(n):
        w = 0
        for k in range(nw):
            w += popcount(table[i, k] ^ acc[k])
        h0[w] += 1


@njit(cache=True)
def _walk_chunk(table, high, start, stop, nbins):
    """Histogram over high-combination Gray indices [start, stop)."""
    nw = table.shape[1]
    hist = np.zeros((4, nbins), dtype=np.int64)
    acc = np.zeros(nw, dtype=np.uint64)
    g = start ^ (start >> 1)
    j = 0
    while g:
        if g & 1:
            for k in range(nw):
                acc[k] ^= high[j, k]
        g >>= 1
        j += 1
    for idx in range(start, stop):
        if idx > start:
            b = trailing_zeros(np.uint64(idx))
            for k in range(nw):
                acc[k] ^= high[b, k]
        if nw == 1:
            _sweep1(table, acc[0], hist)
        elif nw == 2:
            _sweep2(table, acc[0], acc[1], hist)
        else:
            _sweepn(table, acc, hist)
    return hist.sum(axis=0)


@njit(cache=True, parallel=True)
def _walk_parallel(table, high, nchunks, nbins):
    total = np.int64(1) << high.shape[0]
    per = (total + nchunks - 1) // nchunks
    out = np.zeros((nchunks, nbins), dtype=np.int64)
    for c in prange(nchunks):
        start = c * per
        stop = min(total, start + per)
        if start < stop:
            out[c] = _walk_chunk(table, high, start, stop, nbins)
    return out


def walk_histogram(rows: np.ndarray, ncols: int, nchunks: int = 64) -> np.ndarray:
    """Exact weight histogram (length ncols+1) of the span of independent ``rows``."""
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    k = rows.shape[0]
    lo = min(k, TABLE_BITS)
    table = _gray_table(rows[:lo])
    high = np.ascontiguousarray(rows[lo:])
    if high.shape[0] == 0:
        high = np.zeros((0, rows.shape[1]), dtype=np.uint64)
    nchunks = max(1, min(nchunks, 1 << high.shape[0]))
    parts = _walk_parallel(table, high, nchunks, ncols + 1)
    return parts.sum(axis=0)


# ------------------------------------------------------------- combinations


@njit(cache=True)
def _combos_from(rows, w, first, maxw, mask, mask_min, hist):
    """Sums of w rows whose smallest index is ``first``.

    Adds to ``hist[weight]`` for weight <= maxw and masked weight >= mask_min.
    """
    k, nw = rows.shape
    if w == 1:
        wt = 0
        mw = 0
        for q in range(nw):
            wt += popcount(rows[first, q])
            mw += popcount(rows[first, q] & mask[q])
        if wt <= maxw and mw >= mask_min:
            hist[wt] += 1
        return
    if first + w > k:
        return
    # prefix = first + (w-2) more indices, last index swept in a flat loop
    pw = w - 1
    idx = np.empty(pw, dtype=np.int64)
    part = np.zeros((pw + 1, nw), dtype=np.uint64)
    idx[0] = first
    for q in range(nw):
        part[1, q] = rows[first, q]
    for d in range(1, pw):
        idx[d] = idx[d - 1] + 1
        for q in range(nw):
            part[d + 1, q] = part[d, q] ^ rows[idx[d], q]
    while True:
        top = part[pw]
        for j in range(idx[pw - 1] + 1, k):
            wt = 0
            for q in range(nw):
                wt += popcount(top[q] ^ rows[j, q])
            if wt <= maxw:
                mw = 0
                for q in range(nw):
                    mw += popcount((top[q] ^ rows[j, q]) & mask[q])
                if mw >= mask_min:
                    hist[wt] += 1
        # advance prefix positions 1..pw-1 (position 0 is fixed)
        d = pw - 1
        while d >= 1 and idx[d] == k - 1 - (pw - d):
            d -= 1
        if d < 1:
            return
        idx[d] += 1
        for q in range(nw):
            part[d + 1, q] = part[d, q] ^ rows[idx[d], q]
        for e in range(d + 1, pw):
            idx[e] = idx[e - 1] + 1
            for q in range(nw):
                part[e + 1, q] = part[e, q] ^ rows[idx[e], q]


@njit(cache=True, parallel=True)
def combo_histogram(rows, w, maxw, mask, mask_min):
    """Weight histogram (<= maxw) over all sums of exactly ``w`` rows."""
    k = rows.shape[0]
    out = np.zeros((k, maxw + 1), dtype=np.int64)
    if w == 0 or w > k:
        return out.sum(axis=0)
    for first in prange(k - w + 1):
        _combos_from(rows, w, first, maxw, mask, mask_min, out[first])
    return out.sum(axis=0)


@njit(cache=True)
def _min_from(rows, w, first, best_in):
    k, nw = rows.shape
    best = best_in
    if w == 1:
        wt = 0
        for q in range(nw):
            wt += popcount(rows[first, q])
        return min(best, wt)
    if first + w > k:
        return best
    pw = w - 1
    idx = np.empty(pw, dtype=np.int64)
    part = np.zeros((pw + 1, nw), dtype=np.uint64)
    idx[0] = first
    for q in range(nw):
        part[1, q] = rows[first, q]
    for d in range(1, pw):
        idx[d] = idx[d - 1] + 1
        for q in range(nw):
            part[d + 1, q] = part[d, q] ^ rows[idx[d], q]
    while True:
        top = part[pw]
        for j in range(idx[pw - 1] + 1, k):
            wt = 0
            for q in range(nw):
                wt += popcount(top[q] ^ rows[j, q])
            if wt < best:
                best = wt
        d = pw - 1
        while d >= 1 and idx[d] == k - 1 - (pw - d):
            d -= 1
        if d < 1:
            return best
        idx[d] += 1
        for q in range(nw):
            part[d + 1, q] = part[d, q] ^ rows[idx[d], q]
        for e in range(d + 1, pw):
            idx[e] = idx[e - 1] + 1
            for q in range(nw):
                part[e + 1, q] = part[e, q] ^ rows[idx[e], q]


@njit(cache=True, parallel=True)
def combo_min_weight(rows, w, best):
    """Minimum weight over all sums of exactly ``w`` rows (or ``best`` if smaller)."""
    k = rows.shape[0]
    if w == 0 or w > k:
        return best
    res = np.full(k - w + 1, best, dtype=np.int64)
    for first in prange(k - w + 1):
        res[first] = _min_from(rows, w, first, best)
    return res.min()
