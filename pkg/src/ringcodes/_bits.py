"""Low-level numba kernels on word-packed GF(2) rows.

Coordinate ``j`` of a row lives in word ``j // 64`` at bit ``j % 64``.
Pad bits above ``ncols`` are always zero.
"""

import numpy as np
from llvmlite import ir
from numba import njit, types
from numba.extending import intrinsic

WORD = 64


@intrinsic
def popcount(typingctx, x):
    if not isinstance(x, types.Integer):
        return None
    sig = types.uint64(x)

    def codegen(context, builder, signature, args):
        (val,) = args
        val = builder.zext(val, ir.IntType(64)) if val.type.width < 64 else val
        return builder.ctpop(val)

    return sig, codegen


@intrinsic
def trailing_zeros(typingctx, x):
    if not isinstance(x, types.Integer):
        return None
    sig = types.uint64(x)

    def codegen(context, builder, signature, args):
        (val,) = args
        val = builder.zext(val, ir.IntType(64)) if val.type.width < 64 else val
        return builder.cttz(val, ir.Constant(ir.IntType(1), 0))

    return sig, codegen


def nwords(ncols: int) -> int:
    return max(1, (ncols + WORD - 1) // WORD)


def pack(bits: np.ndarray) -> np.ndarray:
    """Pack a 2-D 0/1 array into (rows, nwords) uint64."""
    bits = np.atleast_2d(np.asarray(bits, dtype=np.uint8)) & 1
    m, n = bits.shape
    nw = nwords(n)
    padded = np.zeros((m, nw * WORD), dtype=np.uint8)
    padded[:, :n] = bits
    by = np.packbits(padded.reshape(m, nw * 8, 8), axis=2, bitorder="little").reshape(m, nw * 8)
    return by.view("<u8").astype(np.uint64).reshape(m, nw)


def unpack(words: np.ndarray, ncols: int) -> np.ndarray:
    words = np.ascontiguousarray(np.atleast_2d(words), dtype="<u8")
    m = words.shape[0]
    by = words.view(np.uint8).reshape(m, -1)
    bits = np.unpackbits(by, axis=1, bitorder="little")
    return bits[:, :ncols].copy()


@njit(cache=True)
def row_weight(row):
    w = 0
    for i in range(row.shape[0]):
        w += popcount(row[i])
    return w


@njit(cache=True)
def echelon(rows, ncols):
    """Reduced row echelon form in place; returns (rank, pivot columns)."""
    m, nw = rows.shape
    pivots = np.empty(min(m, ncols), dtype=np.int64)
    r = 0
    for col in range(ncols):
        if r == m:
            break
        wi = col >> 6
        bit = np.uint64(1) << np.uint64(col & 63)
        piv = -1
        for i in range(r, m):
            if rows[i, wi] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(nw):
                t = rows[r, k]
                rows[r, k] = rows[piv, k]
                rows[piv, k] = t
        for i in range(m):
            if i != r and (rows[i, wi] & bit):
                for k in range(nw):
                    rows[i, k] ^= rows[r, k]
        pivots[r] = col
        r += 1
    return r, pivots[:r].copy()


@njit(cache=True)
def echelon_on_columns(rows, order, limit):
    """Row-reduce choosing pivots only among columns ``order`` (in that order).

    Stops after ``limit`` pivots.  Returns (rank, pivot columns).
    """
    m, nw = rows.shape
    pivots = np.empty(min(m, limit), dtype=np.int64)
    r = 0
    for idx in range(order.shape[0]):
        if r == m or r == limit:
            break
        col = order[idx]
        wi = col >> 6
        bit = np.uint64(1) << np.uint64(col & 63)
        piv = -1
        for i in range(r, m):
            if rows[i, wi] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(nw):
                t = rows[r, k]
                rows[r, k] = rows[piv, k]
                rows[piv, k] = t
        for i in range(m):
            if i != r and (rows[i, wi] & bit):
                for k in range(nw):
                    rows[i, k] ^= rows[r, k]
        pivots[r] = col
        r += 1
    return r, pivots[:r].copy()


@njit(cache=True)
def gram_is_zero(a, b):
    """True iff every row of ``a`` is orthogonal to every row of ``b``."""
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            acc = np.uint64(0)
            for k in range(a.shape[1]):
                acc ^= a[i, k] & b[j, k]
            if popcount(acc) & 1:
                return False
    return True
