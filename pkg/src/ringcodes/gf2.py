"""Bit-packed GF(2) linear algebra and the Gray image of R-codes.

Binary vectors are plain ``uint8`` 0/1 arrays at the API boundary; matrices
are :class:`BitMatrix` objects holding rows packed into 64-bit words.
R-matrices are ``uint8`` arrays of ring element codes (see :mod:`ringcodes.ring`).
"""

from __future__ import annotations

import logging

import numpy as np

from . import _bits
from .ring import GRAY, MUL, as_codes

log = logging.getLogger(__name__)

__all__ = [
    "BitMatrix",
    "rank",
    "reduce",
    "dual",
    "same_span",
    "contains",
    "is_self_orthogonal",
    "is_self_dual",
    "is_doubly_even",
    "gray_vector",
    "gray_preimage",
    "gray_image",
    "r_inner",
    "r_gram",
    "r_rank",
    "r_cardinality_log8",
    "r_self_dual_check",
    "restrict_equal",
    "delete_columns",
]


class BitMatrix:
    """A GF(2) matrix with rows packed into uint64 words.

    Coordinate 0 is the leftmost column everywhere outside this class.
    """

    __slots__ = ("words", "ncols")

    def __init__(self, words: np.ndarray, ncols: int):
        words = np.ascontiguousarray(words, dtype=np.uint64)
        if words.ndim != 2:
            raise ValueError("words must be 2-D")
        if words.shape[1] != _bits.nwords(ncols):
            raise ValueError("word count does not match ncols")
        self.words = words
        self.ncols = int(ncols)

    @classmethod
    def from_bits(cls, bits) -> "BitMatrix":
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.ndim == 1:
            bits = bits[None, :]
        if bits.ndim != 2:
            raise ValueError("expected a 2-D 0/1 array")
        if bits.shape[0] == 0:
            return cls.zeros(0, bits.shape[1])
        return cls(_bits.pack(bits), bits.shape[1])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(np.zeros((nrows, _bits.nwords(ncols)), dtype=np.uint64), ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_bits(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("empty matrix text")
        if any(set(ln) - {"0", "1"} for ln in lines):
            raise ValueError("binary matrix rows may only contain '0' and '1'")
        if len({len(ln) for ln in lines}) != 1:
            raise ValueError("rows have different lengths")
        return cls.from_bits([[int(ch) for ch in ln] for ln in lines])

    def to_text(self) -> str:
        return "\n".join("".join("01"[b] for b in row) for row in self.bits) + "\n"

    @property
    def bits(self) -> np.ndarray:
        if self.nrows == 0:
            return np.zeros((0, self.ncols), dtype=np.uint8)
        return _bits.unpack(self.words, self.ncols)

    @property
    def nrows(self) -> int:
        return self.words.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.words.copy(), self.ncols)

    def row_weights(self) -> np.ndarray:
        return np.array([_bits.row_weight(r) for r in self.words], dtype=np.int64)

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return BitMatrix(np.vstack([self.words, other.words]), self.ncols)

    def permute_columns(self, perm) -> "BitMatrix":
        """Column ``j`` of the result is column ``perm[j]`` of ``self``."""
        return BitMatrix.from_bits(self.bits[:, np.asarray(perm)])

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"


def _echelon(m: BitMatrix) -> tuple[np.ndarray, int, np.ndarray]:
    w = m.words.copy()
    r, piv = _bits.echelon(w, m.ncols)
    return w, r, piv


def reduce(m: BitMatrix) -> BitMatrix:
    """Reduced row echelon basis of the row space (zero rows dropped)."""
    w, r, _ = _echelon(m)
    return BitMatrix(w[:r].copy(), m.ncols)


def rank(m: BitMatrix) -> int:
    if m.nrows == 0:
        return 0
    return _echelon(m)[1]


def dual(m: BitMatrix) -> BitMatrix:
    """Basis of the orthogonal complement of the row space."""
    n = m.ncols
    if m.nrows == 0:
        return BitMatrix.identity(n)
    w, r, piv = _echelon(m)
    rref = _bits.unpack(w[:r], n) if r else np.zeros((0, n), dtype=np.uint8)
    free = np.setdiff1d(np.arange(n), piv)
    out = np.zeros((free.size, n), dtype=np.uint8)
    out[np.arange(free.size), free] = 1
    if r:
        out[:, piv] = rref[:, free].T
    return BitMatrix.from_bits(out) if free.size else BitMatrix.zeros(0, n)


def contains(m: BitMatrix, vecs: BitMatrix) -> bool:
    """True iff every row of ``vecs`` lies in the row space of ``m``."""
    return rank(m.stack(vecs)) == rank(m)


def same_span(a: BitMatrix, b: BitMatrix) -> bool:
    ra = rank(a)
    return ra == rank(b) and rank(a.stack(b)) == ra


def is_self_orthogonal(m: BitMatrix) -> bool:
    return bool(_bits.gram_is_zero(m.words, m.words))


def is_self_dual(m: BitMatrix) -> bool:
    return 2 * rank(m) == m.ncols and is_self_orthogonal(m)


def is_doubly_even(m: BitMatrix) -> bool:
    """All codewords have weight divisible by 4.

    Holds iff each basis row has weight 0 mod 4 and the rows are pairwise
    orthogonal (wt(x+y) = wt(x) + wt(y) - 2|x & y|).
    """
    if m.nrows == 0:
        return True
    if np.any(m.row_weights() % 4):
        return False
    return is_self_orthogonal(m)


# ---------------------------------------------------------------- Gray image


def gray_vector(rvec) -> np.ndarray:
    """Gray image of an R-vector in block order (a+b | b+c | c)."""
    rvec = as_codes(rvec)
    g = GRAY[rvec]  # (..., n, 3)
    return np.concatenate([g[..., 0], g[..., 1], g[..., 2]], axis=-1)


def gray_preimage(bvec) -> np.ndarray:
    """Inverse of :func:`gray_vector` for a vector (or rows) of length 3n."""
    bvec = np.asarray(bvec, dtype=np.uint8)
    n3 = bvec.shape[-1]
    if n3 % 3:
        raise ValueError("length must be a multiple of 3")
    n = n3 // 3
    x, y, z = bvec[..., :n], bvec[..., n : 2 * n], bvec[..., 2 * n :]
    c = z
    b = y ^ c
    a = x ^ b
    return (a | b << 1 | c << 2).astype(np.uint8)


def _module_rows(rmat: np.ndarray) -> np.ndarray:
    # r, u*r, u^2*r span the R-module generated by r over F2
    return np.concatenate([rmat, MUL[2][rmat], MUL[4][rmat]], axis=0)


def gray_image(rmat, reduced: bool = True) -> BitMatrix:
    """Binary generator of phi(C), C the R-module spanned by the rows of ``rmat``."""
    rmat = np.atleast_2d(as_codes(rmat))
    bm = BitMatrix.from_bits(gray_vector(_module_rows(rmat)))
    return reduce(bm) if reduced else bm


def r_inner(x, y):
    """Euclidean inner product over R (returns a ring code)."""
    prod = MUL[as_codes(x), as_codes(y)]
    return int(np.bitwise_xor.reduce(prod, axis=-1)) if prod.ndim == 1 else np.bitwise_xor.reduce(prod, axis=-1)


def r_gram(rmat) -> np.ndarray:
    rmat = np.atleast_2d(as_codes(rmat))
    prod = MUL[rmat[:, None, :], rmat[None, :, :]]
    return np.bitwise_xor.reduce(prod, axis=2).astype(np.uint8)


def r_rank(rmat) -> int:
    """Gray rank, i.e. log2 |C|."""
    return rank(gray_image(rmat, reduced=False))


def r_cardinality_log8(rmat) -> float:
    return r_rank(rmat) / 3


def r_self_dual_check(rmat) -> bool:
    """Self-duality of the R-code generated by ``rmat``.

    Rows must be pairwise orthogonal and |C| = 8^(n/2), i.e. Gray rank 3n/2.
    """
    rmat = np.atleast_2d(as_codes(rmat))
    n = rmat.shape[1]
    if n % 2:
        log.info("odd length %d cannot carry a self-dual R-code", n)
        return False
    if np.any(r_gram(rmat)):
        return False
    return r_rank(rmat) * 2 == 3 * n


# --------------------------------------------------------- subcode surgery


def restrict_equal(m: BitMatrix, pairs) -> BitMatrix:
    """Generator of the subcode where coordinate i equals coordinate j for each (i, j)."""
    g = reduce(m)
    if g.nrows == 0:
        return g
    bits = g.bits
    cons = np.stack([bits[:, i] ^ bits[:, j] for i, j in pairs], axis=1)  # k x c
    # messages x with x @ cons = 0
    kern = dual(BitMatrix.from_bits(cons.T)) if cons.any() else BitMatrix.identity(g.nrows)
    if kern.nrows == 0:
        return BitMatrix.zeros(0, m.ncols)
    new = (kern.bits.astype(np.int64) @ bits.astype(np.int64)) & 1
    return reduce(BitMatrix.from_bits(new.astype(np.uint8)))


def delete_columns(m: BitMatrix, cols) -> BitMatrix:
    keep = np.setdiff1d(np.arange(m.ncols), np.asarray(list(cols)))
    if m.nrows == 0:
        return BitMatrix.zeros(0, keep.size)
    return BitMatrix.from_bits(m.bits[:, keep])
