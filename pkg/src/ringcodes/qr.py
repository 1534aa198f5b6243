"""Quadratic-residue codes over R: idempotents, extended and subtracted codes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import gf2
from .gf2 import BitMatrix
from .ring import MUL, as_codes

__all__ = [
    "is_odd_prime",
    "residue_sets",
    "QrContext",
    "RQrFamily",
    "mu",
    "cyclic_product",
    "f2_cyclic_product",
    "lift",
    "shift_stack",
    "qr_family",
    "lifted_idempotent_check",
    "extend_qr",
    "subtract_sqr",
    "bsqr",
]


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, int(p**0.5) + 1, 2))


def residue_sets(p: int) -> tuple[frozenset[int], frozenset[int]]:
    """Quadratic residues and non-residues modulo an odd prime ``p``."""
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    q = frozenset(i * i % p for i in range(1, p))
    n = frozenset(range(1, p)) - q
    return q, n


@dataclass(frozen=True)
class QrContext:
    p: int

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")

    @cached_property
    def sets(self):
        return residue_sets(self.p)

    @property
    def residues(self) -> frozenset[int]:
        return self.sets[0]

    @property
    def nonresidues(self) -> frozenset[int]:
        return self.sets[1]

    def _indicator(self, idx) -> np.ndarray:
        v = np.zeros(self.p, dtype=np.uint8)
        v[sorted(idx)] = 1
        return v

    @cached_property
    def e1(self) -> np.ndarray:
        return self._indicator(self.residues)

    @cached_property
    def e2(self) -> np.ndarray:
        return self._indicator(self.nonresidues)

    @cached_property
    def h(self) -> np.ndarray:
        return np.ones(self.p, dtype=np.uint8)

    @property
    def two_is_residue(self) -> bool:
        return 2 in self.residues


def mu(a: int, f, p: int | None = None) -> np.ndarray:
    """Apply the multiplier i -> a*i mod p to the coefficient indices of ``f``."""
    f = np.asarray(f)
    p = f.shape[-1] if p is None else p
    if a % p == 0:
        raise ValueError("multiplier must be nonzero mod p")
    out = np.empty_like(f)
    idx = (a * np.arange(p)) % p
    out[..., idx] = f
    return out


def cyclic_product(f, g) -> np.ndarray:
    """Product in R[x]/(x^p - 1) of coefficient vectors of ring codes."""
    f, g = as_codes(f), as_codes(g)
    p = f.size
    out = np.zeros(p, dtype=np.uint8)
    for i in np.flatnonzero(f):
        out ^= MUL[f[i]][np.roll(g, i)]
    return out


def f2_cyclic_product(f, g) -> np.ndarray:
    """Product in F2[x]/(x^p - 1)."""
    f = np.asarray(f, dtype=np.uint8) & 1
    g = np.asarray(g, dtype=np.uint8) & 1
    out = np.zeros(f.size, dtype=np.uint8)
    for i in np.flatnonzero(f):
        out ^= np.roll(g, i)
    return out


def lift(f, g, h=None) -> np.ndarray:
    """Coefficients of (1+u^2) f + u^2 (g + h (u+u^2)) for binary f, g, h."""
    f = np.asarray(f, dtype=np.uint8) & 1
    g = np.asarray(g, dtype=np.uint8) & 1
    inner = g if h is None else g ^ MUL[np.asarray(h, dtype=np.uint8) & 1, 6]
    return MUL[5][f] ^ MUL[4][inner]


def shift_stack(row, k: int) -> np.ndarray:
    """First ``k`` cyclic right shifts of ``row`` (row j is shifted by j)."""
    row = as_codes(row)
    return np.stack([np.roll(row, j) for j in range(k)])


def lifted_idempotent_check(f, g, h) -> bool:
    f = np.asarray(f, dtype=np.uint8) & 1
    g = np.asarray(g, dtype=np.uint8) & 1
    h = np.asarray(h, dtype=np.uint8) & 1
    by_parts = (
        np.array_equal(f2_cyclic_product(f, f), f)
        and np.array_equal(f2_cyclic_product(g, g), g)
        and not h.any()
    )
    e = lift(f, g, h)
    by_square = np.array_equal(cyclic_product(e, e), e)
    if by_parts != by_square:
        raise AssertionError("idempotent criterion disagrees with direct squaring")
    return by_parts


@dataclass(frozen=True)
class RQrFamily:
    """Generator matrices of the four R-QR codes of prime length ``p``."""

    p: int
    case: int  # -1 for p = 8r-1, +1 for p = 8r+1
    idempotents: dict
    q1: np.ndarray
    q2: np.ndarray
    q1p: np.ndarray
    q2p: np.ndarray

    @property
    def ctx(self) -> QrContext:
        return QrContext(self.p)


def qr_family(p: int) -> RQrFamily:
    ctx = QrContext(p)
    if p % 8 not in (1, 7):
        raise ValueError(f"2 is not a QR mod {p}")
    e1, e2 = ctx.e1, ctx.e2
    one = np.zeros(p, dtype=np.uint8)
    one[0] = 1
    if p % 8 == 7:
        a, b, ap, bp = e1, e2, one ^ e2, one ^ e1
        case = -1
    else:
        a, b, ap, bp = one ^ e1, one ^ e2, e2, e1
        case = 1
    idem = {
        "q1": lift(a, b),
        "q2": lift(b, a),
        "q1p": lift(ap, bp),
        "q2p": lift(bp, ap),
    }
    big, small = (p + 1) // 2, (p - 1) // 2
    mats = {
        "q1": shift_stack(idem["q1"], big),
        "q2": shift_stack(idem["q2"], big),
        "q1p": shift_stack(idem["q1p"], small),
        "q2p": shift_stack(idem["q2p"], small),
    }
    for name, mat in mats.items():
        r = gf2.r_rank(mat)
        if r != 3 * mat.shape[0]:
            raise RuntimeError(f"{name}({p}): Gray rank {r}, expected {3 * mat.shape[0]}")
    return RQrFamily(p, case, idem, **mats)


def extend_qr(fam: RQrFamily, i: int = 1) -> np.ndarray:
    """Extended generator: a zero border column on the odd-like rows plus the all-ones row."""
    gp = {1: fam.q1p, 2: fam.q2p}[i]
    k = gp.shape[0]
    top = np.concatenate([np.zeros((k, 1), dtype=np.uint8), gp], axis=1)
    ones = np.ones((1, fam.p + 1), dtype=np.uint8)
    return np.concatenate([top, ones], axis=0)


def subtract_sqr(extended) -> np.ndarray:
    """R-generator of the length n-2 code {c : (a, c, a) in C}.

    The first and last R-coordinates must agree; both are then deleted.
    Computed on the Gray side, where phi is injective and coordinatewise.
    """
    ext = np.atleast_2d(as_codes(extended))
    n = ext.shape[1]
    g = gf2.gray_image(ext)
    pairs = [(blk * n, blk * n + n - 1) for blk in range(3)]
    sub = gf2.restrict_equal(g, pairs)
    drop = [c for pair in pairs for c in pair]
    sub = gf2.reduce(gf2.delete_columns(sub, drop))
    if sub.nrows == 0:
        return np.zeros((1, n - 2), dtype=np.uint8)
    return gf2.gray_preimage(sub.bits)


def bsqr(p: int) -> BitMatrix:
    """Binary subtracted code: first and last Gray coordinates of phi(QR-bar) agree, then drop both."""
    if p % 8 != 7:
        raise ValueError("BSQR needs p = -1 mod 8")
    g = gf2.gray_image(extend_qr(qr_family(p), 1))
    last = g.ncols - 1
    sub = gf2.restrict_equal(g, [(0, last)])
    return gf2.reduce(gf2.delete_columns(sub, [0, last]))
