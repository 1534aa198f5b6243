"""Self-dual extensions of length n+2 over a characteristic-2 base (R or GF(2)).

``extend_ext`` borders any self-dual generator with a unimodular vector X;
``extend_idext`` borders a standard-form generator [I_n | A] whose rows of A
share a unit sum.  Both re-verify self-duality of the result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .gf2 import BitMatrix
from .ring import MUL, as_codes, element_name

__all__ = [
    "Base",
    "RING",
    "BINARY",
    "base_for",
    "ExtensionError",
    "extend_ext",
    "extend_idext",
    "decode_hex_x",
    "encode_hex_x",
    "is_standard_form",
]


class ExtensionError(ValueError):
    pass


@dataclass(frozen=True)
class Base:
    """Arithmetic of a characteristic-2 base ring on uint8 arrays."""

    name: str
    mul_table: np.ndarray
    units: frozenset

    def mul(self, x, y):
        return self.mul_table[x, y]

    def inner(self, x, y) -> int:
        return int(np.bitwise_xor.reduce(self.mul_table[x, y], axis=-1)) if np.size(x) else 0

    def inner_rows(self, g: np.ndarray, x: np.ndarray) -> np.ndarray:
        return np.bitwise_xor.reduce(self.mul_table[g, x[None, :]], axis=1).astype(np.uint8)

    def is_unit(self, v) -> bool:
        return int(v) in self.units

    def inverse(self, v) -> int:
        for y in range(self.mul_table.shape[0]):
            if self.mul_table[int(v), y] == 1:
                return y
        raise ExtensionError(f"{v} is not a unit")

    def times(self, n: int, v) -> int:
        return int(v) if n % 2 else 0

    def coerce(self, g):
        if self.name == "binary":
            if isinstance(g, BitMatrix):
                return g.bits
            return np.asarray(g, dtype=np.uint8) & 1
        return np.atleast_2d(as_codes(g)) if np.ndim(g) >= 2 or isinstance(g, np.ndarray) else as_codes(g)

    def coerce_vector(self, x) -> np.ndarray:
        if self.name == "binary":
            return np.asarray(x, dtype=np.uint8).ravel() & 1
        return np.ravel(as_codes(x))

    def is_self_dual(self, g: np.ndarray) -> bool:
        if self.name == "binary":
            return gf2.is_self_dual(BitMatrix.from_bits(g))
        return gf2.r_self_dual_check(g)

    def wrap(self, g: np.ndarray):
        return BitMatrix.from_bits(g) if self.name == "binary" else g

    def show(self, v) -> str:
        return str(int(v)) if self.name == "binary" else element_name(v)


RING = Base("ring", MUL, frozenset({1, 7}))
BINARY = Base("binary", np.array([[0, 0], [0, 1]], dtype=np.uint8), frozenset({1}))


def base_for(generator) -> Base:
    return BINARY if isinstance(generator, BitMatrix) else RING


def _check_c(base: Base, c) -> int:
    c = int(c)
    if not base.is_unit(c) or base.mul(c, c) != 1:
        raise ExtensionError(f"c={base.show(c)} must be a unit with c^2 = 1")
    return c


def extend_ext(generator, x, c=1, base: Base | None = None, check_input: bool = True):
    """Rows (1, 0, X) and (y_i, c y_i, r_i) with y_i = <r_i, X>."""
    base = base or base_for(generator)
    g = np.atleast_2d(base.coerce(generator))
    x = base.coerce_vector(x)
    c = _check_c(base, c)
    n = g.shape[1]
    if x.size != n:
        raise ExtensionError(f"X has length {x.size}, code has length {n}")
    if base.inner(x, x) != 1:
        raise ExtensionError("X not unimodular: <X,X> != 1")
    if check_input and not base.is_self_dual(g):
        raise ExtensionError("input code is not self-dual")
    y = base.inner_rows(g, x)
    first = np.concatenate([[1, 0], x]).astype(np.uint8)
    body = np.concatenate([y[:, None], base.mul(c, y)[:, None], g], axis=1).astype(np.uint8)
    out = np.vstack([first, body])
    # 1 + 0 + <X,X> vanishes in characteristic 2
    assert base.inner(first, first) == 0
    if not base.is_self_dual(out):
        raise AssertionError("extension is not self-dual")
    return base.wrap(out)


def is_standard_form(g: np.ndarray) -> bool:
    k, n = g.shape
    return n == 2 * k and np.array_equal(g[:, :k], np.eye(k, dtype=np.uint8))


def extend_idext(generator, x, c=1, base: Base | None = None, check_input: bool = True):
    """Extension of [I_n | A] whose rows of A all sum to the same unit v.

    First row (1, 0, x_1..x_n, v^-1..v^-1), then (x_i + 1, c(x_i + 1), I_n | A).
    Requires <X,X> = 1 + n v^-2.
    """
    base = base or base_for(generator)
    g = np.atleast_2d(base.coerce(generator))
    x = base.coerce_vector(x)
    c = _check_c(base, c)
    if not is_standard_form(g):
        raise ExtensionError("generator must be [I_n | A]")
    n = g.shape[0]
    if x.size != n:
        raise ExtensionError(f"X has length {x.size}, expected {n}")
    a = g[:, n:]
    sums = np.bitwise_xor.reduce(a, axis=1)
    if np.any(sums != sums[0]):
        raise ExtensionError("row sums of A are not all equal")
    v = int(sums[0])
    if not base.is_unit(v):
        raise ExtensionError(f"row sum {base.show(v)} is not a unit")
    vinv = base.inverse(v)
    need = 1 ^ base.times(n, base.mul(vinv, vinv))
    if base.inner(x, x) != need:
        raise ExtensionError(f"<X,X> must equal 1 + n v^-2 = {base.show(need)}")
    if check_input and not base.is_self_dual(g):
        raise ExtensionError("input code is not self-dual")
    y = x ^ 1
    first = np.concatenate([[1, 0], x, np.full(n, vinv)]).astype(np.uint8)
    body = np.concatenate([y[:, None], base.mul(c, y)[:, None], g], axis=1).astype(np.uint8)
    out = np.vstack([first, body])
    assert base.inner(first, first) == 0
    if not base.is_self_dual(out):
        raise AssertionError("extension is not self-dual")
    return base.wrap(out)


def decode_hex_x(text: str, n: int) -> np.ndarray:
    """Hex string -> length-n bit vector, most significant bit first, right-aligned."""
    text = text.strip()
    if text.lower().startswith("0x"):
        text = text[2:]
    try:
        val = int(text, 16)
    except ValueError:
        raise ValueError(f"not a hex string: {text!r}") from None
    if val >> n:
        raise ValueError(f"{text} needs {val.bit_length()} bits, more than n={n}")
    return np.array([(val >> (n - 1 - j)) & 1 for j in range(n)], dtype=np.uint8)


def encode_hex_x(v) -> str:
    v = np.asarray(v, dtype=np.uint8).ravel()
    val = 0
    for b in v:
        val = (val << 1) | int(b & 1)
    return format(val, "X")
