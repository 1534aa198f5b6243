"""Arithmetic in the 8-element ring R = F2 + u F2 + u^2 F2 with u^3 = u.

Elements are stored as 3-bit integer codes ``a | b << 1 | c << 2`` for
``a + b u + c u^2``.  The multiplication table is generated once from the
reduction rule and checked against the square classes of the ring.

Vectorised helpers (``ADD``, ``MUL``, ``GRAY``, ``LEE``) operate on numpy
arrays of codes and are what the matrix code uses; ``RingElement`` is the
user-facing scalar.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "RingElement",
    "IdempotentPair",
    "ELEMENTS",
    "ZERO",
    "ONE",
    "U",
    "U2",
    "W",
    "ADD",
    "MUL",
    "GRAY",
    "LEE",
    "UNITS",
    "IDEALS",
    "add",
    "mul",
    "is_unit",
    "inverse",
    "gray_symbol",
    "lee_weight",
    "character",
    "crt_split",
    "crt_join",
    "parse_element",
    "element_name",
    "as_codes",
]


def _code(a: int, b: int, c: int) -> int:
    return (a & 1) | (b & 1) << 1 | (c & 1) << 2


def _build_mul_table() -> np.ndarray:
    # coefficients of u^0..u^4, then fold u^3 -> u and u^4 -> u^2
    table = np.zeros((8, 8), dtype=np.uint8)
    for x in range(8):
        for y in range(8):
            px = [(x >> i) & 1 for i in range(3)]
            py = [(y >> i) & 1 for i in range(3)]
            prod = [0] * 5
            for i in range(3):
                for j in range(3):
                    prod[i + j] ^= px[i] & py[j]
            a = prod[0]
            b = prod[1] ^ prod[3]
            c = prod[2] ^ prod[4]
            table[x, y] = _code(a, b, c)
    return table


ADD = np.bitwise_xor.outer(np.arange(8, dtype=np.uint8), np.arange(8, dtype=np.uint8))
MUL = _build_mul_table()

# Gray image (a+b, b+c, c) of each code, and its Hamming weight
GRAY = np.array(
    [[((x ^ (x >> 1)) & 1), (((x >> 1) ^ (x >> 2)) & 1), ((x >> 2) & 1)] for x in range(8)],
    dtype=np.uint8,
)
LEE = GRAY.sum(axis=1).astype(np.uint8)

_NAMES = {
    0: "0",
    1: "1",
    2: "u",
    4: "u^2",
    3: "1+u",
    5: "1+u^2",
    6: "u+u^2",
    7: "1+u+u^2",
}
_PARSE = {name: code for code, name in _NAMES.items()}
_PARSE.update({"u2": 4, "1+u2": 5, "u+u2": 6, "1+u+u2": 7, "w": 7})


class RingElement(int):
    """An element of R, behaving as its 3-bit code under ``int``.

    >>> U * U2 == U
    True
    """

    __slots__ = ()

    def __new__(cls, code: int = 0):
        code = int(code)
        if not 0 <= code < 8:
            raise ValueError(f"ring element code out of range: {code}")
        return super().__new__(cls, code)

    @classmethod
    def from_coeffs(cls, a: int, b: int, c: int) -> "RingElement":
        return cls(_code(a, b, c))

    @property
    def coeffs(self) -> tuple[int, int, int]:
        v = int(self)
        return v & 1, (v >> 1) & 1, (v >> 2) & 1

    def __add__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return RingElement(int(self) ^ (int(other) & 7))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return RingElement(MUL[int(self), int(other) & 7])

    __rmul__ = __mul__

    def __neg__(self):
        return self

    def __pow__(self, e: int):
        out = ONE
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"RingElement({_NAMES[int(self)]})"

    def __str__(self) -> str:
        return _NAMES[int(self)]


ELEMENTS = tuple(RingElement(i) for i in range(8))
ZERO, ONE, U, U2 = ELEMENTS[0], ELEMENTS[1], ELEMENTS[2], ELEMENTS[4]
W = ELEMENTS[7]  # 1 + u + u^2, the non-trivial unit
UNITS = frozenset(x for x in ELEMENTS if any(MUL[x, y] == 1 for y in range(8)))

IDEALS = {
    "1+u": frozenset({0, 3, 6, 5}),
    "u^2": frozenset({0, 2, 4, 6}),
    "u+u^2": frozenset({0, 6}),
    "1+u^2": frozenset({0, 5}),
}


def _self_check() -> None:
    assert UNITS == {ONE, W}
    sq = {x: MUL[x, x] for x in range(8)}
    assert sq[4] == 4 and sq[3] == 5 and sq[5] == 5
    assert sq[0] == 0 and sq[6] == 0
    assert all(sq[x] == 1 for x in UNITS)
    assert MUL[2, MUL[2, 2]] == 2  # u^3 = u


_self_check()


class IdempotentPair(NamedTuple):
    """Coordinates of x = (1+u^2) a + u^2 (b + c (u+u^2))."""

    a: int
    b: int
    c: int


def add(x, y) -> RingElement:
    return RingElement(x) + y


def mul(x, y) -> RingElement:
    return RingElement(x) * y


def is_unit(x) -> bool:
    return int(x) in UNITS


def inverse(x) -> RingElement:
    if not is_unit(x):
        raise ValueError(f"{RingElement(x)} is not a unit")
    # units square to 1
    return RingElement(x)


def gray_symbol(x) -> tuple[int, int, int]:
    g = GRAY[int(x)]
    return int(g[0]), int(g[1]), int(g[2])


def lee_weight(x) -> int:
    return int(LEE[int(x)])


def character(x) -> int:
    """Generating character (-1)^c of a + b u + c u^2."""
    return -1 if (int(x) >> 2) & 1 else 1


_CRT = {}
for _a in (0, 1):
    for _b in (0, 1):
        for _c in (0, 1):
            _x = MUL[5, _a] ^ MUL[4, _b ^ MUL[_c, 6]]
            _CRT[int(_x)] = IdempotentPair(_a, _b, _c)
assert len(_CRT) == 8


def crt_split(x) -> IdempotentPair:
    return _CRT[int(x)]


def crt_join(p: IdempotentPair) -> RingElement:
    a, b, c = p
    return RingElement(MUL[5, a & 1] ^ MUL[4, (b & 1) ^ MUL[c & 1, 6]])


def parse_element(text: str) -> RingElement:
    """Parse names such as ``0``, ``u^2``, ``1+u+u^2`` (case and spaces ignored)."""
    key = text.strip().lower().replace(" ", "").replace("²", "^2").replace("**", "^")
    if key not in _PARSE:
        raise ValueError(f"unknown ring element {text!r}")
    return RingElement(_PARSE[key])


def element_name(x) -> str:
    return _NAMES[int(x)]


def as_codes(values) -> np.ndarray:
    """Coerce ring elements, codes or names (nested lists allowed) into uint8 codes."""
    if isinstance(values, np.ndarray) and values.dtype == np.uint8:
        return values
    if isinstance(values, str):
        values = values.replace(",", " ").split()
    obj = np.array(values, dtype=object)
    flat = [parse_element(v) if isinstance(v, str) else int(v) for v in obj.ravel()]
    if any(not 0 <= v < 8 for v in flat):
        raise ValueError("ring element codes must be in 0..7")
    return np.array(flat, dtype=np.uint8).reshape(obj.shape)
