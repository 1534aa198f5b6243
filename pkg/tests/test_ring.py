import itertools

import numpy as np
import pytest

from ringcodes import ring
from ringcodes.ring import ADD, ELEMENTS, GRAY, LEE, MUL, U, U2, W, RingElement

PAIRS = list(itertools.product(range(8), repeat=2))


def poly_mul(x, y):
    # multiply as polynomials in u, then fold u^3 -> u, u^4 -> u^2
    cx = [(x >> i) & 1 for i in range(3)]
    cy = [(y >> i) & 1 for i in range(3)]
    prod = [0] * 5
    for i in range(3):
        for j in range(3):
            prod[i + j] ^= cx[i] & cy[j]
    prod[1] ^= prod[3]
    prod[2] ^= prod[4]
    return prod[0] | prod[1] << 1 | prod[2] << 2


def test_mul_table_matches_polynomial_arithmetic():
    for x, y in PAIRS:
        assert MUL[x, y] == poly_mul(x, y)


def test_ring_axioms_exhaustive():
    for x, y, z in itertools.product(range(8), repeat=3):
        assert MUL[MUL[x, y], z] == MUL[x, MUL[y, z]]
        assert MUL[x, ADD[y, z]] == ADD[MUL[x, y], MUL[x, z]]
    for x, y in PAIRS:
        assert MUL[x, y] == MUL[y, x]
        assert ADD[x, y] == ADD[y, x]
    for x in range(8):
        assert MUL[1, x] == x and ADD[0, x] == x and ADD[x, x] == 0


def test_u_cubed_is_u():
    assert U * U * U == U
    assert U2 * U2 == U2
    assert str(U * U) == "u^2"


def test_units_and_inverses():
    assert ring.UNITS == {RingElement(1), W}
    assert W * W == 1
    assert ring.inverse(W) == W
    with pytest.raises(ValueError, match="not a unit"):
        ring.inverse(U)
    for x in range(8):
        assert ring.is_unit(x) == (x in (1, 7))


def test_ideals():
    for name, ideal in ring.IDEALS.items():
        for x, y in itertools.product(ideal, repeat=2):
            assert ADD[x, y] in ideal
        for x in ideal:
            assert all(MUL[r, x] in ideal for r in range(8)), name


def test_gray_additive_and_injective_on_all_pairs():
    images = {tuple(GRAY[x]) for x in range(8)}
    assert len(images) == 8
    for x, y in PAIRS:
        assert np.array_equal(GRAY[x] ^ GRAY[y], GRAY[ADD[x, y]])


def test_gray_symbol_formula():
    for x in ELEMENTS:
        a, b, c = x.coeffs
        assert ring.gray_symbol(x) == ((a + b) % 2, (b + c) % 2, c)


def test_lee_weight_is_gray_weight():
    assert LEE.tolist() == [0, 1, 2, 1, 2, 3, 2, 1]
    assert ring.lee_weight(W) == 1
    assert ring.lee_weight(U) == 2


def test_character_is_generating():
    # a generating character has no nonzero ideal in its kernel
    for name, ideal in ring.IDEALS.items():
        if ideal == {0}:
            continue
        assert sum(ring.character(x) for x in ideal) == 0, name


def test_crt_roundtrip():
    for x in ELEMENTS:
        assert ring.crt_join(ring.crt_split(x)) == x


@pytest.mark.parametrize(
    "text,code", [("0", 0), ("1", 1), ("u", 2), ("U^2", 4), ("u2", 4), ("1+u", 3), ("w", 7), ("1+u+u^2", 7)]
)
def test_parse_element(text, code):
    assert ring.parse_element(text) == code


def test_names_roundtrip():
    for x in ELEMENTS:
        assert ring.parse_element(ring.element_name(x)) == x


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        ring.parse_element("v")


def test_as_codes_nested():
    m = ring.as_codes([["0", "u"], ["1+u^2", 7]])
    assert m.dtype == np.uint8
    assert m.tolist() == [[0, 2], [5, 7]]
    assert ring.as_codes("u^2, 1 u").tolist() == [4, 1, 2]
