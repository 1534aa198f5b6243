import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import f2_rank
from ringcodes import circulant as C
from ringcodes import extend as E
from ringcodes import gf2, qr
from ringcodes.gf2 import BitMatrix
from ringcodes.ring import MUL

RING_BASES = {
    "QRbar7": lambda: qr.extend_qr(qr.qr_family(7), 1),
    "C3a": lambda: C.self_dual_qdc_family(3, 1),
    "C3b": lambda: C.self_dual_qdc_family(3, 2),
    "C11": lambda: C.self_dual_qdc_family(11, 1),
}
BINARY_BASES = {
    "golay": lambda: gf2.gray_image(RING_BASES["QRbar7"]()).bits,
    "bsqr7": lambda: qr.bsqr(7).bits,
    "grayC3": lambda: gf2.gray_image(RING_BASES["C3a"]()).bits,
}


def _r_inner(x, y):
    return int(np.bitwise_xor.reduce(MUL[x, y])) if len(x) else 0


def _fix_norm(x, target, alphabet):
    # choose x[0] so that <x, x> hits the target (oracle, brute force)
    for v in range(alphabet):
        x[0] = v
        val = _r_inner(x, x) if alphabet == 8 else int(x.sum() % 2)
        if val == target:
            return x
    raise AssertionError("no fix for coordinate 0")


def _ring_self_dual(g):
    gram = np.bitwise_xor.reduce(MUL[g[:, None, :], g[None, :, :]], axis=2)
    return not gram.any() and 2 * f2_rank(gf2.gray_vector(np.concatenate([g, MUL[2][g], MUL[4][g]]))) == 3 * g.shape[1]


def _binary_self_dual(b):
    return not ((b.astype(int) @ b.T.astype(int)) % 2).any() and 2 * f2_rank(b) == b.shape[1]


@pytest.mark.parametrize("trial", range(50))
def test_ext_random_inputs(trial):
    rng = np.random.default_rng(trial)
    if trial % 2:
        g = RING_BASES[list(RING_BASES)[trial % 4]]()
        g = g[:, rng.permutation(g.shape[1])]
        x = _fix_norm(rng.integers(0, 8, g.shape[1], dtype=np.uint8), 1, 8)
        out = E.extend_ext(g, x, int(rng.choice([1, 7])))
        assert out.shape == (g.shape[0] + 1, g.shape[1] + 2)
        assert _ring_self_dual(out)
    else:
        b = BINARY_BASES[list(BINARY_BASES)[trial % 3]]()
        b = b[:, rng.permutation(b.shape[1])]
        x = _fix_norm(rng.integers(0, 2, b.shape[1], dtype=np.uint8), 1, 2)
        out = E.extend_ext(BitMatrix.from_bits(b), x)
        assert isinstance(out, BitMatrix)
        assert _binary_self_dual(out.bits)


def _standard_form(rng, n, alphabet):
    perm = np.eye(n, dtype=np.uint8)[rng.permutation(n)]
    unit = int(rng.choice([1, 7])) if alphabet == 8 else 1
    return np.concatenate([np.eye(n, dtype=np.uint8), perm * unit], axis=1), unit


@pytest.mark.parametrize("trial", range(50))
def test_idext_random_inputs(trial):
    rng = np.random.default_rng(500 + trial)
    alphabet = 8 if trial % 5 else 2
    if trial % 7 == 3:
        g, v = C.self_dual_qdc_family(11 if trial % 2 else 3, 1 + trial % 2), None
        v = int(np.bitwise_xor.reduce(g[0, g.shape[0]:]))
        alphabet = 8
    else:
        g, v = _standard_form(rng, int(rng.integers(2, 13)), alphabet)
    n = g.shape[0]
    vinv = v  # units square to 1
    target = 1 ^ (int(MUL[vinv, vinv]) if n % 2 else 0)
    x = _fix_norm(rng.integers(0, alphabet, n, dtype=np.uint8), target, alphabet)
    if alphabet == 8:
        out = E.extend_idext(g, x, int(rng.choice([1, 7])))
        assert out.shape == (n + 1, 2 * n + 2)
        assert (out[0, 2 + n:] == vinv).all()
        assert _ring_self_dual(out)
    else:
        out = E.extend_idext(BitMatrix.from_bits(g), x)
        assert _binary_self_dual(out.bits)


def test_ext_rejects_bad_x():
    g = RING_BASES["QRbar7"]()
    with pytest.raises(E.ExtensionError, match="X not unimodular"):
        E.extend_ext(g, np.zeros(8, dtype=np.uint8))
    with pytest.raises(E.ExtensionError, match="length"):
        E.extend_ext(g, np.ones(7, dtype=np.uint8))


def test_ext_rejects_non_self_dual_input():
    g = qr.qr_family(7).q1p
    x = np.zeros(7, dtype=np.uint8)
    x[0] = 1
    with pytest.raises(E.ExtensionError, match="not self-dual"):
        E.extend_ext(g, x)


def test_ext_rejects_bad_c():
    g = RING_BASES["QRbar7"]()
    x = np.zeros(8, dtype=np.uint8)
    x[0] = 1
    with pytest.raises(E.ExtensionError, match="unit"):
        E.extend_ext(g, x, 2)


def test_idext_preconditions():
    g = C.self_dual_qdc_family(3, 1)
    with pytest.raises(E.ExtensionError, match="1 \\+ n v\\^-2"):
        E.extend_idext(g, np.array([1, 0, 0], dtype=np.uint8))
    shuffled = g[:, ::-1]
    with pytest.raises(E.ExtensionError, match="I_n"):
        E.extend_idext(shuffled, np.zeros(3, dtype=np.uint8))
    bad = np.concatenate([np.eye(2, dtype=np.uint8), np.array([[1, 0], [1, 1]], dtype=np.uint8)], axis=1)
    with pytest.raises(E.ExtensionError, match="row sums"):
        E.extend_idext(bad, np.zeros(2, dtype=np.uint8))


def test_standard_form():
    assert E.is_standard_form(C.self_dual_qdc_family(3, 1))
    assert not E.is_standard_form(RING_BASES["QRbar7"]())


def test_hex_decode_examples():
    assert E.decode_hex_x("5", 4).tolist() == [0, 1, 0, 1]
    assert E.decode_hex_x("0x1", 3).tolist() == [0, 0, 1]
    assert E.decode_hex_x("1366E7855836D5F97", 66).sum() == bin(0x1366E7855836D5F97).count("1")
    with pytest.raises(ValueError, match="more than n"):
        E.decode_hex_x("10", 4)
    with pytest.raises(ValueError, match="hex"):
        E.decode_hex_x("xyz", 8)


@given(st.integers(1, 70).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1))))
def test_hex_roundtrip(args):
    n, val = args
    text = format(val, "X")
    v = E.decode_hex_x(text, n)
    assert len(v) == n
    assert E.encode_hex_x(v) == text
