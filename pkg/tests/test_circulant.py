import itertools

import numpy as np
import pytest

from conftest import r_matmul_oracle
from ringcodes import circulant as C
from ringcodes import gf2, weights
from ringcodes.ring import MUL, as_codes


def test_q_matrix_layout():
    q = C.q_matrix(C.CirculantSpec(7, 1, 2, 4))
    assert q[0].tolist() == [1, 2, 2, 4, 2, 4, 4]
    for j in range(1, 7):
        assert np.array_equal(q[j], np.roll(q[j - 1], 1))


def test_q_matrix_rejects_composite():
    with pytest.raises(ValueError):
        C.q_matrix(C.CirculantSpec(9, 0, 1, 1))


def _expected_form(p, r, s, t):
    # written out directly: -x = x in characteristic 2, k x = x if k odd
    sq = lambda x: int(MUL[x, x])  # noqa: E731
    k = p // 4
    kst = sq(s ^ t) if k % 2 else 0
    if p % 4 == 1:
        return (sq(r), sq(s) ^ kst, sq(t) ^ kst)
    off = int(MUL[r, s]) ^ int(MUL[r, t]) ^ kst ^ int(MUL[s, t])
    return (sq(r) ^ sq(s) ^ sq(t), off, off)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_closed_form_all_triples(p):
    for r, s, t in itertools.product(range(8), repeat=3):
        spec = C.CirculantSpec(p, r, s, t)
        q = C.q_matrix(spec)
        prod = C.r_matmul(q, q.T)
        expect = C.q_matrix(C.CirculantSpec(p, *_expected_form(p, r, s, t)))
        assert np.array_equal(prod, expect), spec
        assert C.qdc_closed_form(spec) == C.CirculantSpec(p, *_expected_form(p, r, s, t))


def test_r_matmul_against_loops(rng):
    a = rng.integers(0, 8, (4, 5), dtype=np.uint8)
    b = rng.integers(0, 8, (5, 3), dtype=np.uint8)
    assert np.array_equal(C.r_matmul(a, b), r_matmul_oracle(a, b))


def test_identity_check_returns_closed_form():
    spec = C.CirculantSpec(11, 0, 4, 5)
    # [I | Q] is self-dual exactly when Q Q^T = I
    assert C.qdc_identity_check(spec) == C.CirculantSpec(11, 1, 0, 0)


@pytest.mark.parametrize("p,d", [(3, 4), (11, None)])
@pytest.mark.parametrize("which", [1, 2])
def test_self_dual_families(p, d, which):
    g = C.self_dual_qdc_family(p, which)
    assert g.shape == (p, 2 * p)
    b = gf2.gray_image(g)
    assert b.shape == (3 * p, 6 * p)
    assert gf2.is_self_dual(b)
    if d:
        assert weights.min_distance(b) == d


def test_family_rejects_wrong_prime():
    with pytest.raises(ValueError, match="3 mod 8"):
        C.self_dual_qdc_family(7, 1)


def test_non_self_dual_qdc():
    g = C.qdc_code(C.CirculantSpec(11, 1, 1, 1))
    assert not gf2.r_self_dual_check(g)


@pytest.mark.parametrize(
    "args,ok",
    [
        (("1", "u^2", "1+u^2", "0"), True),
        (("u^2", "1", "1+u^2", "0"), True),
        (("u^2", "1", "1+u", "u+u^2"), True),
        (("1", "1", "1", "0"), False),
    ],
)
def test_bordered_criterion(args, ok):
    r, s, t, lam = (int(v) for v in as_codes(list(args)))
    spec, border = C.CirculantSpec(11, r, s, t), C.BorderSpec(lam, 1, 1)
    assert C.bordered_self_dual_check(spec, border) == ok
    g = C.bordered_qdc_code(spec, border)
    assert g.shape == (12, 24)
    assert gf2.r_self_dual_check(g) == ok


def test_bordered_criterion_needs_unit_border():
    with pytest.raises(ValueError):
        C.bordered_self_dual_check(C.CirculantSpec(11, 0, 1, 1), C.BorderSpec(0, 2, 1))


def test_row_sum_and_describe():
    spec = C.CirculantSpec(11, 0, 4, 5)
    assert C.row_sum(spec) == 1  # 5 (u^2 + 1 + u^2) = 1
    assert C.describe(spec) == "C11(0,u^2,1+u^2)"
    assert C.describe(spec, C.BorderSpec(0, 1, 1)) == "B11(0,u^2,1+u^2,0,1,1)"


def test_as_circulant_spec_roundtrip():
    spec = C.CirculantSpec(13, 3, 6, 7)
    assert C.as_circulant_spec(C.q_matrix(spec)) == spec
    assert C.as_circulant_spec(np.eye(13, dtype=np.uint8) * 0 + 1) == C.CirculantSpec(13, 1, 1, 1)
