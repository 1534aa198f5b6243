import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ringcodes import gf2, qr, weights
from ringcodes.ring import as_codes


def test_residue_sets_examples():
    assert qr.residue_sets(7) == ({1, 2, 4}, {3, 5, 6})
    assert qr.residue_sets(3) == ({1}, {2})
    q, n = qr.residue_sets(17)
    assert len(q) == len(n) == 8 and 2 in q


@pytest.mark.parametrize("p", [1, 2, 9, 15])
def test_residue_sets_reject_non_primes(p):
    with pytest.raises(ValueError, match="odd prime"):
        qr.residue_sets(p)


@pytest.mark.parametrize("p", [7, 17, 23, 31, 41])
def test_context_invariants(p):
    ctx = qr.QrContext(p)
    assert len(ctx.residues) == len(ctx.nonresidues) == (p - 1) // 2
    one = np.zeros(p, dtype=np.uint8)
    one[0] = 1
    assert np.array_equal(ctx.e1 ^ ctx.e2 ^ one, ctx.h)
    assert ctx.h.all()


def test_mu_identity_and_swap():
    ctx = qr.QrContext(23)
    assert np.array_equal(qr.mu(1, ctx.e1), ctx.e1)
    for n in ctx.nonresidues:
        assert np.array_equal(qr.mu(n, ctx.e1), ctx.e2)
    with pytest.raises(ValueError):
        qr.mu(23, ctx.e1)


@given(arrays(np.uint8, 11, elements=st.integers(0, 1)), arrays(np.uint8, 11, elements=st.integers(0, 1)),
       st.integers(1, 10))
def test_mu_is_multiplicative(f, g, a):
    lhs = qr.mu(a, qr.f2_cyclic_product(f, g))
    rhs = qr.f2_cyclic_product(qr.mu(a, f), qr.mu(a, g))
    assert np.array_equal(lhs, rhs)


def test_p7_idempotent_row():
    fam = qr.qr_family(7)
    expect = as_codes("1 u^2 u^2 1+u^2 u^2 1+u^2 1+u^2")
    assert np.array_equal(fam.idempotents["q1p"], expect)
    assert gf2.r_rank(fam.q1) == 12 and gf2.r_rank(fam.q1p) == 9


def test_qr_family_rejects_bad_prime():
    with pytest.raises(ValueError, match="2 is not a QR mod 5"):
        qr.qr_family(5)


@pytest.mark.parametrize("p", [7, 17, 23])
def test_idempotents_square_to_themselves(p):
    for e in qr.qr_family(p).idempotents.values():
        assert np.array_equal(qr.cyclic_product(e, e), e)


def _span(rmat):
    return gf2.gray_image(rmat)


def _cyclic(row):
    return qr.shift_stack(row, len(row))


@pytest.mark.parametrize("p", [7, 17, 23])
def test_qr_intersections_and_sums(p):
    fam = qr.qr_family(p)
    ctx = fam.ctx
    q1, q2, q1p, q2p = (_span(m) for m in (fam.q1, fam.q2, fam.q1p, fam.q2p))
    h = np.ones((1, p), dtype=np.uint8)
    hspan = _span(h)
    # a) mu_n maps Q1 onto Q2 and Q1' onto Q2'
    n = min(ctx.nonresidues)
    assert gf2.same_span(_span(qr.mu(n, fam.q1)), q2)
    assert gf2.same_span(_span(qr.mu(n, fam.q1p)), q2p)
    # b) Q1 cap Q2 = <h>, Q1 + Q2 = R_p
    assert gf2.rank(q1.stack(q2)) == 3 * p
    assert q1.nrows + q2.nrows - 3 * p == 3
    assert gf2.contains(q1, hspan) and gf2.contains(q2, hspan)
    # c), e) cardinalities
    assert q1.nrows == q2.nrows == 3 * (p + 1) // 2
    assert q1p.nrows == q2p.nrows == 3 * (p - 1) // 2
    # d) Q1 = Q1' + <h>
    assert gf2.same_span(q1, q1p.stack(hspan))
    assert gf2.same_span(q2, q2p.stack(hspan))
    # f) Q1' cap Q2' = 0, Q1' + Q2' = <1 + h>
    both = q1p.stack(q2p)
    assert gf2.rank(both) == q1p.nrows + q2p.nrows
    one_plus_h = ctx.e1 ^ ctx.e2
    assert gf2.same_span(both, _span(_cyclic(one_plus_h)))


@pytest.mark.parametrize("p", [7, 23, 31])
def test_extended_qr_self_dual_when_p_is_minus_one(p):
    ext = qr.extend_qr(qr.qr_family(p), 1)
    assert gf2.r_self_dual_check(ext)
    assert gf2.is_self_dual(gf2.gray_image(ext))


def test_extended_qr_duals_when_p_is_plus_one():
    fam = qr.qr_family(17)
    g1 = gf2.gray_image(qr.extend_qr(fam, 1))
    g2 = gf2.gray_image(qr.extend_qr(fam, 2))
    assert gf2.same_span(gf2.dual(g1), g2)
    assert not gf2.is_self_dual(g1)


def test_p7_extended_matrix_layout():
    ext = qr.extend_qr(qr.qr_family(7), 1)
    assert ext.shape == (4, 8)
    assert (ext[:3, 0] == 0).all() and (ext[3] == 1).all()


def test_sqr7():
    s = qr.subtract_sqr(qr.extend_qr(qr.qr_family(7), 1))
    b = gf2.gray_image(s)
    assert b.shape == (9, 18)
    assert gf2.is_self_dual(b) and not gf2.is_doubly_even(b)
    assert weights.min_distance(b) == 4


@pytest.mark.parametrize("p,n,d", [(7, 22, 6), (23, 70, None)])
def test_bsqr(p, n, d):
    b = qr.bsqr(p)
    assert b.shape == (n // 2, n)
    assert gf2.is_self_dual(b)
    if d:
        assert weights.min_distance(b) == d


def test_bsqr_needs_minus_one():
    with pytest.raises(ValueError):
        qr.bsqr(17)


def test_lifted_idempotent_check():
    ctx = qr.QrContext(7)
    assert qr.lifted_idempotent_check(ctx.e1, ctx.e2, np.zeros(7))
    assert not qr.lifted_idempotent_check(ctx.e1, ctx.e2, ctx.h)
