"""Quadratic circulant matrices and (bordered) double circulant codes over R."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import gf2
from .qr import is_odd_prime, residue_sets
from .ring import MUL, element_name

__all__ = [
    "CirculantSpec",
    "BorderSpec",
    "q_matrix",
    "r_matmul",
    "as_circulant_spec",
    "qdc_closed_form",
    "qdc_identity_check",
    "qdc_code",
    "bordered_qdc_code",
    "self_dual_qdc_family",
    "bordered_self_dual_check",
    "row_sum",
]


class CirculantSpec(NamedTuple):
    p: int
    r: int
    s: int
    t: int

    def __str__(self):
        return f"Q{self.p}({element_name(self.r)},{element_name(self.s)},{element_name(self.t)})"


class BorderSpec(NamedTuple):
    lam: int
    beta: int
    gamma: int


def q_matrix(spec: CirculantSpec) -> np.ndarray:
    """p x p circulant with r on the diagonal, s on residue and t on non-residue offsets."""
    p, r, s, t = spec
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    q, _ = residue_sets(p)
    row = np.array([r] + [s if i in q else t for i in range(1, p)], dtype=np.uint8)
    return np.stack([np.roll(row, j) for j in range(p)])


def r_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over R."""
    prod = MUL[a[:, :, None], b[None, :, :]]
    return np.bitwise_xor.reduce(prod, axis=1).astype(np.uint8)


def as_circulant_spec(m: np.ndarray) -> CirculantSpec | None:
    """Recover (r, s, t) if ``m`` is a quadratic circulant, else None."""
    p = m.shape[0]
    q, n = residue_sets(p)
    row = m[0]
    s_vals = {int(row[i]) for i in q}
    t_vals = {int(row[i]) for i in n}
    if len(s_vals) != 1 or len(t_vals) != 1:
        return None
    spec = CirculantSpec(p, int(row[0]), s_vals.pop(), t_vals.pop())
    if not np.array_equal(q_matrix(spec), m):
        return None
    return spec


def _times(k: int, x: int) -> int:
    # integer multiple in characteristic 2
    return int(x) if k % 2 else 0


def qdc_closed_form(spec: CirculantSpec) -> CirculantSpec:
    """Parameters of Q Q^T from the closed form (characteristic 2)."""
    p, r, s, t = (int(v) for v in spec)
    k = p // 4
    sq = lambda x: int(MUL[x, x])  # noqa: E731
    st2 = sq(s ^ t)
    if p % 4 == 1:
        return CirculantSpec(p, sq(r), sq(s) ^ _times(k, st2), sq(t) ^ _times(k, st2))
    diag = sq(r) ^ sq(s) ^ sq(t)
    off = int(MUL[r, s]) ^ int(MUL[r, t]) ^ _times(k, st2) ^ int(MUL[s, t])
    return CirculantSpec(p, diag, off, off)


def qdc_identity_check(spec: CirculantSpec) -> CirculantSpec:
    """Q Q^T computed directly and by the closed form; raises if they disagree."""
    q = q_matrix(spec)
    direct = as_circulant_spec(r_matmul(q, q.T))
    closed = qdc_closed_form(spec)
    if direct != closed:
        raise AssertionError(f"Q Q^T mismatch for {spec}: direct {direct}, closed form {closed}")
    return closed


def qdc_code(spec: CirculantSpec) -> np.ndarray:
    """Generator [I_p | Q_p(r, s, t)]."""
    return np.concatenate([np.eye(spec.p, dtype=np.uint8), q_matrix(spec)], axis=1)


def bordered_qdc_code(spec: CirculantSpec, border: BorderSpec) -> np.ndarray:
    p = spec.p
    right = np.zeros((p + 1, p + 1), dtype=np.uint8)
    right[0, 0] = border.lam
    right[0, 1:] = border.beta
    right[1:, 0] = border.gamma
    right[1:, 1:] = q_matrix(spec)
    return np.concatenate([np.eye(p + 1, dtype=np.uint8), right], axis=1)


_FAMILIES = {1: (0, 4, 5), 2: (6, 3, 2)}  # (0,u^2,1+u^2), (u+u^2,1+u,u)


def self_dual_qdc_family(p: int, which: int) -> np.ndarray:
    if p % 8 != 3:
        raise ValueError(f"the self-dual QDC families need p = 3 mod 8, got {p}")
    g = qdc_code(CirculantSpec(p, *_FAMILIES[which]))
    if not gf2.r_self_dual_check(g):
        raise RuntimeError(f"C_{p} family {which} is not self-dual")
    return g


def row_sum(spec: CirculantSpec) -> int:
    """Common row sum r + ((p-1)/2)(s + t) of Q_p(r, s, t)."""
    return int(spec.r) ^ _times((spec.p - 1) // 2, int(spec.s) ^ int(spec.t))


def bordered_self_dual_check(spec: CirculantSpec, border: BorderSpec) -> bool:
    """Sufficient condition for B_p(r, s, t, lambda, 1, 1) to be self-dual."""
    if border.beta != 1 or border.gamma != 1:
        raise ValueError("the bordered criterion needs beta = gamma = 1")
    lam = int(border.lam)
    ok = (
        qdc_identity_check(spec) == CirculantSpec(spec.p, 0, 1, 1)
        and row_sum(spec) == lam
        and MUL[lam, lam] == 0
    )
    if ok and not gf2.r_self_dual_check(bordered_qdc_code(spec, border)):
        raise AssertionError(f"{spec} with {border} meets the criterion but is not self-dual")
    return ok


def describe(spec: CirculantSpec, border: BorderSpec | None = None) -> str:
    args = [element_name(spec.r), element_name(spec.s), element_name(spec.t)]
    if border is None:
        return f"C{spec.p}({','.join(args)})"
    args += [element_name(v) for v in border]
    return f"B{spec.p}({','.join(args)})"

