"""Weight enumeration, minimum distance and enumerator-form parameters.

Exact counting has two routes:

``walk``
    visits all 2^k codewords (Gray-code walk over a lookup table).
``infosets``
    exact counts of weights <= W from two disjoint information sets I1, I2:
    a word of weight <= W has weight <= W//2 on I1 or on I2.  Words are
    enumerated from systematic generators on each set, and the second pass
    keeps only words with more than W//2 ones on I1, so nothing is counted
    twice.  Only defined when the complement of some information set is
    itself an information set (always true for self-dual codes).

Minimum distance uses the walk for small dimension and Brouwer-Zimmermann
otherwise.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import _bits, _enum, gf2
from .gf2 import BitMatrix

log = logging.getLogger(__name__)

__all__ = [
    "WeightProfile",
    "EnumeratorParams",
    "FORMS",
    "weight_enumerator",
    "min_distance",
    "information_sets",
    "extract_params",
    "identify_form",
    "extremal_bound",
    "is_extremal",
    "FULL_WALK_CAP",
]

FULL_WALK_CAP = 40
AUTO_FULL_MAX_K = 28


@dataclass
class WeightProfile:
    n: int
    k: int
    counts: dict[int, int]
    complete: bool = True
    upto: int | None = None

    def __getitem__(self, w: int) -> int:
        if not self.complete and self.upto is not None and w > self.upto:
            raise KeyError(f"weight {w} is above the truncation threshold {self.upto}")
        return self.counts.get(w, 0)

    def has(self, w: int) -> bool:
        return self.complete or (self.upto is not None and w <= self.upto)

    @property
    def min_weight(self) -> int | None:
        nz = [w for w, c in self.counts.items() if w > 0 and c]
        return min(nz) if nz else None

    def to_json(self) -> str:
        out = {
            "n": self.n,
            "k": self.k,
            "complete": self.complete,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
        }
        if not self.complete:
            out["upto"] = self.upto
        return json.dumps(out)

    @classmethod
    def from_json(cls, text: str) -> "WeightProfile":
        d = json.loads(text)
        counts = {int(w): int(c) for w, c in d["counts"].items()}
        upto = None if d["complete"] else d.get("upto", max(counts))
        return cls(d["n"], d["k"], counts, d["complete"], upto)


def _from_hist(hist: np.ndarray, n: int, k: int, upto: int | None) -> WeightProfile:
    counts = {int(w): int(c) for w, c in enumerate(hist) if c and (upto is None or w <= upto)}
    return WeightProfile(n, k, counts, upto is None, upto)


def _basis(m: BitMatrix) -> BitMatrix:
    return gf2.reduce(m)


def weight_enumerator(m: BitMatrix, upto: int | None = None, method: str = "walk") -> WeightProfile:
    """Exact weight distribution, optionally truncated to weights <= ``upto``.

    ``method`` is ``walk`` (all 2^k codewords), ``infosets`` (two disjoint
    information sets, needs ``upto``) or ``auto`` (infosets when possible).
    """
    g = _basis(m)
    n, k = g.ncols, g.nrows
    if k == 0:
        return WeightProfile(n, 0, {0: 1}, upto is None, upto)
    if method == "auto":
        method = "infosets" if upto is not None and _disjoint_sets(g) is not None else "walk"
    if method == "infosets":
        if upto is None:
            raise ValueError("the infosets method counts low weights only; pass upto")
        return _infoset_profile(g, upto)
    if method != "walk":
        raise ValueError(f"unknown method {method!r}")
    if k > FULL_WALK_CAP:
        raise ValueError(f"k={k} exceeds the full-walk cap {FULL_WALK_CAP}; use upto with infosets or min_distance(bz)")
    t0 = time.perf_counter()
    hist = _enum.walk_histogram(g.words, n)
    log.info("walked 2^%d codewords of a length-%d code in %.1fs", k, n, time.perf_counter() - t0)
    if hist.sum() != 1 << k:
        raise AssertionError("walk lost codewords")
    return _from_hist(hist, n, k, upto)


# ------------------------------------------------------------ information sets


def _systematic(g: BitMatrix, order) -> tuple[np.ndarray, np.ndarray]:
    w = g.words.copy()
    r, piv = _bits.echelon_on_columns(w, np.asarray(order, dtype=np.int64), g.nrows)
    return w, piv


def _disjoint_sets(g: BitMatrix, tries: int = 8, seed: int = 0):
    """Two disjoint information sets, as (G1, I1, G2, I2), or None."""
    n, k = g.ncols, g.nrows
    if 2 * k > n:
        return None
    rng = np.random.default_rng(seed)
    order = np.arange(n)
    for attempt in range(tries):
        w1, p1 = _systematic(g, order)
        if p1.size != k:
            return None
        rest = np.setdiff1d(order, p1, assume_unique=False)
        rest = [c for c in order if c in set(rest.tolist())]
        w2, p2 = _systematic(g, rest)
        if p2.size == k:
            return w1, p1, w2, p2
        order = rng.permutation(n)
    return None


def _mask(cols, ncols: int) -> np.ndarray:
    bits = np.zeros((1, ncols), dtype=np.uint8)
    bits[0, cols] = 1
    return _bits.pack(bits)[0]


def _infoset_profile(g: BitMatrix, upto: int) -> WeightProfile:
    n, k = g.ncols, g.nrows
    sets = _disjoint_sets(g)
    if sets is None:
        raise ValueError("no two disjoint information sets; use the walk")
    w1, p1, w2, p2 = sets
    t = upto // 2
    mask = _mask(p1, n)
    none = np.zeros_like(mask)
    hist = np.zeros(upto + 1, dtype=np.int64)
    hist[0] = 1
    t0 = time.perf_counter()
    for w in range(1, min(t, k) + 1):
        hist += _enum.combo_histogram(w1, w, upto, none, 0)
    for w in range(1, min(t, k) + 1):
        hist += _enum.combo_histogram(w2, w, upto, mask, t + 1)
    steps = 2 * sum(comb(k, w) for w in range(1, t + 1))
    log.info("counted weights <= %d from %d combinations in %.1fs", upto, steps, time.perf_counter() - t0)
    return _from_hist(hist, n, k, upto)


def information_sets(g: BitMatrix, seed: int = 0):
    """Disjoint information sets for Brouwer-Zimmermann.

    Columns are visited in a seeded random order; each round eliminates on
    the columns no earlier set has claimed, then completes the pivot set from
    claimed columns.  Returns a list of (systematic words, relative rank).
    """
    n, k = g.ncols, g.nrows
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    free = list(perm)
    out = []
    while free:
        claimed = [c for c in perm if c not in set(free)]
        w, piv = _systematic(g, free + claimed)
        own = [c for c in piv.tolist() if c in set(free)]
        if not own:
            break
        out.append((w, len(own)))
        own_set = set(own)
        free = [c for c in free if c not in own_set]
    log.debug("information sets (seed %d): relative ranks %s", seed, [r for _, r in out])
    return out


def _bz(g: BitMatrix, seed: int) -> int:
    k = g.nrows
    sets = information_sets(g, seed)
    deficits = [k - r for _, r in sets]
    best = int(min(_bits.row_weight(r) for r in g.words))
    for w, _ in sets:
        best = min(best, int(_enum.combo_min_weight(w, 1, best)))
    for level in range(1, k + 1):
        for j, (words, _) in enumerate(sets):
            lb = sum(max(0, level + (1 if i < j else 0) - d) for i, d in enumerate(deficits))
            if lb >= best:
                return best
            if level > 1:
                best = int(_enum.combo_min_weight(words, level, best))
        lb = sum(max(0, level + 1 - d) for d in deficits)
        log.debug("BZ level %d: lower %d upper %d", level, lb, best)
        if lb >= best:
            return best
    return best


def min_distance(m: BitMatrix, method: str = "auto", seed: int = 0) -> int:
    """Exact minimum nonzero weight."""
    g = _basis(m)
    if g.nrows == 0:
        raise ValueError("no nonzero codewords")
    if method == "auto":
        method = "full" if g.nrows <= AUTO_FULL_MAX_K else "bz"
    if method == "full":
        return weight_enumerator(g).min_weight
    if method == "bz":
        t0 = time.perf_counter()
        d = _bz(g, seed)
        log.info("BZ: d=%d for [%d,%d] in %.1fs", d, g.ncols, g.nrows, time.perf_counter() - t0)
        return d
    raise ValueError(f"unknown method {method!r}")


# ------------------------------------------------------------- enumerator forms


@dataclass
class EnumeratorParams:
    form: str
    values: dict[str, int] = field(default_factory=dict)

    def __getattr__(self, name):
        try:
            return self.__dict__["values"][name]
        except KeyError:
            raise AttributeError(name) from None

    def as_dict(self) -> dict:
        return {"form": self.form, **self.values}


# coefficient -> (constant, {param: factor}); first key is the lowest nonzero weight
FORMS: dict[str, dict[int, tuple[int, dict[str, int]]]] = {
    "w72_typeII": {12: (4398, {"alpha": 1}), 16: (197073, {"alpha": -12})},
    "w96": {16: (-28086, {"alpha": 1}), 20: (3666432, {"alpha": -16})},
    "w72_1": {
        12: (0, {"beta": 2}),
        14: (8640, {"gamma": -64}),
        16: (124281, {"beta": -24, "gamma": 384}),
    },
    "w72_2": {
        12: (0, {"beta": 2}),
        14: (7616, {"gamma": -64}),
        16: (134521, {"beta": -24, "gamma": 384}),
    },
    "w68_1": {12: (442, {"beta": 4}), 14: (10864, {"beta": -8})},
    "w68_2": {12: (442, {"beta": 4}), 14: (14960, {"beta": -8, "gamma": -256})},
}
_FORM_LENGTH = {"w72_typeII": 72, "w96": 96, "w72_1": 72, "w72_2": 72, "w68_1": 68, "w68_2": 68}


class FormMismatch(ValueError):
    pass


def _solve(profile: WeightProfile, form: str) -> dict[str, int]:
    rel = FORMS[form]
    low = min(rel)
    for w in range(1, low):
        if profile.has(w) and profile[w]:
            raise FormMismatch(f"profile does not match form {form}: A{w}={profile[w]} must vanish")
    known: dict[str, int] = {}
    pending = sorted(rel)
    progress = True
    while progress:
        progress = False
        for w in pending:
            const, coeffs = rel[w]
            unknown = [p for p in coeffs if p not in known]
            if len(unknown) != 1 or not profile.has(w):
                continue
            p = unknown[0]
            rest = profile[w] - const - sum(coeffs[q] * known[q] for q in coeffs if q in known)
            if rest % coeffs[p]:
                raise FormMismatch(f"profile does not match form {form}: no integral {p} from A{w}")
            known[p] = rest // coeffs[p]
            progress = True
    params = {p for _, cf in rel.values() for p in cf}
    if params - set(known):
        raise FormMismatch(f"profile does not match form {form}: missing coefficients for {sorted(params - set(known))}")
    for w, (const, coeffs) in rel.items():
        if profile.has(w):
            expect = const + sum(c * known[p] for p, c in coeffs.items())
            if expect != profile[w]:
                raise FormMismatch(f"profile does not match form {form}: A{w}={profile[w]}, form gives {expect}")
    return known


def extract_params(profile: WeightProfile, form: str) -> EnumeratorParams:
    """Solve an enumerator form for its free parameters and check every available coefficient.

    ``form`` may be a form name, ``raw`` (no parameters) or ``auto``.
    """
    form = form.lower().replace("typeii", "typeII")
    if form == "raw":
        return EnumeratorParams("raw", {f"A{w}": c for w, c in sorted(profile.counts.items())})
    if form == "auto":
        return identify_form(profile)
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}")
    return EnumeratorParams(form, _solve(profile, form))


def identify_form(profile: WeightProfile, doubly_even: bool | None = None) -> EnumeratorParams:
    """Pick the enumerator family matching the profile's length and type.

    Type I forms of the same length share their low coefficients up to a
    shift of gamma by 16 (length 72), or agree at gamma = 16 (length 68).
    Negative parameters are rejected, then any further coefficient decides.
    """
    if doubly_even is None:
        doubly_even = all(w % 4 == 0 for w, c in profile.counts.items() if c)
    n = profile.n
    if n == 72 and doubly_even:
        cands = ["w72_typeII"]
    elif n == 96 and doubly_even:
        cands = ["w96"]
    elif n in (68, 72):
        cands = [f for f, ln in _FORM_LENGTH.items() if ln == n and f != "w72_typeII"]
    else:
        return extract_params(profile, "raw")
    fits = []
    errors = []
    for f in cands:
        try:
            vals = _solve(profile, f)
        except FormMismatch as exc:
            errors.append(str(exc))
            continue
        if f not in ("w72_typeII", "w96") and any(v < 0 for v in vals.values()):
            errors.append(f"{f}: negative parameter {vals}")
            continue
        fits.append(EnumeratorParams(f, vals))
    if len(fits) == 1:
        return fits[0]
    if not fits:
        raise FormMismatch("profile does not match form: " + "; ".join(errors))
    raise FormMismatch(f"ambiguous enumerator form: {[p.as_dict() for p in fits]}; extend the profile")


def extremal_bound(n: int, typ: str | int) -> int:
    """Upper bound on d for a binary self-dual code of length n and type I or II."""
    typ = str(typ).upper()
    if n % 2:
        raise ValueError("self-dual codes have even length")
    base = 4 * (n // 24) + 4
    if typ in ("I", "1") and n % 24 == 22:
        return base + 2
    if typ not in ("I", "II", "1", "2"):
        raise ValueError(f"type must be I or II, got {typ!r}")
    return base


def is_extremal(n: int, d: int, typ: str | int) -> bool:
    return d == extremal_bound(n, typ)
