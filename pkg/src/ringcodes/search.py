"""Seeded randomized search for self-dual extensions, plus record building."""

from __future__ import annotations

import logging
import os
import queue
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import construct
from . import extend as E
from . import gf2
from . import weights as W
from .gf2 import BitMatrix
from .store import CodeRecord, canonical_id, store_append, store_load

log = logging.getLogger(__name__)

__all__ = ["SearchSpec", "search_extensions", "sample_x", "make_record", "table_records", "profile_weight"]

# highest coefficient the enumerator forms need, per binary length
_FORM_TOP = {68: 14, 72: 16, 96: 20}


@dataclass
class SearchSpec:
    base: str
    method: str = "ext"
    trials: int = 100
    seed: int = 0
    target: tuple[int, int, int] = (68, 34, 12)
    store: str | None = None
    keep_duplicates: bool = False
    workers: int | None = None
    candidates: tuple[str, ...] = ()  # explicit X vectors tried before any sampling

    def __post_init__(self):
        if self.method not in ("ext", "idext"):
            raise ValueError(f"method must be ext or idext, got {self.method!r}")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        self.target = tuple(int(v) for v in self.target)
        if len(self.target) != 3:
            raise ValueError("target is n,k,d")


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent PCG64 stream per trial, so results never depend on scheduling."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def _required_norm(method: str, g: np.ndarray, base: E.Base) -> int:
    if method == "ext":
        return 1
    n = g.shape[0]
    v = int(np.bitwise_xor.reduce(g[0, n:]))
    vinv = base.inverse(v)
    return 1 ^ base.times(n, base.mul(vinv, vinv))


def sample_x(rng: np.random.Generator, n: int, base: E.Base, norm: int) -> np.ndarray:
    """Uniform symbols, then coordinate 0 re-drawn among values making <X,X> = norm."""
    q = base.mul_table.shape[0]
    x = rng.integers(0, q, n, dtype=np.uint8)
    rest = base.inner(x[1:], x[1:])
    squares = np.diagonal(base.mul_table)
    choices = np.flatnonzero(squares == (norm ^ rest))
    if choices.size == 0:
        raise E.ExtensionError(f"no symbol squares to {base.show(norm ^ rest)}")
    x[0] = choices[0] if choices.size == 1 else rng.choice(choices)
    return x


def profile_weight(n: int, d: int) -> int:
    return max(d, _FORM_TOP.get(n, d))


def _params(profile: W.WeightProfile) -> tuple[str, dict]:
    try:
        p = W.identify_form(profile)
    except W.FormMismatch as exc:
        log.info("%s; recording raw counts", exc)
        p = W.extract_params(profile, "raw")
    return p.form, dict(p.values)


def make_record(desc: str, code=None, seed: int | None = None, d_min: int | None = None) -> CodeRecord | None:
    """Build (or take) the code for ``desc`` and compute its record.

    Returns None when ``d_min`` is given and the code has a lighter word.
    """
    if code is None:
        code = construct.build(desc)
    b = code if isinstance(code, BitMatrix) else gf2.gray_image(code)
    k = gf2.rank(b)
    upto = profile_weight(b.ncols, d_min or 0)
    prof = W.weight_enumerator(b, upto=upto, method="auto") if upto else None
    if prof is not None and prof.min_weight is not None:
        d = prof.min_weight
    else:
        d = W.min_distance(b)
    if d_min is not None and d < d_min:
        return None
    if prof is None or not prof.has(max(d, upto)):
        prof = W.weight_enumerator(b, upto=max(d, upto), method="auto")
    form, params = _params(prof)
    return CodeRecord(canonical_id(b), desc, b.ncols, k, d, form, params, seed)


def _trial(spec: SearchSpec, g, base: E.Base, norm: int, index: int):
    rng = trial_rng(spec.seed, index)
    n = g.shape[0] if spec.method == "idext" else g.shape[1]
    if index < len(spec.candidates):
        x = construct.parse_x(spec.candidates[index], n, base)
    else:
        x = sample_x(rng, n, base, norm)
    c = 1 if base is E.BINARY else int(rng.choice([1, 7]))
    fn = E.extend_ext if spec.method == "ext" else E.extend_idext
    code = fn(g, x, c, base=base, check_input=False)
    desc = construct.ext_descriptor(spec.method, spec.base, x, c, base is E.BINARY)
    b = code if isinstance(code, BitMatrix) else gf2.gray_image(code)
    tn, tk, td = spec.target
    if b.ncols != tn or gf2.rank(b) != tk:
        raise ValueError(f"extension is [{b.ncols},{gf2.rank(b)}], target is [{tn},{tk}]")
    return index, make_record(desc, code, spec.seed, td)


def _writer(q: "queue.Queue", spec: SearchSpec, existing: list[CodeRecord], out: list):
    pending = []
    while True:
        item = q.get()
        if item is None:
            break
        pending.append(item)
    # dedup in trial order, whatever order the workers finished in
    seen_keys = {r.key for r in existing}
    seen_ids = {r.id for r in existing}
    for _, rec in sorted(pending, key=lambda t: t[0]):
        if rec is None or rec.id in seen_ids:
            continue
        if not spec.keep_duplicates and rec.key in seen_keys:
            continue
        seen_ids.add(rec.id)
        seen_keys.add(rec.key)
        out.append(rec)
    if spec.store and out:
        store_append(spec.store, out)


def search_extensions(spec: SearchSpec) -> list[CodeRecord]:
    """Run ``spec.trials`` seeded trials and return (and store) the new records.

    The first ``len(spec.candidates)`` trials use the given vectors instead of
    sampled ones.
    """
    if spec.trials == 0:
        return []
    g = construct.build(spec.base)
    base = E.base_for(g)
    g = np.atleast_2d(base.coerce(g))
    if not base.is_self_dual(g):
        raise E.ExtensionError("base code is not self-dual")
    if spec.method == "idext" and not E.is_standard_form(g):
        raise E.ExtensionError("idext needs a base generator in standard form [I | A]")
    norm = _required_norm(spec.method, g, base)
    existing = store_load(spec.store) if spec.store else []

    q: queue.Queue = queue.Queue()
    out: list[CodeRecord] = []
    writer = threading.Thread(target=_writer, args=(q, spec, existing, out), daemon=True)
    writer.start()
    workers = spec.workers or int(os.environ.get("RINGCODES_THREADS", "0")) or min(4, os.cpu_count() or 1)
    try:
        with ThreadPoolExecutor(workers) as pool:
            for res in pool.map(lambda i: _trial(spec, g, base, norm, i), range(spec.trials)):
                q.put(res)
    finally:
        q.put(None)
        writer.join()
    return out


def _c11_desc(which: int) -> str:
    return {1: "C11(0,u^2,1+u^2)", 2: "C11(u+u^2,1+u,u)"}[which]


def table_records(table: int) -> list[CodeRecord]:
    """Records for the tabulated [68,34,12] extensions (tables of hex vectors)."""
    from . import tables as T

    data, which = {7: (T.TABLE7, 1), 8: (T.TABLE8, 2)}[table]
    out = []
    for _label, hexx, _g, _b in data:
        desc = f"ext(gray({_c11_desc(which)}),X={hexx},c=1)"
        out.append(make_record(desc, T.ext68_code(which, hexx)))
    return out
