"""Append-only JSONL store of constructed codes."""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from . import gf2
from .gf2 import BitMatrix

__all__ = ["CodeRecord", "canonical_id", "store_append", "store_load", "store_query", "StoreError"]


class StoreError(ValueError):
    pass


def canonical_id(m: BitMatrix) -> str:
    """Hash of the reduced row echelon form, stable under row reordering."""
    rref = gf2.reduce(m)
    h = hashlib.sha256()
    h.update(f"{rref.ncols}:".encode())
    h.update(rref.bits.tobytes())
    return h.hexdigest()[:32]


@dataclass
class CodeRecord:
    id: str
    construction: str
    n: int
    k: int
    d: int
    form: str
    params: dict
    seed: int | None = None
    equivalence: str = "unchecked"
    created: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))

    @property
    def key(self) -> tuple:
        return (self.n, self.form, tuple(sorted(self.params.items())))

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "CodeRecord":
        return cls(**d)


def store_append(path, records) -> int:
    records = list(records)
    with open(path, "a", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")
        fh.flush()
        os.fsync(fh.fileno())
    return len(records)


def store_load(path) -> list[CodeRecord]:
    if not os.path.exists(path):
        return []
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                out.append(CodeRecord.from_dict(json.loads(line)))
            except (json.JSONDecodeError, TypeError) as exc:
                raise StoreError(f"{path}:{lineno}: corrupt record ({exc})") from None
    return out


def store_query(path, id=None, n=None, k=None, d=None, form=None, **params) -> list[CodeRecord]:
    """Records matching every given field; extra keywords match ``params`` entries."""
    out = []
    for r in store_load(path):
        if id is not None and r.id != id:
            continue
        if n is not None and r.n != n:
            continue
        if k is not None and r.k != k:
            continue
        if d is not None and r.d != d:
            continue
        if form is not None and r.form != form:
            continue
        if any(r.params.get(p) != v for p, v in params.items()):
            continue
        out.append(r)
    return out
