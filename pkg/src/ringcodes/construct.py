"""Construction descriptors: a small textual language naming every code we build.

Grammar (whitespace ignored)::

    desc   := name "(" args ")"
    name   := QR | QR' | QRbar | SQR | BSQR | C<p> | B<p> | gray | ext | idext
    args   := arg ("," arg)*
    arg    := desc | element | integer | key "=" value

Examples::

    QRbar(23)
    C11(0,u^2,1+u^2)
    B11(u^2,1,1+u,u+u^2,1,1)
    gray(C11(0,u^2,1+u^2))
    ext(gray(C11(0,u^2,1+u^2)),X=1366E7855836D5F97,c=1)
    idext(C11(0,u^2,1+u^2),X=[u^2 0 u^2 0 u^2 u^2 0 0 u+u^2 u u],c=1)

Binary extension vectors are hex (most significant bit first, right
aligned); R vectors are bracketed, space separated element lists.
"""

from __future__ import annotations

import re

import numpy as np

from . import circulant as C
from . import extend as E
from . import gf2, qr
from .gf2 import BitMatrix
from .ring import as_codes, element_name, parse_element

__all__ = ["build", "parse", "parse_x", "ext_descriptor", "vector_text"]

_HEAD = re.compile(r"\s*([A-Za-z][A-Za-z0-9']*)\s*\(")


def _split_args(body: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in body:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur or out:
        out.append("".join(cur).strip())
    return out


def parse(text: str):
    """Parse a descriptor into (name, positional args, keyword args)."""
    text = text.strip()
    m = _HEAD.match(text)
    if not m or not text.endswith(")"):
        raise ValueError(f"bad descriptor {text!r}")
    name = m.group(1)
    body = text[m.end() : -1]
    depth = 0
    for ch in body:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            raise ValueError(f"unbalanced parentheses in {text!r}")
    args, kwargs = [], {}
    for a in _split_args(body):
        if "=" in a and not a.startswith(("(", "[")) and _HEAD.match(a) is None:
            k, v = a.split("=", 1)
            kwargs[k.strip()] = v.strip()
        else:
            args.append(a)
    return name, args, kwargs


def _elements(args) -> list[int]:
    return [int(parse_element(a)) for a in args]


def vector_text(x) -> str:
    return "[" + " ".join(element_name(v) for v in np.ravel(x)) + "]"


def parse_x(raw: str, n: int, base) -> np.ndarray:
    if base is E.BINARY:
        return E.decode_hex_x(raw, n)
    raw = raw.strip()
    if raw.startswith("["):
        raw = raw[1:-1]
    return np.ravel(as_codes(raw))


def build(desc: str):
    """Build the generator (R-matrix or BitMatrix) named by ``desc``."""
    name, args, kw = parse(desc)
    low = name.lower()
    if low in ("qr", "qr'", "qrp", "qrbar", "sqr", "bsqr"):
        p = int(args[0])
        fam = qr.qr_family(p)
        if low == "qr":
            return fam.q1
        if low in ("qr'", "qrp"):
            return fam.q1p
        if low == "qrbar":
            return qr.extend_qr(fam, int(kw.get("i", 1)))
        if low == "sqr":
            return qr.subtract_sqr(qr.extend_qr(fam, 1))
        return qr.bsqr(p)
    if re.fullmatch(r"[CB]\d+", name):
        p = int(name[1:])
        vals = _elements(args)
        spec = C.CirculantSpec(p, *vals[:3])
        if name[0] == "C":
            if len(vals) != 3:
                raise ValueError("C_p takes (r,s,t)")
            return C.qdc_code(spec)
        if len(vals) != 6:
            raise ValueError("B_p takes (r,s,t,lambda,beta,gamma)")
        return C.bordered_qdc_code(spec, C.BorderSpec(*vals[3:]))
    if low == "gray":
        inner = build(args[0])
        return inner if isinstance(inner, BitMatrix) else gf2.gray_image(inner)
    if low in ("ext", "idext"):
        inner = build(args[0])
        base = E.base_for(inner)
        n = inner.ncols if isinstance(inner, BitMatrix) else np.shape(inner)[1]
        if low == "idext":
            n //= 2
        x = parse_x(kw["X"], n, base)
        c = 1 if base is E.BINARY else int(parse_element(kw.get("c", "1")))
        fn = E.extend_ext if low == "ext" else E.extend_idext
        return fn(inner, x, c, base=base)
    raise ValueError(f"unknown construction {name!r}")


def ext_descriptor(method: str, base_desc: str, x, c, binary: bool) -> str:
    xs = E.encode_hex_x(x) if binary else vector_text(x)
    cs = "1" if binary else element_name(c)
    return f"{method}({base_desc},X={xs},c={cs})"
