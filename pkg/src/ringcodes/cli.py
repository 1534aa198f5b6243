"""Command line interface: ``ringcodes <subcommand> ...``.

Code files hold one generator row per line.  Binary rows are strings of
0/1 digits; R rows are element names separated by spaces or commas
(``0 1 u u^2 1+u ...``).  Lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

import numpy as np

from . import circulant as C
from . import construct
from . import extend as E
from . import gf2, qr
from . import weights as W
from .gf2 import BitMatrix
from .ring import as_codes, element_name, parse_element

log = logging.getLogger("ringcodes")


def read_code(path: str):
    """BitMatrix for 0/1 digit rows, R-matrix (uint8 codes) otherwise."""
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError(f"{path}: no generator rows")
    if all(set(ln) <= {"0", "1"} for ln in lines) and any(len(ln) > 1 for ln in lines):
        return BitMatrix.from_text("\n".join(lines))
    rows = [ln.replace(",", " ").split() for ln in lines]
    if len({len(r) for r in rows}) != 1:
        raise ValueError(f"{path}: rows have different lengths")
    return np.atleast_2d(as_codes(rows))


def format_code(code, emit: str = "r") -> str:
    if emit == "gray" or isinstance(code, BitMatrix):
        b = code if isinstance(code, BitMatrix) else gf2.gray_image(code)
        return b.to_text()
    return "\n".join(" ".join(element_name(v) for v in row) for row in code) + "\n"


def _summary(code) -> str:
    b = code if isinstance(code, BitMatrix) else gf2.gray_image(code)
    sd = gf2.is_self_dual(b)
    kind = ""
    if sd:
        kind = " Type II" if gf2.is_doubly_even(b) else " Type I"
    return f"# binary [{b.ncols},{gf2.rank(b)}] self-dual={sd}{kind}"


def _emit(args, code):
    if not args.quiet:
        sys.stdout.write(_summary(code) + "\n")
    sys.stdout.write(format_code(code, args.emit))


def cmd_qr(args):
    fam = qr.qr_family(args.p)
    if args.variant == "bsqr":
        code = qr.bsqr(args.p)
    else:
        code = {
            "q1": lambda: fam.q1,
            "q1p": lambda: fam.q1p,
            "q2": lambda: fam.q2,
            "q2p": lambda: fam.q2p,
            "extended": lambda: qr.extend_qr(fam, 1),
            "sqr": lambda: qr.subtract_sqr(qr.extend_qr(fam, 1)),
        }[args.variant]()
    _emit(args, code)


def cmd_qdc(args):
    spec = C.CirculantSpec(args.p, *(int(parse_element(v)) for v in (args.r, args.s, args.t)))
    if args.border:
        parts = [int(parse_element(v)) for v in args.border.split(",")]
        if len(parts) != 3:
            raise ValueError("--border takes lambda,beta,gamma")
        code = C.bordered_qdc_code(spec, C.BorderSpec(*parts))
    else:
        code = C.qdc_code(spec)
    _emit(args, code)


def cmd_extend(args):
    g = read_code(args.input)
    base = E.base_for(g)
    n = g.ncols if isinstance(g, BitMatrix) else g.shape[1]
    if args.method == "idext":
        n //= 2
    x = construct.parse_x(args.x, n, base)
    c = 1 if base is E.BINARY else int(parse_element(args.c))
    fn = E.extend_ext if args.method == "ext" else E.extend_idext
    _emit(args, fn(g, x, c, base=base))


def _binary(path):
    code = read_code(path)
    return code if isinstance(code, BitMatrix) else gf2.gray_image(code)


def cmd_mindist(args):
    b = _binary(args.file)
    t0 = time.perf_counter()
    d = W.min_distance(b, args.method, seed=args.seed)
    print(json.dumps({"n": b.ncols, "k": gf2.rank(b), "d": d, "method": args.method,
                      "seconds": round(time.perf_counter() - t0, 3)}))


def cmd_wenum(args):
    b = _binary(args.file)
    prof = W.weight_enumerator(b, upto=args.upto, method=args.method)
    out = json.loads(prof.to_json())
    if args.form:
        out["params"] = W.extract_params(prof, args.form).as_dict()
    print(json.dumps(out))


def cmd_verify(args):
    from . import tables as T

    report = T.verify_tables(args.table, deep=args.deep, count_method=args.count_method, threads=args.threads)
    print(T.format_report(report))
    bad = report.failures()
    print(f"{len(report.results)} rows, {len(bad)} failing cells")
    return 0 if report.ok else 1


def cmd_search(args):
    from .search import SearchSpec, search_extensions

    target = tuple(int(v) for v in args.target.split(","))
    spec = SearchSpec(args.base, args.method, args.trials, args.seed, target, args.store,
                      args.keep_duplicates, args.threads, tuple(args.x or ()))
    recs = search_extensions(spec)
    for r in recs:
        print(r.to_json())
    log.info("%d new records", len(recs))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ringcodes", description="Self-dual codes over F2+uF2+u^2F2 (u^3=u).")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def emitter(p):
        p.add_argument("--emit", choices=["r", "gray"], default="r", help="R rows or binary Gray image")
        p.add_argument("-q", "--quiet", action="store_true", help="omit the summary comment line")

    p = sub.add_parser("qr", help="quadratic residue codes")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--variant", choices=["q1", "q1p", "q2", "q2p", "extended", "sqr", "bsqr"], default="q1")
    emitter(p)
    p.set_defaults(func=cmd_qr)

    p = sub.add_parser("qdc", help="quadratic double circulant codes")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--border", help="lambda,beta,gamma")
    emitter(p)
    p.set_defaults(func=cmd_qdc)

    p = sub.add_parser("extend", help="self-dual extension to length n+2")
    p.add_argument("--method", choices=["ext", "idext"], default="ext")
    p.add_argument("--input", required=True, help="code file ('-' for stdin)")
    p.add_argument("--x", required=True, help="hex (binary base) or element list (R base)")
    p.add_argument("--c", default="1", help="1 or w (= 1+u+u^2)")
    emitter(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("mindist", help="minimum distance of a code file")
    p.add_argument("file")
    p.add_argument("--method", choices=["auto", "full", "bz"], default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("wenum", help="weight distribution (JSON)")
    p.add_argument("file")
    p.add_argument("--upto", type=int)
    p.add_argument("--method", choices=["walk", "infosets", "auto"], default="auto")
    p.add_argument("--form", choices=sorted(W.FORMS) + ["raw", "auto"])
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_wenum)

    p = sub.add_parser("verify", help="rebuild and check the reference tables")
    p.add_argument("--table", default="all", help="1..8 or all")
    p.add_argument("--deep", action="store_true", help="include multi-hour rows")
    p.add_argument("--count-method", choices=["walk", "infosets", "auto"], default="auto")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="seeded randomized extension search")
    p.add_argument("--base", required=True, help="construction descriptor, e.g. gray(C11(0,u^2,1+u^2))")
    p.add_argument("--method", choices=["ext", "idext"], default="ext")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target", required=True, help="n,k,d")
    p.add_argument("--store", help="JSONL file to append new records to")
    p.add_argument("--keep-duplicates", action="store_true")
    p.add_argument("--x", action="append", help="explicit X tried before sampling (repeatable)")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    threads = getattr(args, "threads", None)
    if threads and args.cmd != "search":
        import numba

        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    try:
        return args.func(args) or 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
