"""Command-line entry point: ``vogelqdim {qdim,universal,limit,verify,tables}``.

Exit codes: 0 success, 1 a table mismatch, 2 usage error, 3 a singular
value or a limit whose vanishing counts disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .exact import Q, qstr
from .rootsys import build_root_system, cartan_power_weights, qdim_of_spec, weyl_dim, weyl_qdim
from .sinhprod import SinhError, SinhSum, TermClass
from .tables import NOT_COVERED, BelowStableRank, SweepConfig, expected_rep, load_records, parse_rep, verify_sweep
from .universal import universal_X
from .vogel import LINES, LimitCountMismatch, VogelError, VogelPoint, parse_algebra, vogel_point

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SINGULAR = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj: dict, text: str, fmt: str, out=None) -> None:
    s = json.dumps(obj, indent=2) if fmt == "json" else text
    if out:
        with open(out, "w") as fh:
            fh.write(s + "\n")
    else:
        print(s)


def _point(args) -> tuple:
    raw = [args.alpha, args.beta, args.gamma]
    if args.algebra and any(v is not None for v in raw):
        raise UsageError("give either --algebra or --alpha/--beta/--gamma, not both")
    if args.algebra:
        return vogel_point(args.algebra), parse_algebra(args.algebra)
    if any(v is None for v in raw):
        raise UsageError("need --algebra or all of --alpha, --beta, --gamma")
    try:
        return VogelPoint(*(Q(v) for v in raw)), None
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational: {exc}") from None


def _value_obj(ev) -> dict:
    d = {"class": ev.cls.value, "raw_class": ev.raw.value}
    if ev.line:
        d["line"] = ev.line
    if ev.removable:
        d["removable"] = True
    if ev.detail:
        d["detail"] = ev.detail
    if ev.value is not None:
        d["value"] = ev.value.to_json()
        d["dimension"] = qstr(ev.value.dimension()) if ev.value.balanced else None
    return d


def _compare(alg, k, n, perm, line, ev) -> Optional[dict]:
    try:
        exp = expected_rep(alg, k, n, perm, line)
    except BelowStableRank as exc:
        return {"expected": None, "covered": True, "status": "SkippedBelowStableRank", "detail": str(exc)}
    spec = parse_rep("0", alg) if exp is NOT_COVERED else exp
    out = {"expected": str(spec), "covered": exp is not NOT_COVERED}
    if ev.value is not None:
        out["match"] = SinhSum([ev.value]) == qdim_of_spec(build_root_system(alg), spec)
    return out


# -- commands --------------------------------------------------------------


def cmd_qdim(args) -> int:
    if not args.algebra:
        raise UsageError("qdim needs --algebra")
    alg = parse_algebra(args.algebra)
    rs = build_root_system(alg)
    if args.weight:
        weights = [list(w) for _, w in parse_rep(args.weight, alg, args.k, args.n).terms]
    else:
        weights = [list(w) for w in cartan_power_weights(alg, args.k, args.n)]
    prods = [weyl_qdim(rs, w) for w in weights]
    dims = [weyl_dim(rs, w) for w in weights]
    obj = {
        "algebra": alg.name,
        "k": args.k,
        "n": args.n,
        "weights": weights,
        "qdim": [p.to_json() for p in prods],
        "dimension": sum(dims),
    }
    text = "\n".join(f"{w}: {p}  (dim {d})" for w, p, d in zip(weights, prods, dims))
    text += f"\ndimension {sum(dims)}" if len(dims) != 1 else ""
    _emit(obj, text or "0", args.format)
    return EXIT_OK


def _run_universal(args, line) -> int:
    p, alg = _point(args)
    direction = None
    if getattr(args, "direction", None):
        direction = tuple(Q(v) for v in args.direction.split(","))
        if len(direction) != 3:
            raise UsageError("--direction needs three comma-separated rationals")
    try:
        ev = universal_X(args.k, args.n, p, perm=args.perm, line=line, direction=direction)
    except LimitCountMismatch as exc:
        _emit({"point": str(p), "class": "LimitCountMismatch", "detail": str(exc)},
              f"LimitCountMismatch: {exc}", args.format)
        return EXIT_SINGULAR
    obj = {"point": str(p), "k": args.k, "n": args.n, "perm": args.perm, **_value_obj(ev)}
    if alg is not None:
        obj["algebra"] = alg.name
        obj["table"] = _compare(alg, args.k, args.n, args.perm, line, ev)
    if ev.value is not None:
        text = f"{ev.cls.value}: {ev.value}  (dim {obj['dimension']})"
    elif ev.cls is TermClass.INDETERMINATE:
        text = f"Indeterminate at {p}: {ev.detail}"
    else:
        text = f"{ev.cls.value} at {p}: {ev.detail}"
    _emit(obj, text, args.format)
    return EXIT_SINGULAR if ev.cls is TermClass.SINGULAR else EXIT_OK


def cmd_universal(args) -> int:
    return _run_universal(args, args.line)


def cmd_limit(args) -> int:
    return _run_universal(args, args.line)


def cmd_verify(args) -> int:
    tables = tuple(int(t) for t in args.tables.split(",")) if args.tables else SweepConfig.tables
    bad = set(tables) - set(range(2, 9))
    if bad:
        raise UsageError(f"unknown table(s) {sorted(bad)}; choose from 2..8")
    cfg = SweepConfig(
        tables=tables,
        families=tuple(args.families.split(",")) if args.families else SweepConfig.families,
        min_rank=args.min_rank,
        max_rank=args.max_rank,
        max_k=args.max_k,
        max_n=args.max_n,
        jobs=args.jobs,
        zero_elsewhere=args.zero_elsewhere,
    )
    report = verify_sweep(cfg)
    _emit(report.to_json(), report.to_text(), args.format, args.out)
    if args.out:
        c = report.counts
        print(", ".join(f"{k}={v}" for k, v in c.items() if v), file=sys.stderr)
    if not report.ok:
        return EXIT_MISMATCH
    if report.failures:
        return EXIT_SINGULAR
    return EXIT_OK


def cmd_tables(args) -> int:
    recs = [r for r in load_records() if args.table is None or r["table"] == args.table]
    text = "\n".join(
        f"{r['id']:30s} {r.get('algebra') or r.get('family'):12s} {r['perm']:4s} {r['expected']:40s} [{r['kind']}]"
        for r in recs
    )
    _emit({"records": recs}, text, args.format)
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vogelqdim", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, point=True):
        p.add_argument("--k", type=int, default=0)
        p.add_argument("--n", type=int, default=0)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--algebra")
        if point:
            for name in ("alpha", "beta", "gamma"):
                p.add_argument(f"--{name}", help="rational as p/q")
            p.add_argument("--perm", default="abg", help="slot order, e.g. bag = (beta, alpha, gamma)")

    p = sub.add_parser("qdim", help="Weyl quantum dimension of the Cartan power")
    common(p, point=False)
    p.add_argument("--weight", help="explicit weight, e.g. 'w1+2w3'")
    p.set_defaults(func=cmd_qdim)

    p = sub.add_parser("universal", help="evaluate the universal formula")
    common(p)
    p.add_argument("--line", choices=sorted(LINES))
    p.set_defaults(func=cmd_universal)

    p = sub.add_parser("limit", help="limit of the universal formula along a Vogel line")
    common(p)
    p.add_argument("--line", choices=sorted(LINES), required=True)
    p.add_argument("--direction", help="tangent direction a,b,c (default: canonical)")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("verify", help="verify table cells")
    p.add_argument("--tables", help="comma list from 2..8 (default all)")
    p.add_argument("--families", help="classical families, e.g. A,B,C,D")
    p.add_argument("--min-rank", type=int, default=2)
    p.add_argument("--max-rank", type=int, default=12)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--zero-elsewhere", action="store_true", help="also check uncovered cells are zero")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="list the shipped table records")
    p.add_argument("--table", type=int)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_tables)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "k", 0) < 0 or getattr(args, "n", 0) < 0:
            raise UsageError("--k and --n must be non-negative")
        return args.func(args)
    except (UsageError, VogelError, ValueError) as exc:
        if isinstance(exc, SinhError) and not isinstance(exc, VogelError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_SINGULAR
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: Optional[List[str]] = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
