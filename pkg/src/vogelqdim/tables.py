"""Machine-readable tables and their verification against the Weyl formula.

Every printed cell is one record in ``data/tables.json``.  A record either
names a concrete algebra or a family pattern whose fundamental-weight
indices are expressions in the rank ``i`` and the powers ``k, n``.
"""
from __future__ import annotations

import ast
import enum
import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exact import qstr
from .rootsys import (
    RepSpec,
    adjoint_weight,
    build_root_system,
    cartan_power_weights,
    omega,
    qdim_of_spec,
    x2_weights,
)
from .sinhprod import SinhError, SinhProduct, SinhSum, TermClass, dimension_limit
from .universal import universal_X
from .vogel import (
    EXCEPTIONAL_N,
    MIN_RANK,
    AlgebraId,
    LimitCountMismatch,
    line_of,
    parse_algebra,
    vogel_point,
)

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")
CLASSICAL = ("A", "B", "C", "D")


class Status(str, enum.Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    SKIPPED = "SkippedBelowStableRank"
    LIMIT_COUNT_MISMATCH = "LimitCountMismatch"
    SINGULAR = "Singular"


class NotCovered:
    """No table cell applies; the expected value defaults to zero."""

    def __repr__(self) -> str:
        return "NotCovered"


NOT_COVERED = NotCovered()


class BelowStableRank(Exception):
    pass


# -- data ----------------------------------------------------------------


@lru_cache(maxsize=None)
def load_records() -> Tuple[dict, ...]:
    text = resources.files("vogelqdim.data").joinpath("tables.json").read_text()
    return tuple(json.loads(text)["records"])


def cell_ids(table: Optional[int] = None) -> List[str]:
    """Distinct printed cells (some cells expand to several records)."""
    seen = []
    for r in load_records():
        if table is not None and r["table"] != table:
            continue
        cid = r.get("cell", r["id"])
        if cid not in seen:
            seen.append(cid)
    return seen


# -- RepSpec syntax ------------------------------------------------------
# summand ("(+)" summand)*; summand := ["-"] [int "*"] body;
# body := int | "X2" | "ad" | "cartan" | ["("] wterm ("+" wterm)* [")"];
# wterm := [int] "w" (digits | "[" expr in i, k, n "]")

_WTERM = re.compile(r"^(\d*)w(?:(\d+)|\[([^\]]+)\])$")
_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Add, ast.Sub, ast.Mult,
            ast.USub, ast.UAdd, ast.Constant, ast.Name, ast.Load)


def _index(expr: str, env: Dict[str, int]) -> int:
    tree = ast.parse(expr, mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"unsupported index expression {expr!r}")
        if isinstance(node, ast.Name) and node.id not in env:
            raise ValueError(f"unknown variable {node.id!r} in {expr!r}")
    return int(eval(compile(tree, "<index>", "eval"), {"__builtins__": {}}, dict(env)))


def _split_top(s: str, sep: str) -> List[str]:
    parts, depth, cur = [], 0, ""
    for ch in s:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def parse_rep(text: str, algebra, k: int = 0, n: int = 0) -> RepSpec:
    """Instantiate a table expression such as ``"-(w6+w7)"`` or ``"w[1]+w[2*n+3]"``."""
    a = parse_algebra(algebra)
    r = a.rank
    env = {"i": r, "k": k, "n": n}
    terms: List[Tuple[int, tuple]] = []
    const = Fraction(0)
    for raw in text.split("(+)"):
        s = raw.strip().replace(" ", "")
        sign = 1
        if s.startswith("-"):
            sign, s = -1, s[1:]
        m = re.match(r"^(\d+)\*(.+)$", s)
        coef = sign
        if m:
            coef *= int(m.group(1))
            s = m.group(2)
        if re.fullmatch(r"\d+", s):
            const += coef * int(s)
            continue
        if s == "X2":
            terms += [(coef, w) for w in x2_weights(a)]
            continue
        if s == "ad":
            terms.append((coef, adjoint_weight(a)))
            continue
        if s == "cartan":
            terms += [(coef, w) for w in cartan_power_weights(a, k, n)] if not (a.name == "A1" and k) else []
            continue
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        pairs = []
        for wt in _split_top(s, "+"):
            m = _WTERM.match(wt)
            if not m:
                raise ValueError(f"cannot parse weight term {wt!r} in {text!r}")
            mult = int(m.group(1) or 1)
            node = int(m.group(2)) if m.group(2) else _index(m.group(3), env)
            pairs.append((node, mult))
        terms.append((coef, omega(r, *pairs)))
    return RepSpec(tuple(terms), const)


# -- matching records to cases -------------------------------------------


@dataclass(frozen=True)
class TableEntry:
    record_id: str
    table: int
    algebra: str
    k: int
    n: int
    perm: str
    line: Optional[str]
    kind: str
    expected_text: str
    printed: str
    e_mark: bool = False


def _family_of(a: AlgebraId) -> str:
    return "exceptional" if a.exceptional else a.family


def _record_matches(rec: dict, a: AlgebraId, k: int, n: int) -> bool:
    if "algebra" in rec:
        if parse_algebra(rec["algebra"]) != a:
            return False
    else:
        fam = rec["family"]
        if fam == "exceptional":
            if not a.exceptional:
                return False
        elif a.exceptional or a.family != fam:
            return False
        if rec.get("rank_min") is not None and a.rank < rec["rank_min"]:
            return False
        if rec.get("rank_max") is not None and a.rank > rec["rank_max"]:
            return False
    if rec.get("k") is not None and rec["k"] != k:
        return False
    if rec.get("k_min") is not None and k < rec["k_min"]:
        return False
    if rec.get("n") is not None and rec["n"] != n:
        return False
    return True


def stable_rank_threshold(rec: dict, k: int, n: int) -> int:
    m = rec.get("stable_rank")
    if not m:
        return 0
    return m["k"] * k + m["n"] * n + m["c"]


def find_record(algebra, k: int, n: int, perm: str = "abg", line: Optional[str] = None,
                table: Optional[int] = None) -> Optional[dict]:
    a = parse_algebra(algebra)
    if a.name == "D4" and line is None:
        line = line_of(a).name
    for rec in load_records():
        if rec["perm"] != perm or (table is not None and rec["table"] != table):
            continue
        if rec["table"] == 8:
            if rec["line"] != line:
                continue
        elif a.name == "D4" and rec["table"] in (6, 7):
            # D4 sits on two lines; its permuted cells live in Table 8
            continue
        if _record_matches(rec, a, k, n):
            return rec
    return None


def instantiate(rec: dict, algebra, k: int, n: int, margins: Optional[dict] = None) -> RepSpec:
    """Expected RepSpec of a record; raises BelowStableRank under the threshold."""
    a = parse_algebra(algebra)
    if rec.get("stable_rank"):
        m = dict(rec["stable_rank"])
        if margins and a.family in margins:
            m.update(margins[a.family])
        if a.rank < m["k"] * k + m["n"] * n + m["c"]:
            raise BelowStableRank(f"{a} below stable rank for {rec['id']} at k={k}, n={n}")
    try:
        return parse_rep(rec["expected"], a, k, n)
    except Exception as exc:
        if rec.get("stable_rank"):
            raise BelowStableRank(str(exc)) from exc
        raise


def expected_rep(algebra, k: int, n: int, perm: str = "abg", line: Optional[str] = None):
    """RepSpec for the cell covering the case, or ``NOT_COVERED`` (zero).

    Raises ``BelowStableRank`` when a family pattern applies only at higher rank.
    """
    rec = find_record(algebra, k, n, perm, line)
    if rec is None:
        return NOT_COVERED
    return instantiate(rec, algebra, k, n)


def entry_for(rec: dict, algebra, k: int, n: int) -> TableEntry:
    a = parse_algebra(algebra)
    line = rec.get("line")
    if line == "family":
        line = line_of(a).name
    return TableEntry(
        record_id=rec["id"], table=rec["table"], algebra=a.name, k=k, n=n, perm=rec["perm"],
        line=line, kind=rec["kind"], expected_text=rec["expected"], printed=rec["printed"],
        e_mark=bool(rec.get("e_mark", False)),
    )


def zero_entry(algebra, k: int, n: int, perm: str) -> TableEntry:
    """A case outside every table: expected zero."""
    a = parse_algebra(algebra)
    return TableEntry(
        record_id=f"Z/{a.name}/{perm}/{k},{n}", table=0, algebra=a.name, k=k, n=n, perm=perm,
        line=line_of(a).name, kind="conjecture", expected_text="0", printed="(not listed: zero)",
    )


# -- verdicts --------------------------------------------------------------


@dataclass
class VerdictRecord:
    entry: TableEntry
    status: Status
    computed: dict
    expected: dict
    seconds: float
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        d = {
            "id": self.entry.record_id,
            "table": self.entry.table,
            "algebra": self.entry.algebra,
            "k": self.entry.k,
            "n": self.entry.n,
            "perm": self.entry.perm,
            "line": self.entry.line,
            "kind": self.entry.kind,
            "printed": self.entry.printed,
            "status": self.status.value,
            "computed": self.computed,
            "expected": self.expected,
            "seconds": round(self.seconds, 4),
        }
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def _summary(value: Optional[SinhProduct], cls: TermClass, raw: TermClass, line_used) -> dict:
    out = {"class": cls.value, "raw_class": raw.value, "line_used": line_used}
    if value is not None:
        out["dimension"] = qstr(dimension_limit(value)) if value.balanced else None
        out["value"] = value.to_json()
    return out


def compute_universal(entry: TableEntry):
    """Universal value for an entry: direct, or via its line when needed."""
    p = vogel_point(entry.algebra)
    ev = universal_X(entry.k, entry.n, p, perm=entry.perm)
    line_marked = entry.table == 8 or entry.e_mark
    if ev.cls is TermClass.INDETERMINATE or (line_marked and ev.raw is TermClass.INDETERMINATE):
        if entry.line is None:
            return ev, None
        return universal_X(entry.k, entry.n, p, perm=entry.perm, line=entry.line), entry.line
    return ev, None


def verify_case(entry: TableEntry, margins: Optional[dict] = None) -> VerdictRecord:
    t0 = time.perf_counter()
    notes: List[str] = []
    a = parse_algebra(entry.algebra)
    rs = build_root_system(a)
    if entry.table == 0:
        spec = RepSpec()
    else:
        rec = next(r for r in load_records() if r["id"] == entry.record_id)
        try:
            spec = instantiate(rec, a, entry.k, entry.n, margins)
        except BelowStableRank as exc:
            return VerdictRecord(entry, Status.SKIPPED, {}, {"text": entry.expected_text}, time.perf_counter() - t0,
                                 [str(exc)])
    expected_sum = qdim_of_spec(rs, spec)
    exp_summary = {"spec": str(spec), "dimension": qstr(expected_sum.dimension())}
    try:
        ev, line_used = compute_universal(entry)
    except LimitCountMismatch as exc:
        return VerdictRecord(entry, Status.LIMIT_COUNT_MISMATCH, {"detail": str(exc)}, exp_summary,
                             time.perf_counter() - t0)
    if entry.e_mark and ev.raw is not TermClass.INDETERMINATE:
        notes.append("cell marked E: but the point is not indeterminate for this ordering")
    if entry.table == 4 and not entry.e_mark and ev.raw is TermClass.INDETERMINATE:
        notes.append("indeterminate point resolved on the exc line although the cell carries no E: mark")
    if ev.removable:
        notes.append("removable indeterminacy (proportional vanishing pairs) cancelled")
    computed = _summary(ev.value, ev.cls, ev.raw, line_used)
    if ev.value is None:
        status = Status.SINGULAR if ev.cls is TermClass.SINGULAR else Status.MISMATCH
        if ev.detail:
            computed["detail"] = ev.detail
        return VerdictRecord(entry, status, computed, exp_summary, time.perf_counter() - t0, notes)
    got = SinhSum([ev.value])
    same_dim = ev.value.balanced and dimension_limit(ev.value) == expected_sum.dimension()
    status = Status.MATCH if same_dim and got == expected_sum else Status.MISMATCH
    return VerdictRecord(entry, status, computed, exp_summary, time.perf_counter() - t0, notes)


# -- sweeps ----------------------------------------------------------------


@dataclass
class SweepConfig:
    tables: Tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8)
    families: Tuple[str, ...] = CLASSICAL
    min_rank: int = 2
    max_rank: int = 12
    max_k: int = 4
    max_n: int = 4
    stable_ranks: int = 3
    jobs: int = 1
    zero_elsewhere: bool = False
    margins: Optional[dict] = None

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        d = dict(d)
        for key in ("tables", "families"):
            if key in d:
                d[key] = tuple(d[key])
        return cls(**d)


def _classical_algebras(cfg: SweepConfig, min_rank: Optional[int] = None) -> List[str]:
    out = []
    for fam in cfg.families:
        lo = max(MIN_RANK[fam], cfg.min_rank if min_rank is None else min_rank)
        out += [f"{fam}{r}" for r in range(lo, cfg.max_rank + 1)]
    return out


def build_cases(cfg: SweepConfig) -> List[TableEntry]:
    cases: List[TableEntry] = []
    ks, ns = range(cfg.max_k + 1), range(cfg.max_n + 1)
    recs = load_records()

    def emit(table: int, algebras: Iterable[str], kk: Iterable[int], nn: Iterable[int], perm: str, line=None):
        for alg in algebras:
            for k in kk:
                for n in nn:
                    rec = find_record(alg, k, n, perm, line, table=table)
                    if rec is not None:
                        cases.append(entry_for(rec, alg, k, n))

    if 2 in cfg.tables:
        algs = _classical_algebras(cfg, min_rank=1 if cfg.min_rank <= 1 else None)
        emit(2, algs, ks, ns, "abg")
    if 3 in cfg.tables:
        emit(3, EXCEPTIONAL, ks, ns, "abg")
    for table, perm in ((4, "bag"), (5, "gab")):
        if table in cfg.tables:
            for rec in recs:
                if rec["table"] == table:
                    cases.append(entry_for(rec, rec["algebra"], rec["k"], rec["n"]))
    if 6 in cfg.tables:
        for rec in recs:
            if rec["table"] != 6 or rec["family"] not in cfg.families:
                continue
            kk = [rec["k"]] if rec["k"] is not None else range(rec["k_min"], max(rec["k_min"], cfg.max_k) + 1)
            for k in kk:
                for n in ns:
                    m = dict(rec["stable_rank"])
                    if cfg.margins and rec["family"] in cfg.margins:
                        m.update(cfg.margins[rec["family"]])
                    lo = max(m["k"] * k + m["n"] * n + m["c"], MIN_RANK[rec["family"]])
                    for r in range(lo, lo + cfg.stable_ranks):
                        cases.append(entry_for(rec, f"{rec['family']}{r}", k, n))
    if 7 in cfg.tables:
        emit(7, _classical_algebras(cfg), [1], [2], "gab")
    if 8 in cfg.tables:
        for rec in recs:
            if rec["table"] == 8:
                cases.append(entry_for(rec, "D4", rec["k"], rec["n"]))
    if cfg.zero_elsewhere:
        cases += zero_elsewhere_cases(cfg)
    return cases


def zero_elsewhere_cases(cfg: SweepConfig) -> List[TableEntry]:
    """Cases with k >= 1 that no permuted table lists; expected zero."""
    out = []
    for alg in EXCEPTIONAL:
        for perm, table in (("bag", 4), ("gab", 5)):
            for k in range(1, cfg.max_k + 1):
                for n in range(cfg.max_n + 1):
                    if find_record(alg, k, n, perm, table=table) is None:
                        out.append(zero_entry(alg, k, n, perm))
    # D4 has its own table on both lines
    for alg in [a for a in _classical_algebras(cfg) if a != "D4"]:
        for k in range(1, cfg.max_k + 1):
            for n in range(1, cfg.max_n + 1):
                if find_record(alg, k, n, "gab", table=7) is None:
                    out.append(zero_entry(alg, k, n, "gab"))
    return out


def _run(args):
    entry, margins = args
    return verify_case(entry, margins)


@dataclass
class Report:
    config: dict
    records: List[VerdictRecord]

    @property
    def counts(self) -> Dict[str, int]:
        out = {s.value: 0 for s in Status}
        for r in self.records:
            out[r.status.value] += 1
        return out

    def counts_by(self, kind: str) -> Dict[str, int]:
        out = {s.value: 0 for s in Status}
        for r in self.records:
            if r.entry.kind == kind:
                out[r.status.value] += 1
        return out

    @property
    def failures(self) -> List[VerdictRecord]:
        return [r for r in self.records if r.status not in (Status.MATCH, Status.SKIPPED)]

    @property
    def ok(self) -> bool:
        return not any(r.status is Status.MISMATCH for r in self.records)

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "counts": self.counts,
            "counts_proposition": self.counts_by("proposition"),
            "counts_conjecture": self.counts_by("conjecture"),
            "records": [r.to_json() for r in self.records],
        }

    def to_text(self) -> str:
        lines = [f"{'id':34s} {'alg':5s} {'k':>2s} {'n':>2s} {'perm':4s} {'line':4s} {'status':24s} expected / computed dim"]
        for r in self.records:
            e = r.entry
            lines.append(
                f"{e.record_id:34s} {e.algebra:5s} {e.k:2d} {e.n:2d} {e.perm:4s} {(e.line or '-'):4s} "
                f"{r.status.value:24s} {r.expected.get('dimension', '?')} / {r.computed.get('dimension', '-')}"
            )
        lines.append("")
        lines.append("proposition cells: " + ", ".join(f"{k}={v}" for k, v in self.counts_by("proposition").items() if v))
        lines.append("conjecture cells:  " + ", ".join(f"{k}={v}" for k, v in self.counts_by("conjecture").items() if v))
        return "\n".join(lines)


def verify_sweep(config=None) -> Report:
    cfg = config if isinstance(config, SweepConfig) else SweepConfig.from_dict(config or {})
    cases = build_cases(cfg)
    work = [(c, cfg.margins) for c in cases]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(_run, work, chunksize=8))
    else:
        records = [_run(w) for w in work]
    return Report(asdict(cfg), records)
