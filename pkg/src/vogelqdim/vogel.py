"""Vogel's plane: table points, permutations, lines and line limits."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .exact import LinForm3, Point3, Q, RationalLike, qstr
from .sinhprod import (
    IndeterminateTerm,
    SingularTerm,
    SinhError,
    SinhProduct,
    TermClass,
    make_term,
)

EXCEPTIONAL_N = {
    "G2": Fraction(-2, 3),
    "D4": Fraction(0),
    "F4": Fraction(1),
    "E6": Fraction(2),
    "E7": Fraction(4),
    "E8": Fraction(8),
}

MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}

_ALIASES = {
    "so8": "D4",
    "g2": "G2",
    "f4": "F4",
    "e6": "E6",
    "e7": "E7",
    "e8": "E8",
}


class VogelError(ValueError):
    pass


class LimitCountMismatch(SinhError):
    """Different numbers of vanishing numerator/denominator arguments on the line."""

    def __init__(self, n_num: int, n_den: int):
        self.n_num, self.n_den = n_num, n_den
        super().__init__(
            f"vanishing-order mismatch along the line: {n_num} numerator vs {n_den} denominator"
        )


@dataclass(frozen=True)
class AlgebraId:
    family: str
    rank: int

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def exceptional(self) -> bool:
        return self.family in "GFE"

    def __str__(self) -> str:
        return self.name


def parse_algebra(name) -> AlgebraId:
    """Parse ``"A3"``, ``"so8"``, ``"sl5"``, ``"so10"``, ``"sp6"`` and friends."""
    if isinstance(name, AlgebraId):
        return name
    s = str(name).strip()
    s = _ALIASES.get(s.lower(), s)
    m = re.fullmatch(r"(sl|so|sp)(\d+)", s.lower())
    if m:
        kind, N = m.group(1), int(m.group(2))
        if kind == "sl":
            s = f"A{N - 1}"
        elif kind == "sp":
            if N % 2:
                raise VogelError(f"sp_N needs even N, got {N}")
            s = f"C{N // 2}"
        else:
            s = f"B{(N - 1) // 2}" if N % 2 else f"D{N // 2}"
    m = re.fullmatch(r"([ABCDEFG])(\d+)", s.upper())
    if not m:
        raise VogelError(f"unknown algebra {name!r}")
    fam, r = m.group(1), int(m.group(2))
    if fam in "ABCD":
        if r < MIN_RANK[fam]:
            raise VogelError(f"unsupported rank for {fam}: {r}")
    elif f"{fam}{r}" not in EXCEPTIONAL_N:
        raise VogelError(f"unsupported algebra {fam}{r}")
    return AlgebraId(fam, r)


@dataclass(frozen=True)
class VogelPoint:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, Q(getattr(self, name)))

    @property
    def t(self) -> Fraction:
        return self.alpha + self.beta + self.gamma

    @property
    def coords(self) -> Point3:
        return (self.alpha, self.beta, self.gamma)

    def __iter__(self):
        return iter(self.coords)

    def scaled(self, s: RationalLike) -> "VogelPoint":
        s = Q(s)
        return VogelPoint(self.alpha * s, self.beta * s, self.gamma * s)

    def __str__(self) -> str:
        return "(" + ", ".join(qstr(c) for c in self.coords) + ")"


def vogel_point(algebra) -> VogelPoint:
    """Vogel parameters in the ``alpha = -2`` normalization.

    Exceptional points use ``(-2, n+4, 2n+4)``, the ordering that lies on
    the line ``gamma = 2(alpha + beta)``.
    """
    a = parse_algebra(algebra)
    r = a.rank
    if a.family == "A":
        return VogelPoint(-2, 2, r + 1)
    if a.family == "B":
        return VogelPoint(-2, 4, 2 * r - 3)
    if a.family == "C":
        return VogelPoint(-2, 1, r + 2)
    if a.family == "D" and r != 4:
        return VogelPoint(-2, 4, 2 * r - 4)
    n = EXCEPTIONAL_N[a.name]
    return VogelPoint(-2, n + 4, 2 * n + 4)


# -- permutations --------------------------------------------------------

_SLOT = {"a": 0, "b": 1, "g": 2}


def parse_perm(perm: str) -> Tuple[int, int, int]:
    """``"bag"`` means X(x,k,n,beta,alpha,gamma): slot i receives coordinate perm[i]."""
    if isinstance(perm, tuple):
        idx = perm
    else:
        p = perm.lower()
        if len(p) != 3 or set(p) != set("abg"):
            raise VogelError(f"permutation must be a 3-letter word over a,b,g: {perm!r}")
        idx = tuple(_SLOT[ch] for ch in p)
    if sorted(idx) != [0, 1, 2]:
        raise VogelError(f"not a permutation: {perm!r}")
    return idx


def permute(p: VogelPoint, perm="abg") -> VogelPoint:
    idx = parse_perm(perm)
    c = p.coords
    return VogelPoint(c[idx[0]], c[idx[1]], c[idx[2]])


def permute_form(f: LinForm3, perm="abg") -> LinForm3:
    """``f'`` with ``f'(p) = f(permute(p, perm))``."""
    idx = parse_perm(perm)
    out = [Fraction(0)] * 3
    for slot, coord in enumerate(idx):
        out[coord] += f.coeffs[slot]
    return LinForm3(*out)


# -- lines ---------------------------------------------------------------


@dataclass(frozen=True)
class VogelLine:
    name: str
    constraint: LinForm3

    def contains(self, p: Iterable[RationalLike]) -> bool:
        return self.constraint(p) == 0

    def tangent_basis(self) -> List[Point3]:
        """Two rational vectors spanning ``{v : constraint(v) = 0}``."""
        c = self.constraint.coeffs
        piv = next(i for i in range(3) if c[i] != 0)
        basis = []
        for j in range(3):
            if j == piv:
                continue
            v = [Fraction(0)] * 3
            v[j] = Fraction(1)
            v[piv] = -c[j] / c[piv]
            basis.append(tuple(v))
        return basis


LINES = {
    "sl": VogelLine("sl", LinForm3(1, 1, 0)),
    "so": VogelLine("so", LinForm3(2, 1, 0)),
    "sp": VogelLine("sp", LinForm3(1, 2, 0)),
    "exc": VogelLine("exc", LinForm3(2, 2, -1)),
}


def get_line(line) -> VogelLine:
    if isinstance(line, VogelLine):
        return line
    try:
        return LINES[str(line).lower()]
    except KeyError:
        raise VogelError(f"unknown line {line!r}; expected one of {sorted(LINES)}") from None


def line_of(algebra) -> VogelLine:
    a = parse_algebra(algebra)
    if a.exceptional or a.name == "D4":
        return LINES["exc"]
    return LINES[{"A": "sl", "B": "so", "C": "sp", "D": "so"}[a.family]]


def _normalize(v: Sequence[Fraction]) -> Point3:
    first = next(x for x in v if x != 0)
    return tuple(x / first for x in v)


def _parallel(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(3) for j in range(3))


@dataclass(frozen=True)
class LinePath:
    """``s -> base + s*direction``, staying inside ``line``."""

    base: VogelPoint
    direction: Point3
    line: VogelLine

    def __post_init__(self):
        d = tuple(Q(x) for x in self.direction)
        object.__setattr__(self, "direction", d)
        if all(x == 0 for x in d):
            raise VogelError("direction must be nonzero")
        if not self.line.contains(self.base.coords):
            raise VogelError(f"{self.base} is not on the {self.line.name} line")
        if self.line.constraint(d) != 0:
            raise VogelError(f"direction {d} leaves the {self.line.name} line")
        if _parallel(d, self.base.coords):
            raise VogelError("direction parallel to the base point only rescales it")

    def at(self, s: RationalLike) -> VogelPoint:
        s = Q(s)
        return VogelPoint(*(b + s * d for b, d in zip(self.base.coords, self.direction)))

    @classmethod
    def canonical(cls, base: VogelPoint, line) -> "LinePath":
        ln = get_line(line)
        for v in ln.tangent_basis():
            if not _parallel(v, base.coords):
                return cls(base, _normalize(v), ln)
        raise VogelError("no admissible direction")  # pragma: no cover


# -- evaluation of sinh-argument forms with limits ------------------------


@dataclass(frozen=True)
class Evaluation:
    """Outcome of evaluating a list of sinh-argument forms at a point.

    ``raw`` is the classification before any limit; ``removable`` marks a
    value recovered by cancelling proportional vanishing pairs, which is
    the same from every direction of approach.
    """

    cls: TermClass
    value: Optional[SinhProduct]
    raw: TermClass
    removable: bool = False
    line: Optional[str] = None
    detail: str = ""

    def require(self) -> SinhProduct:
        if self.value is None:
            if self.cls is TermClass.SINGULAR:
                raise SingularTerm([])
            raise IndeterminateTerm(0, 0)
        return self.value


def _cancel_proportional(zn: List[LinForm3], zd: List[LinForm3]):
    ratio = Fraction(1)
    zd = list(zd)
    left = []
    for f in zn:
        for j, g in enumerate(zd):
            r = f.ratio_to(g)
            if r is not None:
                ratio *= r
                del zd[j]
                break
        else:
            left.append(f)
    return ratio, left, zd


def evaluate_forms(coeff: RationalLike, num_forms: Sequence[LinForm3], den_forms: Sequence[LinForm3],
                   point, line=None, direction=None) -> Evaluation:
    """Evaluate ``coeff * prod sinh(x f_i(p)) / prod sinh(x g_j(p))``.

    Without ``line`` only removable indeterminacies are resolved; with a
    line the remaining vanishing arguments are replaced by their slope
    ratios along a path through ``point`` inside that line.
    """
    p = point.coords if isinstance(point, VogelPoint) else tuple(Q(v) for v in point)
    nv = [f(p) for f in num_forms]
    dv = [g(p) for g in den_forms]
    raw, val = make_term(coeff, nv, dv)
    ln = get_line(line) if line is not None else None
    if ln is not None and not ln.contains(p):
        raise VogelError(f"{VogelPoint(*p)} is not on the {ln.name} line")
    if raw in (TermClass.REGULAR, TermClass.ZERO):
        return Evaluation(raw, val, raw, line=ln.name if ln else None)
    if raw is TermClass.SINGULAR:
        bad = [qstr(v) for v in dv if v == 0]
        return Evaluation(raw, None, raw, detail=f"zero denominator argument(s) {bad}")

    zn = [f for f, v in zip(num_forms, nv) if v == 0]
    zd = [g for g, v in zip(den_forms, dv) if v == 0]
    ratio, zn, zd = _cancel_proportional(zn, zd)
    c = Q(coeff) * ratio
    rest_n = [v for v in nv if v != 0]
    rest_d = [v for v in dv if v != 0]
    if not zd:
        cls = TermClass.ZERO if zn else TermClass.REGULAR
        _, v = make_term(0 if zn else c, rest_n, rest_d)
        return Evaluation(cls, v, raw, removable=True, line=ln.name if ln else None)
    if not zn:
        return Evaluation(TermClass.SINGULAR, None, raw, removable=True,
                          detail=f"{len(zd)} unmatched vanishing denominator argument(s)")
    if ln is None:
        return Evaluation(TermClass.INDETERMINATE, None, raw,
                          detail=f"{len(zn)} numerator / {len(zd)} denominator arguments vanish; "
                                 "restrict to a Vogel line")
    if direction is None:
        path = LinePath.canonical(VogelPoint(*p), ln)
    else:
        path = LinePath(VogelPoint(*p), direction, ln)
    sn = [f(path.direction) for f in zn]
    sd = [g(path.direction) for g in zd]
    if any(s == 0 for s in sd):
        return Evaluation(TermClass.SINGULAR, None, raw, line=ln.name,
                          detail="denominator argument vanishes identically on the line")
    if any(s == 0 for s in sn):
        return Evaluation(TermClass.ZERO, SinhProduct.zero(), raw, line=ln.name,
                          detail="numerator argument vanishes identically on the line")
    if len(sn) != len(sd):
        raise LimitCountMismatch(len(sn), len(sd))
    for s in sn:
        c *= s
    for s in sd:
        c /= s
    cls, v = make_term(c, rest_n, rest_d)
    return Evaluation(cls, v, raw, line=ln.name)


def line_limit(k: int, n: int, perm, line, target, direction=None) -> SinhProduct:
    """Universal X at ``target`` (an algebra or point), restricted to ``line``."""
    from .universal import universal_X

    if not isinstance(target, VogelPoint):
        target = vogel_point(target)
    ev = universal_X(k, n, target, perm=perm, line=line, direction=direction)
    if ev.value is None:
        if ev.cls is TermClass.SINGULAR:
            raise SingularTerm([ev.detail])
        raise IndeterminateTerm(0, 0)
    return ev.value
