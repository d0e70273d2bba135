"""Universal formulas in Vogel's parameters.

The quantum dimension of the Cartan product ``k*X2 + n*ad`` is a product of
thirteen sinh-ratios ("L-terms") whose arguments are linear forms in
``(alpha, beta, gamma)``.  Every form below is already divided by 4, so a
form ``f`` contributes ``sinh(x*f(p))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple

from .exact import LinForm3
from .sinhprod import SinhError
from .vogel import Evaluation, VogelPoint, evaluate_forms, permute, permute_form

L_TERM_NAMES = (
    "L31", "L32", "L21s1", "L21s2", "L21s3", "L10s1", "L10s2", "L10s3",
    "L11s1", "L11s2", "L11s3", "L01", "Lc2",
)


def _f(a, b, c) -> LinForm3:
    return LinForm3(a, b, c) / 4


@dataclass(frozen=True)
class SymbolicFactor:
    name: str
    numer: Tuple[LinForm3, ...]
    denom: Tuple[LinForm3, ...]

    def permuted(self, perm) -> "SymbolicFactor":
        return SymbolicFactor(
            self.name,
            tuple(permute_form(f, perm) for f in self.numer),
            tuple(permute_form(f, perm) for f in self.denom),
        )

    def evaluate(self, p, line=None) -> Evaluation:
        return evaluate_forms(1, self.numer, self.denom, p, line=line)


# (name, upper bound of i as a function of (k, n) or None for a single
# factor, numerator(k, n, i), denominator(k, n, i)); forms are (a, b, c)
# coefficient triples, before the overall 1/4.
_Coeffs = Callable[[int, int, int], Tuple[int, int, int]]
_TABLE: List[Tuple[str, Callable[[int, int], int], _Coeffs, _Coeffs]] = [
    ("L31", None,
     lambda k, n, i: (-4 + 3 * k + n, -2, -2),
     lambda k, n, i: (4, 2, 2)),
    ("L32", None,
     lambda k, n, i: (-3 + 3 * k + 2 * n, -2, -2),
     lambda k, n, i: (3, 2, 2)),
    ("L21s1", lambda k, n: 2 * k + n,
     lambda k, n, i: (i - 5, -2, -2),
     lambda k, n, i: (i - 2, -2, 0)),
    ("L21s2", lambda k, n: 2 * k + n,
     lambda k, n, i: (3 - i, 1, 2),
     lambda k, n, i: (2 - i, 1, 1)),
    ("L21s3", None,
     lambda k, n, i: (3 - 2 * k - n, 2, 1),
     lambda k, n, i: (3, 2, 1)),
    ("L10s1", lambda k, n: k,
     lambda k, n, i: (3 - i, 0, 2),
     lambda k, n, i: (-i, 0, 0)),
    ("L10s2", lambda k, n: k,
     lambda k, n, i: (3 - i, 1, 1),
     lambda k, n, i: (2 - i, 1, 0)),
    ("L10s3", lambda k, n: k,
     lambda k, n, i: (i - 3, -2, 0),
     lambda k, n, i: (2 - i, 0, 1)),
    ("L11s1", lambda k, n: k + n,
     lambda k, n, i: (4 - i, 2, 1),
     lambda k, n, i: (i + 1, 0, 0)),
    ("L11s2", lambda k, n: k + n,
     lambda k, n, i: (2 - i, 1, 1),
     lambda k, n, i: (1 - i, 1, 0)),
    ("L11s3", lambda k, n: k + n,
     lambda k, n, i: (i - 2, -2, 0),
     lambda k, n, i: (1 - i, 0, 1)),
    ("L01", None,
     lambda k, n, i: (1 + n, 0, 0),
     lambda k, n, i: (1, 0, 0)),
    ("Lc2", lambda k, n: k,
     lambda k, n, i: (4 - i - k - n, 2, 1),
     lambda k, n, i: (i + k + n - 2, 0, -2)),
]


def _check_idx(k: int, n: int):
    if int(k) != k or int(n) != n or k < 0 or n < 0:
        raise ValueError(f"k and n must be non-negative integers, got {k}, {n}")


def l_terms(k: int, n: int) -> List[SymbolicFactor]:
    """The thirteen L-terms for the Cartan power index ``(k, n)``."""
    _check_idx(k, n)
    out = []
    for name, upper, num, den in _TABLE:
        idx = [0] if upper is None else range(1, upper(k, n) + 1)
        out.append(SymbolicFactor(
            name,
            tuple(_f(*num(k, n, i)) for i in idx),
            tuple(_f(*den(k, n, i)) for i in idx),
        ))
    return out


def x_forms(k: int, n: int, perm="abg") -> Tuple[List[LinForm3], List[LinForm3]]:
    """All numerator and denominator forms of X(k, n) with permuted slots."""
    num, den = [], []
    for term in l_terms(k, n):
        t = term.permuted(perm)
        num.extend(t.numer)
        den.extend(t.denom)
    return num, den


def universal_X(k: int, n: int, p: VogelPoint, perm="abg", line=None, direction=None) -> Evaluation:
    """X(x, k, n, .) at ``p`` with slots filled according to ``perm``.

    ``perm="bag"`` evaluates X(x, k, n, beta, alpha, gamma).  Pass ``line``
    to take the limit along that Vogel line when the point is indeterminate;
    for regular points the line does not change the value.
    """
    num, den = x_forms(k, n, perm)
    return evaluate_forms(1, num, den, p, line=line, direction=direction)


def universal_casimir(k: int, n: int, p: VogelPoint, perm="abg") -> Fraction:
    _check_idx(k, n)
    a = permute(p, perm).alpha
    return a * (3 * k - 3 * k * k + n - n * n - 3 * k * n) + p.t * (4 * k + 2 * n)


def adjoint_dim(p: VogelPoint) -> Fraction:
    a, b, c = p.coords
    if a == 0 or b == 0 or c == 0:
        raise SinhError("adjoint dimension needs nonzero alpha, beta, gamma")
    t = p.t
    return -(2 * t - a) * (2 * t - b) * (2 * t - c) / (a * b * c)


_Y2_SLOT = {"a": "abg", "b": "bag", "g": "gab", "alpha": "abg", "beta": "bag", "gamma": "gab"}


def y2_dim(p: VogelPoint, slot: str = "a") -> Fraction:
    """Dimension of ``Y2(slot)`` from the symmetric square of the adjoint."""
    a, b, c = permute(p, _Y2_SLOT[slot]).coords
    t = p.t
    den = a * a * (a - b) * b * (a - c) * c
    if den == 0:
        raise SinhError(f"Y2({slot}) is singular at {p}")
    return (2 * t - 3 * a) * (b - 2 * t) * (c - 2 * t) * t * (b + t) * (c + t) / den


def s2_sum_rule(p: VogelPoint):
    """``(1 + sum of regular Y2 dims, d(d+1)/2, singular slots)``."""
    total, singular = Fraction(1), []
    for s in "abg":
        try:
            total += y2_dim(p, s)
        except SinhError:
            singular.append(s)
    d = adjoint_dim(p)
    return total, d * (d + 1) / 2, singular
