"""Formal products ``coeff * prod sinh(x*a_i) / prod sinh(x*m_j)``.

An argument ``r`` always stands for ``sinh(x*r)``.  A product is kept in a
canonical form: positive arguments only, numerator and denominator
multisets with common elements cancelled, and the zero product has empty
multisets.  Two canonical products are equal as functions of ``x`` iff
they are structurally equal.
"""
from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from .exact import Q, RationalLike, qstr

Multiset = Tuple[Tuple[Fraction, int], ...]


class TermClass(enum.Enum):
    ZERO = "Zero"
    REGULAR = "Regular"
    SINGULAR = "Singular"
    INDETERMINATE = "Indeterminate"


class SinhError(ValueError):
    pass


class SingularTerm(SinhError):
    """A zero argument sits in the denominator only."""

    def __init__(self, args):
        self.args_at_fault = tuple(args)
        super().__init__(f"singular: zero denominator argument(s) {list(self.args_at_fault)}")


class IndeterminateTerm(SinhError):
    """Zero arguments in both numerator and denominator; use a line limit."""

    def __init__(self, n_num: int, n_den: int):
        self.n_num, self.n_den = n_num, n_den
        super().__init__(
            f"indeterminate: {n_num} vanishing numerator and {n_den} vanishing "
            "denominator arguments; evaluate with a line limit"
        )


class Unbalanced(SinhError):
    pass


def _freeze(c: Counter) -> Multiset:
    return tuple(sorted((a, m) for a, m in c.items() if m))


@dataclass(frozen=True)
class SinhProduct:
    coeff: Fraction
    num: Multiset = ()
    den: Multiset = ()

    @classmethod
    def constant(cls, c: RationalLike) -> "SinhProduct":
        return cls(Q(c))

    @classmethod
    def zero(cls) -> "SinhProduct":
        return cls(Fraction(0))

    @classmethod
    def from_args(cls, coeff, num: Iterable = (), den: Iterable = ()) -> "SinhProduct":
        """Canonicalize; raises on zero arguments (see :func:`make_term`)."""
        cls_, val = make_term(coeff, list(num), list(den))
        if val is None:
            raise SinhError(f"cannot build a product from a {cls_.value} term")
        return val

    # -- views -----------------------------------------------------------
    def num_list(self) -> list:
        return [a for a, m in self.num for _ in range(m)]

    def den_list(self) -> list:
        return [a for a, m in self.den for _ in range(m)]

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    @property
    def balanced(self) -> bool:
        return sum(m for _, m in self.num) == sum(m for _, m in self.den)

    @property
    def shape(self) -> Tuple[Multiset, Multiset]:
        return (self.num, self.den)

    # -- algebra ---------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, SinhProduct):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "SinhProduct":
        c = Q(c)
        if c == 0 or self.is_zero:
            return SinhProduct.zero()
        return SinhProduct(self.coeff * c, self.num, self.den)

    def inverse(self) -> "SinhProduct":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero product")
        return SinhProduct(1 / self.coeff, self.den, self.num)

    def __truediv__(self, other: "SinhProduct") -> "SinhProduct":
        return multiply(self, other.inverse())

    def rescale_args(self, s: RationalLike) -> "SinhProduct":
        """Multiply every argument by ``s > 0``."""
        s = Q(s)
        if s <= 0:
            raise ValueError("argument rescaling needs s > 0")
        return SinhProduct(
            self.coeff,
            tuple((a * s, m) for a, m in self.num),
            tuple((a * s, m) for a, m in self.den),
        )

    def dimension(self) -> Fraction:
        return dimension_limit(self)

    def __call__(self, x: float) -> float:
        return eval_numeric(self, x)

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        return {
            "coeff": qstr(self.coeff),
            "num": [qstr(a) for a in self.num_list()],
            "den": [qstr(a) for a in self.den_list()],
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "SinhProduct":
        return cls.from_args(Q(d["coeff"]), [Q(a) for a in d["num"]], [Q(a) for a in d["den"]])

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        num = "*".join(qstr(a) if m == 1 else f"{qstr(a)}^{m}" for a, m in self.num) or "1"
        den = "*".join(qstr(a) if m == 1 else f"{qstr(a)}^{m}" for a, m in self.den) or "1"
        return f"{qstr(self.coeff)} sinh[x: {num} / {den}]"


def classify(numer: Sequence[RationalLike], denom: Sequence[RationalLike]) -> TermClass:
    zn = any(Q(a) == 0 for a in numer)
    zd = any(Q(a) == 0 for a in denom)
    if zn and zd:
        return TermClass.INDETERMINATE
    if zd:
        return TermClass.SINGULAR
    if zn:
        return TermClass.ZERO
    return TermClass.REGULAR


def make_term(coeff: RationalLike, numer: Sequence[RationalLike], denom: Sequence[RationalLike]
              ) -> Tuple[TermClass, Optional[SinhProduct]]:
    """Classify a raw term and canonicalize it when it has a value.

    Singular and Indeterminate terms come back with ``None`` as the value.
    """
    coeff = Q(coeff)
    numer = [Q(a) for a in numer]
    denom = [Q(a) for a in denom]
    cls = classify(numer, denom)
    if cls is TermClass.ZERO or (cls is TermClass.REGULAR and coeff == 0):
        return (TermClass.ZERO if cls is TermClass.ZERO else cls), SinhProduct.zero()
    if cls is not TermClass.REGULAR:
        return cls, None
    num, den = Counter(), Counter()
    for a in numer:
        if a < 0:
            coeff, a = -coeff, -a
        num[a] += 1
    for a in denom:
        if a < 0:
            coeff, a = -coeff, -a
        den[a] += 1
    common = num & den
    num -= common
    den -= common
    return cls, SinhProduct(coeff, _freeze(num), _freeze(den))


def multiply(a: SinhProduct, b: SinhProduct) -> SinhProduct:
    if a.is_zero or b.is_zero:
        return SinhProduct.zero()
    num = Counter(dict(a.num)) + Counter(dict(b.num))
    den = Counter(dict(a.den)) + Counter(dict(b.den))
    common = num & den
    num -= common
    den -= common
    return SinhProduct(a.coeff * b.coeff, _freeze(num), _freeze(den))


def product(factors: Iterable[SinhProduct]) -> SinhProduct:
    out = SinhProduct.constant(1)
    for f in factors:
        out = multiply(out, f)
    return out


def equals(a: SinhProduct, b: SinhProduct) -> bool:
    return a == b


def dimension_limit(a: SinhProduct) -> Fraction:
    """Value of the product as ``x -> 0``; requires a balanced product."""
    if a.is_zero:
        return Fraction(0)
    if not a.balanced:
        raise Unbalanced(
            f"unbalanced product ({sum(m for _, m in a.num)} vs {sum(m for _, m in a.den)} "
            "factors) has no finite nonzero x->0 limit"
        )
    out = a.coeff
    for arg, m in a.num:
        out *= arg**m
    for arg, m in a.den:
        out /= arg**m
    return out


def _log_sinh(y: float) -> float:
    # log(sinh y) for y > 0 without overflow
    if y > 20:
        return y - math.log(2.0) + math.log1p(-math.exp(-2 * y))
    return math.log(math.sinh(y))


def eval_numeric(a: SinhProduct, x: float) -> float:
    """Floating-point value at ``x > 0``. Debugging aid only."""
    if x <= 0:
        raise ValueError("x must be positive")
    if a.is_zero:
        return 0.0
    logv = math.fsum(
        [m * _log_sinh(x * float(arg)) for arg, m in a.num]
        + [-m * _log_sinh(x * float(arg)) for arg, m in a.den]
    )
    return float(a.coeff) * math.exp(logv)


class SinhSum:
    """Finite rational combination of canonical products.

    Terms with the same argument multisets are merged, so a sum of
    automorphism-conjugate quantum dimensions collapses to one product.
    """

    def __init__(self, terms: Iterable[SinhProduct] = ()):
        self._terms: Dict[Tuple[Multiset, Multiset], Fraction] = {}
        for t in terms:
            self._add(t)

    def _add(self, t: SinhProduct, sign: int = 1):
        if t.is_zero:
            return
        key = t.shape
        c = self._terms.get(key, Fraction(0)) + sign * t.coeff
        if c:
            self._terms[key] = c
        else:
            self._terms.pop(key, None)

    @property
    def terms(self) -> list:
        return [SinhProduct(c, n, d) for (n, d), c in sorted(self._terms.items(), key=lambda kv: repr(kv[0]))]

    def __add__(self, other) -> "SinhSum":
        out = SinhSum(self.terms)
        for t in _as_sum(other).terms:
            out._add(t)
        return out

    def __sub__(self, other) -> "SinhSum":
        out = SinhSum(self.terms)
        for t in _as_sum(other).terms:
            out._add(t, -1)
        return out

    def scale(self, c: RationalLike) -> "SinhSum":
        return SinhSum(t.scale(c) for t in self.terms)

    def single(self) -> Optional[SinhProduct]:
        """The sum as one canonical product, if it has at most one term."""
        ts = self.terms
        if not ts:
            return SinhProduct.zero()
        if len(ts) == 1:
            return ts[0]
        return None

    def dimension(self) -> Fraction:
        return sum((dimension_limit(t) for t in self.terms), Fraction(0))

    def __call__(self, x: float) -> float:
        return math.fsum(eval_numeric(t, x) for t in self.terms)

    def is_zero(self) -> bool:
        """Exact zero test of the function of ``x``.

        Clears all denominators and compares exponential polynomials in
        ``z = exp(x/D)`` with exact integer coefficients.
        """
        ts = self.terms
        if not ts:
            return True
        if len(ts) == 1:
            return False
        return not _exp_polynomial_of_cleared_sum(ts).any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, (SinhSum, SinhProduct, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self) -> str:
        return "SinhSum(" + " + ".join(str(t) for t in self.terms) + ")"


def _as_sum(x) -> SinhSum:
    if isinstance(x, SinhSum):
        return x
    if isinstance(x, SinhProduct):
        return SinhSum([x])
    return SinhSum([SinhProduct.constant(x)])


def _sinh_poly(ms: Sequence[int]) -> np.ndarray:
    """Coefficients of ``prod (z^(2m) - 1)`` (lowest degree first)."""
    p = np.array([1], dtype=object)
    for m in ms:
        q = np.zeros(len(p) + 2 * m, dtype=object)
        q[2 * m:] += p
        q[: len(p)] -= p
        p = q
    return p


def _exp_polynomial_of_cleared_sum(ts: Sequence[SinhProduct]) -> np.ndarray:
    # common denominator: max multiplicity of each denominator argument
    common: Counter = Counter()
    for t in ts:
        common |= Counter(dict(t.den))
    D = 1
    for t in ts:
        for a, _ in t.num + t.den:
            D = math.lcm(D, a.denominator)
    polys = []
    for t in ts:
        factors = Counter(dict(t.num)) + (common - Counter(dict(t.den)))
        ms = [int(a * D) for a, m in factors.items() for _ in range(m)]
        # sinh(a x) = z^-m (z^2m - 1)/2 with z = exp(x/D)
        polys.append((t.coeff / 2 ** len(ms), -sum(ms), _sinh_poly(ms)))
    lo = min(off for _, off, _ in polys)
    hi = max(off + len(p) for _, off, p in polys)
    den_lcm = 1
    for c, _, _ in polys:
        den_lcm = math.lcm(den_lcm, c.denominator)
    acc = np.zeros(hi - lo, dtype=object)
    for c, off, p in polys:
        scaled = c * den_lcm
        acc[off - lo: off - lo + len(p)] += int(scaled) * p
    return acc
