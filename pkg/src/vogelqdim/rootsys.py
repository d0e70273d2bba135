"""Root systems of the simple Lie algebras and the Weyl quantum dimension.

Everything is expressed in the basis of simple roots with an exact Gram
matrix scaled so that long roots have squared length 2.  With that scale
the adjoint Casimir ``(theta, theta + 2 rho)`` equals ``2t`` for the
``alpha = -2`` Vogel points.

Node numbering follows LieART: Bourbaki for A-D, G2 (omega_1 short) and F4;
for E_n a chain ``1 .. n-1`` with node ``n`` attached to node 3.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from importlib import resources
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exact import Q, qstr
from .sinhprod import SinhProduct, SinhSum, dimension_limit, make_term
from .vogel import AlgebraId, parse_algebra

Labels = Tuple[int, ...]


class WeightError(ValueError):
    pass


def _bonds(algebra: AlgebraId):
    """Squared lengths of simple roots and off-diagonal Gram entries."""
    f, r = algebra.family, algebra.rank
    one, half = Fraction(1), Fraction(1, 2)
    if f == "A":
        lengths = [2] * r
        edges = {(i, i + 1): -one for i in range(r - 1)}
    elif f == "B":
        lengths = [2] * (r - 1) + [1]
        edges = {(i, i + 1): -one for i in range(r - 1)}
    elif f == "C":
        lengths = [1] * (r - 1) + [2]
        edges = {(i, i + 1): -half for i in range(r - 2)}
        edges[(r - 2, r - 1)] = -one
    elif f == "D":
        lengths = [2] * r
        edges = {(i, i + 1): -one for i in range(r - 2)}
        edges[(r - 3, r - 1)] = -one
    elif f == "G":
        lengths = [Fraction(2, 3), 2]
        edges = {(0, 1): -one}
    elif f == "F":
        lengths = [2, 2, 1, 1]
        edges = {(0, 1): -one, (1, 2): -one, (2, 3): -half}
    elif f == "E":
        lengths = [2] * r
        edges = {(i, i + 1): -one for i in range(r - 2)}
        edges[(2, r - 1)] = -one
    else:  # pragma: no cover - parse_algebra rejects these
        raise WeightError(f"no root data for {algebra}")
    return [Fraction(x) for x in lengths], edges


def _inverse(m: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class RootSystem:
    algebra: AlgebraId
    gram: Tuple[Tuple[Fraction, ...], ...]  # (alpha_i, alpha_j)
    positive_roots: Tuple[Labels, ...]  # simple-root coordinates
    weight_gram: Tuple[Tuple[Fraction, ...], ...]  # (omega_i, omega_j)
    fundamental_weights: Tuple[Tuple[Fraction, ...], ...]  # simple-root coordinates

    @property
    def rank(self) -> int:
        return self.algebra.rank

    @property
    def cartan(self) -> List[List[Fraction]]:
        """``A_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``."""
        g = self.gram
        return [[2 * g[i][j] / g[j][j] for j in range(self.rank)] for i in range(self.rank)]

    @property
    def weyl_vector(self) -> Labels:
        return (1,) * self.rank

    def half_norms(self) -> Tuple[Fraction, ...]:
        return tuple(self.gram[i][i] / 2 for i in range(self.rank))

    def pair_root_weight(self, root: Sequence[int], labels: Sequence[Fraction]) -> Fraction:
        """``(root, weight)`` for a root in simple-root and a weight in Dynkin coordinates."""
        d = self.half_norms()
        return sum((c * d[i] * labels[i] for i, c in enumerate(root) if c), Fraction(0))

    def inner(self, lam: Sequence, mu: Sequence) -> Fraction:
        """``(lambda, mu)`` for weights given by Dynkin labels."""
        g = self.weight_gram
        r = self.rank
        return sum((Q(lam[i]) * g[i][j] * Q(mu[j]) for i in range(r) for j in range(r)), Fraction(0))

    def coroot_pairing(self) -> List[List[Fraction]]:
        """``(alpha_i^vee, omega_j)``; the identity by construction."""
        d = self.half_norms()
        out = []
        for i in range(self.rank):
            e = [0] * self.rank
            e[i] = 1
            out.append([self.pair_root_weight(e, [int(j == jj) for jj in range(self.rank)]) / d[i]
                        for j in range(self.rank)])
        return out

    def check_weight(self, labels: Sequence[int]) -> Labels:
        lab = tuple(labels)
        if len(lab) != self.rank:
            raise WeightError(f"{self.algebra} needs {self.rank} Dynkin labels, got {len(lab)}")
        if any(int(x) != x or x < 0 for x in lab):
            raise WeightError(f"not a dominant integral weight: {list(lab)}")
        return tuple(int(x) for x in lab)


@lru_cache(maxsize=None)
def build_root_system(algebra) -> RootSystem:
    a = parse_algebra(algebra)
    lengths, edges = _bonds(a)
    r = a.rank
    gram = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        gram[i][i] = lengths[i]
    for (i, j), v in edges.items():
        gram[i][j] = gram[j][i] = v

    # positive roots by increasing height, via root strings
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # <beta, alpha_i^vee>
                pairing = 2 * sum(beta[j] * gram[j][i] for j in range(r)) / gram[i][i]
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    pos = tuple(sorted(roots, key=lambda v: (sum(v), v)))

    inv = _inverse(gram)
    d = [lengths[i] / 2 for i in range(r)]
    wgram = tuple(tuple(d[i] * inv[i][j] * d[j] for j in range(r)) for i in range(r))
    fund = tuple(tuple(d[i] * inv[i][j] for j in range(r)) for i in range(r))
    return RootSystem(a, tuple(tuple(row) for row in gram), pos, wgram, fund)


def weyl_qdim(rs: RootSystem, labels: Sequence[int]) -> SinhProduct:
    """``prod_{mu>0} sinh(x (mu, lambda+rho)/2) / sinh(x (mu, rho)/2)``."""
    lam = rs.check_weight(labels)
    shifted = [x + 1 for x in lam]
    rho = rs.weyl_vector
    num = [rs.pair_root_weight(mu, shifted) / 2 for mu in rs.positive_roots]
    den = [rs.pair_root_weight(mu, rho) / 2 for mu in rs.positive_roots]
    _, val = make_term(1, num, den)
    return val


def weyl_dim(rs: RootSystem, labels: Sequence[int]) -> int:
    d = dimension_limit(weyl_qdim(rs, labels))
    if d.denominator != 1 or d <= 0:  # pragma: no cover - would be a bug in the root data
        raise WeightError(f"non-integral dimension {d}")
    return int(d)


def casimir(rs: RootSystem, labels: Sequence[int]) -> Fraction:
    """``(lambda, lambda + 2 rho)``."""
    lam = rs.check_weight(labels)
    return rs.inner(lam, [x + 2 for x in lam])


# -- distinguished highest weights ---------------------------------------


def omega(rank: int, *pairs: Tuple[int, int]) -> Labels:
    """Dynkin labels from ``(node, multiplicity)`` pairs, nodes 1-based."""
    out = [0] * rank
    for node, m in pairs:
        if not 1 <= node <= rank:
            raise WeightError(f"node {node} outside 1..{rank}")
        out[node - 1] += m
    return tuple(out)


def adjoint_weight(algebra) -> Labels:
    a = parse_algebra(algebra)
    f, r = a.family, a.rank
    if f == "A":
        return omega(r, (1, 2)) if r == 1 else omega(r, (1, 1), (r, 1))
    if f == "B":
        return omega(r, (2, 2)) if r == 2 else omega(r, (2, 1))
    if f == "C":
        return omega(r, (1, 2))
    if f == "D":
        return omega(r, (2, 1))
    return omega(r, ({"G2": 2, "F4": 1, "E6": 6, "E7": 1, "E8": 7}[a.name], 1))


def x2_weights(algebra) -> List[Labels]:
    """Highest weight(s) of X2; two conjugate weights for A_r, none for A1."""
    a = parse_algebra(algebra)
    f, r = a.family, a.rank
    if f == "A":
        if r == 1:
            return []
        return [omega(r, (1, 2), (r - 1, 1)), omega(r, (2, 1), (r, 2))]
    if f == "B":
        if r == 2:
            return [omega(r, (1, 1), (2, 2))]
        if r == 3:
            return [omega(r, (1, 1), (3, 2))]
        return [omega(r, (1, 1), (3, 1))]
    if f == "C":
        return [omega(r, (1, 2), (2, 1))]
    if f == "D":
        if r == 4:
            return [omega(r, (1, 1), (3, 1), (4, 1))]
        return [omega(r, (1, 1), (3, 1))]
    node, mult = {"G2": (1, 3), "F4": (2, 1), "E6": (3, 1), "E7": (2, 1), "E8": (6, 1)}[a.name]
    return [omega(r, (node, mult))]


def cartan_power_weights(algebra, k: int, n: int) -> List[Labels]:
    """Highest weights ``k*lambda_X2 + n*lambda_ad`` (a conjugate pair for A_r, k >= 1)."""
    ad = adjoint_weight(algebra)
    base = tuple(n * x for x in ad)
    if k == 0:
        return [base]
    return [tuple(b + k * x for b, x in zip(base, w)) for w in x2_weights(algebra)]


def diagram_automorphisms(algebra) -> List[Tuple[int, ...]]:
    """Non-trivial node permutations (0-based images) preserving the diagram."""
    a = parse_algebra(algebra)
    f, r = a.family, a.rank
    if f == "A" and r > 1:
        return [tuple(range(r - 1, -1, -1))]
    if f == "D":
        swap = list(range(r))
        swap[r - 2], swap[r - 1] = swap[r - 1], swap[r - 2]
        autos = [tuple(swap)]
        if r == 4:
            # permutations of the outer nodes 0, 2, 3
            autos = []
            for img in permutations((0, 2, 3)):
                if img == (0, 2, 3):
                    continue
                perm = [0, 1, 2, 3]
                for src, dst in zip((0, 2, 3), img):
                    perm[src] = dst
                autos.append(tuple(perm))
        return autos
    if a.name == "E6":
        return [(4, 3, 2, 1, 0, 5)]
    return []


def apply_automorphism(labels: Sequence[int], auto: Sequence[int]) -> Labels:
    out = [0] * len(labels)
    for i, x in enumerate(labels):
        out[auto[i]] = x
    return tuple(out)


# -- formal combinations of representations -------------------------------


@dataclass(frozen=True)
class RepSpec:
    """``constant + sum coeff * qdim(weight)``."""

    terms: Tuple[Tuple[int, Labels], ...] = ()
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "constant", Q(self.constant))
        object.__setattr__(self, "terms", tuple((int(c), tuple(int(x) for x in w)) for c, w in self.terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms and self.constant == 0

    def to_json(self) -> dict:
        return {"terms": [[c, list(w)] for c, w in self.terms], "constant": qstr(self.constant)}

    @classmethod
    def from_json(cls, d: dict) -> "RepSpec":
        return cls(tuple((c, tuple(w)) for c, w in d.get("terms", [])), Q(d.get("constant", "0")))

    def __str__(self) -> str:
        parts = []
        for c, w in self.terms:
            lab = "".join(f"+{x}w{i + 1}" if x != 1 else f"+w{i + 1}" for i, x in enumerate(w) if x)
            lab = lab[1:] or "0"
            parts.append(lab if c == 1 else f"{c}*({lab})")
        if self.constant or not parts:
            parts.append(qstr(self.constant))
        return " (+) ".join(parts)


def qdim_of_spec(rs: RootSystem, spec: RepSpec) -> SinhSum:
    out = SinhSum([SinhProduct.constant(spec.constant)])
    for c, w in spec.terms:
        out = out + weyl_qdim(rs, w).scale(c)
    return out


def numbering_table() -> dict:
    """The committed node-numbering data file."""
    text = resources.files("vogelqdim.data").joinpath("numbering.json").read_text()
    return json.loads(text)
