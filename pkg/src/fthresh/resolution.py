"""Minimal graded free resolutions of S/I, Betti tables and a-invariants.

Module elements are dicts ``{(component, exponents): coefficient}``. A free
module is described by its list of shifts: basis element c sits in degree
``shifts[c]``, so a term (c, x^m) has degree ``|m| + shifts[c]``.

Resolutions are built by iterated syzygies (Groebner basis of the graph
module, eliminating the image coordinates), keeping at each step only a
minimal homogeneous generating set, which makes the complex minimal.

a-invariants use graded local duality: H^i_m(R) is dual to
Ext^(n-i)_S(R, S(-n)), so a_(n-k)(R) = -n - indeg Ext^k_S(R, S). The
initial degree of Ext^k = ker / im in the dual complex is found by comparing
dimensions of the graded pieces of kernel and image, scanning up to the top
generator degree of the kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from operator import add
from typing import Dict, List, Optional

from . import groebner as gb
from .errors import ArgumentError, MinimalityError
from .ideal import Ideal, colon, ideal_sum, krull_dim, monomials_of_degree
from .linalg import Echelon
from .ring import Polynomial


def _module_order(shifts, split):
    def key(t):
        c, m = t
        return (c >= split, -(sum(m) + shifts[c]), m[::-1], c)

    def weight(t):
        return sum(t[1]) + shifts[t[0]]

    return gb.TermOrder(key, weight, rank_one=False)


def syzygies(vectors, degrees, shifts, n, p):
    """Generators (vector, degree) of the syzygy module of homogeneous vectors.

    ``vectors[j]`` lives in the free module with ``shifts`` and has degree
    ``degrees[j]``; syzygies live in the free module with shifts ``degrees``.
    """
    m = len(shifts)
    zero = (0,) * n
    ext = list(shifts) + list(degrees)
    order = _module_order(ext, m)
    gens = []
    for j, v in enumerate(vectors):
        d = dict(v)
        d[(m + j, zero)] = 1
        gens.append(d)
    out = []
    for g in gb.groebner(gens, order, p):
        lt = min(g, key=order.key)
        if lt[0] >= m:
            out.append(({(c - m, mono): v for (c, mono), v in g.items()}, order.weight(lt)))
    return out


def _multiples(v, mono):
    return {(c, tuple(map(add, m, mono))): x for (c, m), x in v.items()}


def _piece(gens, degree, n, p):
    """Echelon form of the degree-``degree`` part of the module spanned by gens."""
    ech = Echelon(p)
    for v, d in gens:
        if d <= degree:
            for mono in monomials_of_degree(n, degree - d):
                ech.add(_multiples(v, mono))
    return ech


def minimal_generators(elements, n, p):
    """Indices of a minimal generating subset of homogeneous (vector, degree) pairs."""
    order = sorted(range(len(elements)), key=lambda i: elements[i][1])
    kept = []
    ech = None
    current = None
    for i in order:
        v, d = elements[i]
        if not v:
            continue
        if d != current:
            ech = _piece([elements[j] for j in kept], d, n, p)
            current = d
        if ech.add(v):
            kept.append(i)
    return kept


@dataclass
class GradedFreeModule:
    shifts: List[int]

    @property
    def rank(self):
        return len(self.shifts)


@dataclass
class GradedComplex:
    """G_0 <- G_1 <- ... <- G_pd with ``differentials[i-1]`` = d_i as a list of columns."""

    ring: object
    modules: List[GradedFreeModule]
    differentials: List[list] = field(default_factory=list)

    @property
    def length(self):
        return len(self.modules) - 1

    def matrix(self, i) -> List[List[Polynomial]]:
        """d_i as rows (basis of G_(i-1)) by columns (basis of G_i)."""
        ctx = self.ring
        cols = self.differentials[i - 1]
        rows = [[dict() for _ in cols] for _ in self.modules[i - 1].shifts]
        for c, col in enumerate(cols):
            for (r, m), x in col.items():
                rows[r][c][m] = x
        return [[Polynomial._raw(ctx, d) for d in row] for row in rows]

    def check(self):
        """Assert d_i d_(i+1) = 0 and that every entry has the expected degree."""
        p = self.ring.p
        for i in range(1, self.length + 1):
            src, tgt = self.modules[i].shifts, self.modules[i - 1].shifts
            for c, col in enumerate(self.differentials[i - 1]):
                for (r, m), _ in col.items():
                    if sum(m) != src[c] - tgt[r]:
                        raise ArgumentError(f"entry ({r},{c}) of d_{i} is not homogeneous of the right degree")
        for i in range(1, self.length):
            d_low = self.differentials[i - 1]
            for col in self.differentials[i]:
                acc = {}
                for (r, m), x in col.items():
                    for (r2, m2), y in d_low[r].items():
                        t = (r2, tuple(map(add, m, m2)))
                        acc[t] = (acc.get(t, 0) + x * y) % p
                if any(acc.values()):
                    raise ArgumentError(f"d_{i} d_{i + 1} != 0")
        return True


def free_resolution(I: Ideal) -> GradedComplex:
    """Minimal graded free resolution of S/I over S."""
    cached = getattr(I, "_resolution", None)
    if cached is not None:
        return cached
    if not I.is_homogeneous():
        raise ArgumentError("resolution needs a homogeneous ideal")
    if I.is_unit():
        raise ArgumentError("resolution of the zero ring")
    ctx = I.ctx
    n, p = ctx.n, ctx.p
    modules = [GradedFreeModule([0])]
    maps = []
    gens = [({(0, m): c for m, c in g._d.items()}, g.degree()) for g in I.generators]
    cols = [gens[i] for i in minimal_generators(gens, n, p)]
    prev = [0]
    while cols:
        if len(maps) > n:
            raise ArgumentError("resolution longer than the number of variables")
        shifts = [d for _, d in cols]
        modules.append(GradedFreeModule(shifts))
        maps.append([v for v, _ in cols])
        syz = syzygies([v for v, _ in cols], shifts, prev, n, p)
        cols = [syz[i] for i in minimal_generators(syz, n, p)]
        prev = shifts
    C = GradedComplex(ctx, modules, maps)
    C.check()
    I._resolution = C
    return C


@dataclass
class BettiTable:
    entries: Dict[tuple, int]
    pd: int
    reg: int

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def total(self, i):
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def format(self) -> str:
        """Rows j - i, columns i, as in the usual Betti diagram."""
        width = max(4, max((len(str(v)) for v in self.entries.values()), default=1) + 1)
        lines = ["      " + "".join(f"{i:>{width}}" for i in range(self.pd + 1))]
        low = min((j - i for i, j in self.entries), default=0)
        for r in range(low, self.reg + 1):
            cells = []
            for i in range(self.pd + 1):
                v = self.entries.get((i, i + r), 0)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>4}: " + "".join(cells))
        return "\n".join(lines)


def betti_table(C: GradedComplex) -> BettiTable:
    for i, cols in enumerate(C.differentials, start=1):
        for col in cols:
            for (_, m), _x in col.items():
                if not any(m):
                    raise MinimalityError(f"d_{i} has a unit entry")
    entries = {}
    for i, mod in enumerate(C.modules):
        for j in mod.shifts:
            entries[(i, j)] = entries.get((i, j), 0) + 1
    pd = C.length
    reg = max(j - i for i, j in entries)
    return BettiTable(entries, pd, reg)


@dataclass
class AInvariants:
    """a_i(R) for 0 <= i <= d; indices missing from ``values`` mean -infinity."""

    values: Dict[int, int]
    d: int

    def __getitem__(self, i) -> Optional[int]:
        return self.values.get(i)

    def finite(self) -> Dict[int, int]:
        return dict(self.values)

    @property
    def top(self) -> Optional[int]:
        return self.values.get(self.d)


def _rows_as_dual_vectors(cols, nrows):
    rows = [dict() for _ in range(nrows)]
    for c, col in enumerate(cols):
        for (r, m), x in col.items():
            rows[r][(c, m)] = x
    return rows


def ext_initial_degree(C: GradedComplex, k: int) -> Optional[int]:
    """Least degree of a nonzero element of Ext^k_S(S/I, S), or None if it vanishes."""
    ctx = C.ring
    n, p = ctx.n, ctx.p
    if k < 0 or k > C.length:
        return None
    sk = C.modules[k].shifts
    dual = [-s for s in sk]
    zero = (0,) * n
    if k == C.length:
        ker = [({(c, zero): 1}, dual[c]) for c in range(len(sk))]
    else:
        nxt = C.modules[k + 1].shifts
        rows = _rows_as_dual_vectors(C.differentials[k], len(sk))
        ker = syzygies(rows, dual, [-s for s in nxt], n, p)
    if not ker:
        return None
    if k == 0:
        im = []
    else:
        prev = C.modules[k - 1].shifts
        rows = _rows_as_dual_vectors(C.differentials[k - 1], len(prev))
        im = [(v, -s) for v, s in zip(rows, prev) if v]
    lo = min(d for _, d in ker)
    hi = max(d for _, d in ker)
    for s in range(lo, hi + 1):
        if _piece(ker, s, n, p).rank > _piece(im, s, n, p).rank:
            return s
    return None


def a_invariants(I: Ideal) -> AInvariants:
    """a_i(R) for R = S/I via Ext^(n-i)_S(R, S)."""
    C = free_resolution(I)
    n = I.ctx.n
    d = krull_dim(I)
    values = {}
    for k in range(max(n - d, 0), C.length + 1):
        s = ext_initial_degree(C, k)
        if s is not None:
            values[n - k] = -n - s
    return AInvariants(values, d)


@dataclass
class Classification:
    is_cm: bool
    is_gorenstein: bool
    dim: int
    depth: int
    type: int
    pd: int


def classify(I: Ideal) -> Classification:
    C = free_resolution(I)
    n = I.ctx.n
    pd = C.length
    dim = krull_dim(I)
    depth = n - pd
    cm = pd == n - dim
    typ = C.modules[pd].rank
    return Classification(cm, cm and typ == 1, dim, depth, typ, pd)


@dataclass
class HomologicalBounds:
    pd: int
    mu: int
    reg: int
    dim: int
    fpt: Optional[Fraction]
    asserted: bool
    pd_bound: Optional[bool]
    reg_bound: Optional[bool]


def homological_bounds(I: Ideal, fpt=None, f_pure: bool = False) -> HomologicalBounds:
    """pd <= mu(I) and reg <= dim - fpt, asserted only when R is F-pure."""
    C = free_resolution(I)
    bt = betti_table(C)
    mu = C.modules[1].rank if C.length >= 1 else 0
    dim = krull_dim(I)
    fpt = Fraction(fpt) if fpt is not None else None
    pd_ok = bt.pd <= mu if f_pure else None
    reg_ok = (bt.reg <= dim - fpt) if (f_pure and fpt is not None) else None
    return HomologicalBounds(bt.pd, mu, bt.reg, dim, fpt, f_pure, pd_ok, reg_ok)


def hilbert_from_betti(bt: BettiTable, n: int, degree: int) -> int:
    """dim [S/I]_degree from the alternating sum of shifted binomials."""
    total = 0
    for (i, j), b in bt.entries.items():
        if degree - j >= 0:
            total += (-1) ** i * b * comb(degree - j + n - 1, n - 1)
    return total


def cut_shift_check(I: Ideal, g: Polynomial):
    """For a homogeneous nonzerodivisor g of degree D: D + a_i(S/I) <= a_(i-1)(S/(I+g)).

    Returns (i, D + a_i, a_(i-1) of the cut or None for -infinity, holds) for
    every finite a_i with i >= 1.
    """
    if not g.is_homogeneous() or g.degree() < 1:
        raise ArgumentError("g must be homogeneous of positive degree")
    if colon(I, Ideal(I.ctx, [g])) != I:
        raise ArgumentError("g is a zero divisor on S/I")
    D = g.degree()
    before = a_invariants(I)
    after = a_invariants(ideal_sum(I, Ideal(I.ctx, [g])))
    out = []
    for i, a in sorted(before.finite().items()):
        if i < 1:
            continue
        rhs = after[i - 1]
        out.append((i, D + a, rhs, rhs is not None and D + a <= rhs))
    return out
