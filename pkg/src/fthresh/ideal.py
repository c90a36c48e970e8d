"""Ideals of F_p[x_1..x_n]: Groebner bases and the operations built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from operator import add
from typing import Dict, Iterable, List, Optional

from . import groebner as gb
from .errors import ArgumentError, ContextError, NotArtinianError
from .ring import Polynomial, RingContext


class Ideal:
    """An ideal given by generators, with a lazily computed reduced Groebner basis.

    The basis is cached on first use; computing it twice gives the same
    result, so concurrent population is harmless.
    """

    def __init__(self, ctx: RingContext, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if isinstance(g, int):
                g = ctx.constant(g)
            if g.ctx != ctx:
                raise ContextError("generator from a different ring")
            if g:
                gens.append(g)
        self.ctx = ctx
        self.generators = tuple(gens)
        self._gb: Optional[tuple] = None

    @classmethod
    def maximal(cls, ctx: RingContext) -> "Ideal":
        """The irrelevant ideal (x_1, ..., x_n)."""
        return cls(ctx, ctx.gens())

    @classmethod
    def unit(cls, ctx: RingContext) -> "Ideal":
        return cls(ctx, [ctx.one()])

    @classmethod
    def parse(cls, ctx: RingContext, texts) -> "Ideal":
        if isinstance(texts, str):
            texts = [t for t in texts.split(",") if t.strip()]
        return cls(ctx, [ctx.parse(t) for t in texts])

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"

    # -- Groebner basis ----------------------------------------------------

    def groebner_basis(self) -> tuple:
        if self._gb is None:
            ctx = self.ctx
            order = gb.ideal_order(ctx.key)
            raw = [{(0, m): c for m, c in g._d.items()} for g in self.generators]
            basis = gb.groebner(raw, order, ctx.p)
            self._gb = tuple(Polynomial._raw(ctx, {t[1]: c for t, c in g.items()}) for g in basis)
        return self._gb

    def _set_gb(self, basis):
        self._gb = tuple(basis)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0].is_constant()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.generators)

    def leading_monomials(self) -> List[tuple]:
        return [g.leading_monomial for g in self.groebner_basis()]

    def __contains__(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(g in self for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ctx == other.ctx and self.groebner_basis() == other.groebner_basis()

    __hash__ = None


def groebner_basis(J: Ideal) -> tuple:
    return J.groebner_basis()


def normal_form(f: Polynomial, J: Ideal) -> Polynomial:
    if f.ctx != J.ctx:
        raise ContextError("polynomial and ideal live in different rings")
    ctx = J.ctx
    order = gb.ideal_order(ctx.key)
    basis = [{(0, m): c for m, c in g._d.items()} for g in J.groebner_basis()]
    rem = gb.normal_form({(0, m): c for m, c in f._d.items()}, basis, order, ctx.p)
    return Polynomial._raw(ctx, {t[1]: c for t, c in rem.items()})


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return f / g, raising ArgumentError if g does not divide f."""
    ctx = f.ctx
    key = ctx.key
    p = ctx.p
    lm = g.leading_monomial
    inv = pow(g.leading_coefficient, -1, p)
    rest = dict(f._d)
    quo = {}
    while rest:
        m = min(rest, key=key)
        if any(a < b for a, b in zip(m, lm)):
            raise ArgumentError("division is not exact")
        s = tuple(a - b for a, b in zip(m, lm))
        c = rest[m] * inv % p
        quo[s] = c
        for u, cu in g._d.items():
            nu = tuple(map(add, u, s))
            v = (rest.get(nu, 0) - c * cu) % p
            if v:
                rest[nu] = v
            else:
                rest.pop(nu, None)
    return Polynomial._raw(ctx, quo)


# -- generator-level constructions ---------------------------------------------


def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    _same(A, B)
    return Ideal(A.ctx, A.generators + B.generators)


def ideal_product(A: Ideal, B: Ideal) -> Ideal:
    _same(A, B)
    return Ideal(A.ctx, [a * b for a in A.generators for b in B.generators])


def ideal_power(A: Ideal, r: int) -> Ideal:
    if r < 0:
        raise ArgumentError("power must be non-negative")
    result = Ideal.unit(A.ctx)
    for _ in range(r):
        result = Ideal(A.ctx, {a * b for a in result.generators for b in A.generators})
    return result


def bracket_power(J: Ideal, q: int) -> Ideal:
    """The Frobenius power J^[q] generated by q-th powers of the generators."""
    p = J.ctx.p
    e, r = 0, q
    while r > 1 and r % p == 0:
        r //= p
        e += 1
    if q < 1 or r != 1:
        raise ArgumentError(f"{q} is not a power of {p}")
    out = Ideal(J.ctx, [g.frobenius(e) for g in J.generators])
    if J.is_monomial() and e:
        out._set_gb(sorted((g.frobenius(e) for g in J.groebner_basis()), key=lambda f: J.ctx.key(f.leading_monomial)))
    return out


def _same(A: Ideal, B: Ideal):
    if A.ctx != B.ctx:
        raise ContextError("ideals live in different rings")


# -- elimination ---------------------------------------------------------------


def intersect(A: Ideal, B: Ideal) -> Ideal:
    """A ∩ B, eliminating t from t*A + (1-t)*B.

    t is an extra variable placed in its own leading block; it carries weight
    0 for pair selection, so homogeneous inputs stay graded in x-degree.
    """
    _same(A, B)
    ctx = A.ctx
    if A.is_zero() or B.is_zero():
        return Ideal(ctx)
    if A.is_unit():
        return B
    if B.is_unit():
        return A
    p = ctx.p
    xkey = ctx.key

    def block_key(t):
        m = t[1]
        return (-m[0], xkey(m[1:]))

    order = gb.TermOrder(block_key, lambda t: sum(t[1]) - t[1][0], True)
    gens = []
    for a in A.generators:
        gens.append({(0, (1,) + m): c for m, c in a._d.items()})
    for b in B.generators:
        d = {}
        for m, c in b._d.items():
            d[(0, (0,) + m)] = c
            d[(0, (1,) + m)] = (-c) % p
        gens.append(d)
    basis = gb.groebner(gens, order, p)
    out = []
    for g in basis:
        if all(t[1][0] == 0 for t in g):
            out.append(Polynomial._raw(ctx, {t[1][1:]: c for t, c in g.items()}))
    res = Ideal(ctx, out)
    # on t-free terms the block order is the ring's order: this is its reduced basis
    res._set_gb(sorted(out, key=lambda f: ctx.key(f.leading_monomial)))
    return res


def colon(A: Ideal, B: Ideal) -> Ideal:
    """A : B, as the intersection over generators g of B of (A ∩ (g)) / g."""
    _same(A, B)
    if B.is_zero():
        raise ArgumentError("colon by the zero ideal")
    ctx = A.ctx
    result = None
    for g in B.generators:
        if g in A:
            part = Ideal.unit(ctx)
        else:
            inter = intersect(A, Ideal(ctx, [g]))
            part = Ideal(ctx, [divide_exact(h, g) for h in inter.groebner_basis()])
        result = part if result is None else intersect(result, part)
        if result.is_zero():
            break
    return result


# -- Hilbert function and dimension --------------------------------------------


@dataclass
class HilbertFunctionTable:
    values: Dict[int, int]
    top: Optional[int] = None

    def __getitem__(self, d):
        return self.values[d]


def _divisible_by_any(m, gens):
    for g in gens:
        if all(a <= b for a, b in zip(g, m)):
            return True
    return False


def monomials_of_degree(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def standard_monomials_by_degree(lead, n, max_degree=None, budget=None):
    """Yield (degree, list of standard monomials) level by level.

    Divisors of standard monomials are standard, so each level is obtained by
    multiplying the previous one by variables and filtering.
    """
    level = [] if _divisible_by_any((0,) * n, lead) else [(0,) * n]
    d = 0
    seen = 0
    while level:
        yield d, level
        seen += len(level)
        if budget is not None and seen > budget:
            raise ArgumentError("standard monomial enumeration exceeded its budget")
        if max_degree is not None and d >= max_degree:
            return
        nxt = set()
        for m in level:
            for i in range(n):
                u = m[:i] + (m[i] + 1,) + m[i + 1:]
                if u in nxt:
                    continue
                if not _divisible_by_any(u, lead):
                    nxt.add(u)
        level = sorted(nxt)
        d += 1


def is_artinian_lead(lead, n) -> bool:
    for i in range(n):
        if not any(all(a == 0 for j, a in enumerate(g) if j != i) for g in lead):
            return False
    return True


def hilbert_function(J: Ideal, up_to="auto", budget=None) -> HilbertFunctionTable:
    """dim_K [S/J]_d by counting standard monomials."""
    if not J.is_homogeneous():
        raise ArgumentError("Hilbert function needs a homogeneous ideal")
    n = J.ctx.n
    lead = J.leading_monomials()
    if up_to == "auto" or up_to is None:
        if not is_artinian_lead(lead, n):
            raise NotArtinianError("quotient is not Artinian; give an explicit degree bound")
        values = {}
        top = None
        for d, level in standard_monomials_by_degree(lead, n, budget=budget):
            values[d] = len(level)
            top = d
        return HilbertFunctionTable(values, top)
    values = {d: 0 for d in range(up_to + 1)}
    for d, level in standard_monomials_by_degree(lead, n, max_degree=up_to, budget=budget):
        values[d] = len(level)
    top = None
    if is_artinian_lead(lead, n):
        nz = [d for d, v in values.items() if v]
        top = max(nz) if nz and values[up_to] == 0 else None
    return HilbertFunctionTable(values, top)


def krull_dim(J: Ideal) -> int:
    """Largest set of variables containing the support of no leading monomial."""
    n = J.ctx.n
    if J.is_unit():
        return -1
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in J.leading_monomials()]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0
