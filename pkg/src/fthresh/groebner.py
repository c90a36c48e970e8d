"""Buchberger's algorithm over F_p, for ideals and for submodules of free modules.

The engine works on raw dicts mapping *terms* ``(component, exponents)`` to
nonzero residues. An ideal is the rank-one case where every component is 0.
Callers supply a :class:`TermOrder` bundling

* ``key(term)``: sorts ascending in descending term order (min = leading term),
* ``weight(term)``: the grading used by the normal pair-selection strategy.

Pairs are pruned with the Gebauer-Moeller update. The coprime-leading-term
criterion is only applied in rank one, where it is valid.
"""

from heapq import heapify, heappop, heappush
from operator import add, le, sub


class TermOrder:
    __slots__ = ("key", "weight", "rank_one")

    def __init__(self, key, weight, rank_one=True):
        self.key = key
        self.weight = weight
        self.rank_one = rank_one


def ideal_order(mono_key, weight=None):
    """Rank-one order from a monomial key."""
    if weight is None:
        weight = lambda t: sum(t[1])  # noqa: E731
    return TermOrder(lambda t: mono_key(t[1]), weight, True)


def _divides(a, b):
    return all(map(le, a, b))


class _Reducers:
    """Leading-term index of a monic basis, grouped by component."""

    def __init__(self, basis, key, lts=None):
        self.by_comp = {}
        if lts is None:
            lts = [min(g, key=key) for g in basis]
        for g, lt in zip(basis, lts):
            self.by_comp.setdefault(lt[0], []).append((lt[1], lt, g))

    def find(self, t):
        lst = self.by_comp.get(t[0])
        if lst:
            m = t[1]
            for lm, lt, g in lst:
                if all(map(le, lm, m)):
                    return lm, lt, g
        return None


def reduce(f, reducers, key, p, full=True):
    """Remainder of ``f`` on division by a monic basis (see :class:`_Reducers`)."""
    f = dict(f)
    heap = [(key(t), t) for t in f]
    heapify(heap)
    rem = {}
    find = reducers.find
    while heap:
        t = heappop(heap)[1]
        c = f.pop(t, 0)
        if not c:
            continue
        hit = find(t)
        if hit is None:
            rem[t] = c
            if not full:
                rem.update((u, v) for u, v in f.items() if v)
                break
            continue
        lm, lt, g = hit
        shift = tuple(map(sub, t[1], lm))
        for u, cu in g.items():
            if u is lt or u == lt:
                continue
            nu = (u[0], tuple(map(add, u[1], shift)))
            v = f.get(nu)
            if v is None:
                f[nu] = (-c * cu) % p
                heappush(heap, (key(nu), nu))
            else:
                f[nu] = (v - c * cu) % p
    return rem


def make_monic(f, key, p):
    lt = min(f, key=key)
    c = f[lt]
    if c == 1:
        return f
    inv = pow(c, -1, p)
    return {t: v * inv % p for t, v in f.items()}


def _spoly(g1, lt1, g2, lt2, p):
    lcm = tuple(map(max, lt1[1], lt2[1]))
    s1 = tuple(map(sub, lcm, lt1[1]))
    s2 = tuple(map(sub, lcm, lt2[1]))
    out = {}
    for (c, m), v in g1.items():
        out[(c, tuple(map(add, m, s1)))] = v
    for (c, m), v in g2.items():
        t = (c, tuple(map(add, m, s2)))
        w = (out.get(t, 0) - v) % p
        if w:
            out[t] = w
        else:
            out.pop(t, None)
    return out


class _State:
    def __init__(self, order, p):
        self.order = order
        self.p = p
        self.elts = []  # monic dicts
        self.lts = []
        self.active = []  # indices currently in G
        self.pairs = []  # [weight, key, i, j, lcm_term]

    def lcm(self, i, j):
        a, b = self.lts[i], self.lts[j]
        return (a[0], tuple(map(max, a[1], b[1])))

    def disjoint(self, i, j):
        if not self.order.rank_one:
            return False
        a, b = self.lts[i][1], self.lts[j][1]
        return not any(x and y for x, y in zip(a, b))

    def add(self, h):
        """Gebauer-Moeller update with new element h (already reduced, monic)."""
        key = self.order.key
        weight = self.order.weight
        k = len(self.elts)
        self.elts.append(h)
        lth = min(h, key=key)
        self.lts.append(lth)

        cands = [g for g in self.active if self.lts[g][0] == lth[0]]
        lcms = {g: self.lcm(k, g) for g in cands}
        kept = []
        for idx, g1 in enumerate(cands):
            if self.disjoint(k, g1):
                kept.append(g1)
                continue
            l1 = lcms[g1][1]
            redundant = False
            for g2 in cands[idx + 1:]:
                if _divides(lcms[g2][1], l1):
                    redundant = True
                    break
            if not redundant:
                for g2 in kept:
                    if _divides(lcms[g2][1], l1):
                        redundant = True
                        break
            if not redundant:
                kept.append(g1)
        new_pairs = [g for g in kept if not self.disjoint(k, g)]

        survivors = []
        for pr in self.pairs:
            i, j, lcm = pr[2], pr[3], pr[4]
            if (
                lcm[0] == lth[0]
                and _divides(lth[1], lcm[1])
                and self.lcm(i, k) != lcm
                and self.lcm(k, j) != lcm
            ):
                continue
            survivors.append(pr)
        for g in new_pairs:
            lcm = lcms[g]
            survivors.append([weight(lcm), key(lcm), g, k, lcm])
        self.pairs = survivors

        self.active = [
            g for g in self.active
            if not (self.lts[g][0] == lth[0] and _divides(lth[1], self.lts[g][1]))
        ]
        self.active.append(k)

    def reducers(self):
        return _Reducers(
            [self.elts[i] for i in self.active], self.order.key, [self.lts[i] for i in self.active]
        )


def groebner(gens, order, p):
    """Reduced Groebner basis of the span of ``gens`` (list of term dicts)."""
    key = order.key
    st = _State(order, p)
    todo = [dict(g) for g in gens if g]
    todo.sort(key=lambda g: (order.weight(min(g, key=key)), key(min(g, key=key))))
    for g in todo:
        h = reduce(g, st.reducers(), key, p)
        if h:
            st.add(make_monic(h, key, p))
    while st.pairs:
        best = min(range(len(st.pairs)), key=lambda i: (st.pairs[i][0], st.pairs[i][1]))
        _, _, i, j, _ = st.pairs.pop(best)
        s = _spoly(st.elts[i], st.lts[i], st.elts[j], st.lts[j], p)
        if not s:
            continue
        h = reduce(s, st.reducers(), key, p)
        if h:
            st.add(make_monic(h, key, p))
    return interreduce([st.elts[i] for i in st.active], order, p)


def interreduce(basis, order, p):
    """Tail-reduce a minimal basis and sort it by leading term (largest first)."""
    key = order.key
    basis = [make_monic(g, key, p) for g in basis if g]
    # drop elements whose leading term is divisible by another's
    lts = [min(g, key=key) for g in basis]
    keep = []
    for i, (g, lt) in enumerate(zip(basis, lts)):
        dominated = False
        for j, lt2 in enumerate(lts):
            if j != i and lt2[0] == lt[0] and _divides(lt2[1], lt[1]) and (lt2 != lt or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = _Reducers(keep[:i] + keep[i + 1:], key)
        out.append(make_monic(reduce(g, others, key, p), key, p))
    out.sort(key=lambda g: key(min(g, key=key)))
    return out


def normal_form(f, basis, order, p):
    return reduce(f, _Reducers(basis, order.key), order.key, p)
