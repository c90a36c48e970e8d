"""Sparse polynomials over a prime field F_p with a fixed monomial order.

Monomials are tuples of non-negative exponents. Coefficients are plain
integers reduced into ``range(p)``. A :class:`Polynomial` keeps its terms in a
dict; the sorted view (descending in the ring's order) is built on demand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from operator import add
from typing import Callable, Dict, Iterable, Tuple, Union

from .errors import ArgumentError, ContextError, ParseError

Monomial = Tuple[int, ...]

ORDERS = ("grevlex", "lex", "block")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _grevlex_key(m):
    return (-sum(m), m[::-1])


def _lex_key(m):
    return tuple(-e for e in m)


def _make_key(order: str, block: int) -> Callable[[Monomial], tuple]:
    # Keys sort ascending in *descending* monomial order, so min() is the
    # leading monomial and a heap pops the largest term first.
    if order == "grevlex":
        return _grevlex_key
    if order == "lex":
        return _lex_key

    def block_key(m):
        return (_grevlex_key(m[:block]), _grevlex_key(m[block:]))

    return block_key


@dataclass(frozen=True)
class RingContext:
    """The ambient ring F_p[x_1..x_n] together with its monomial order.

    ``order="block"`` compares the first ``block`` variables by grevlex and
    breaks ties with grevlex on the remaining ones, which makes it an
    elimination order for the first block.
    """

    p: int
    var_names: Tuple[str, ...]
    order: str = "grevlex"
    block: int = 0
    key: Callable[[Monomial], tuple] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ArgumentError(f"{self.p} is not prime")
        if self.p >= 2**31:
            raise ArgumentError("characteristic must be below 2^31")
        if not names:
            raise ArgumentError("need at least one variable")
        if len(set(names)) != len(names):
            raise ArgumentError("variable names must be distinct")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise ArgumentError(f"invalid variable name {name!r}")
        if self.order not in ORDERS:
            raise ArgumentError(f"unknown monomial order {self.order!r}")
        if self.order == "block" and not 0 < self.block < len(names):
            raise ArgumentError("block order needs 0 < block < n")
        object.__setattr__(self, "key", _make_key(self.order, self.block))

    @property
    def n(self) -> int:
        return len(self.var_names)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Return 1 if a > b, -1 if a < b, 0 if equal."""
        if len(a) != self.n or len(b) != self.n:
            raise ArgumentError("monomial length does not match the ring")
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return 0
        return 1 if ka < kb else -1

    def zero(self) -> "Polynomial":
        return Polynomial(self)

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.n: c})

    def monomial(self, exps, coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def var(self, which: Union[int, str]) -> "Polynomial":
        i = self.var_names.index(which) if isinstance(which, str) else which
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def with_order(self, order: str, block: int = 0) -> "RingContext":
        return RingContext(self.p, self.var_names, order, block)


class Polynomial:
    """An immutable element of ``ctx``'s polynomial ring."""

    __slots__ = ("ctx", "_d", "_sorted")

    def __init__(self, ctx: RingContext, terms=None):
        self.ctx = ctx
        self._sorted = None
        d: Dict[Monomial, int] = {}
        if terms:
            p, n = ctx.p, ctx.n
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                m = tuple(m)
                if len(m) != n or any(e < 0 for e in m):
                    raise ArgumentError(f"bad exponent vector {m}")
                c = (d.get(m, 0) + c) % p
                if c:
                    d[m] = c
                else:
                    d.pop(m, None)
        self._d = d

    @classmethod
    def _raw(cls, ctx, d):
        # trusted constructor: d already reduced mod p with no zeros
        f = cls.__new__(cls)
        f.ctx = ctx
        f._d = d
        f._sorted = None
        return f

    # -- views -----------------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple[Monomial, int], ...]:
        if self._sorted is None:
            key = self.ctx.key
            self._sorted = tuple(sorted(self._d.items(), key=lambda t: key(t[0])))
        return self._sorted

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self._d)

    def monomials(self):
        return [m for m, _ in self.terms]

    def coefficient(self, m) -> int:
        return self._d.get(tuple(m), 0)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    @property
    def leading_monomial(self) -> Monomial:
        if not self._d:
            raise ArgumentError("zero polynomial has no leading monomial")
        return min(self._d, key=self.ctx.key)

    @property
    def leading_coefficient(self) -> int:
        return self._d[self.leading_monomial] if self._d else 0

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._d), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._d}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._d)

    def homogeneous_components(self) -> Dict[int, "Polynomial"]:
        parts: Dict[int, dict] = {}
        for m, c in self._d.items():
            parts.setdefault(sum(m), {})[m] = c
        return {deg: Polynomial._raw(self.ctx, d) for deg, d in sorted(parts.items())}

    def monic(self) -> "Polynomial":
        if not self._d:
            return self
        return self * pow(self.leading_coefficient, -1, self.ctx.p)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextError("polynomials belong to different rings")
            return other
        if isinstance(other, int):
            return self.ctx.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        d = dict(self._d)
        for m, c in other._d.items():
            v = (d.get(m, 0) + c) % p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Polynomial._raw(self.ctx, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return Polynomial._raw(self.ctx, {m: p - c for m, c in self._d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            c0 = other % self.ctx.p
            if not c0:
                return self.ctx.zero()
            p = self.ctx.p
            return Polynomial._raw(self.ctx, {m: c * c0 % p for m, c in self._d.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        d: Dict[Monomial, int] = {}
        for m1, c1 in self._d.items():
            for m2, c2 in other._d.items():
                m = tuple(map(add, m1, m2))
                d[m] = (d.get(m, 0) + c1 * c2) % p
        return Polynomial._raw(self.ctx, {m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def frobenius(self, e: int = 1) -> "Polynomial":
        """Return f^(p^e), computed termwise (exponents times p^e; c^p = c in F_p)."""
        q = self.ctx.p**e
        return Polynomial._raw(self.ctx, {tuple(a * q for a in m): c for m, c in self._d.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ArgumentError("exponent must be a non-negative integer")
        p = self.ctx.p
        result = self.ctx.one()
        base = self
        # write k in base p; f^(a*p^i) = (f^a)^(p^i) and the p^i-th power is termwise
        i = 0
        while k:
            k, digit = divmod(k, p)
            if digit:
                result = result * (_pow_by_squaring(base, digit).frobenius(i) if i else _pow_by_squaring(base, digit))
            i += 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self._d == other._d

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.var_names, frozenset(self._d.items())))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)

    # -- ring changes ----------------------------------------------------

    def embed(self, ctx: RingContext, positions) -> "Polynomial":
        """Move into ``ctx``, sending variable i to variable ``positions[i]``."""
        out = {}
        for m, c in self._d.items():
            e = [0] * ctx.n
            for i, a in enumerate(m):
                e[positions[i]] += a
            out[tuple(e)] = c
        return Polynomial(ctx, out)


def _pow_by_squaring(f: Polynomial, k: int) -> Polynomial:
    result = f.ctx.one()
    while k:
        if k & 1:
            result = result * f
        k >>= 1
        if k:
            f = f * f
    return result


def linear_form(ctx: RingContext, coeffs) -> Polynomial:
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * ctx.n
        e[i] = 1
        terms[tuple(e)] = c
    return Polynomial(ctx, terms)


# -- text syntax ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^|\*\*|\*|\+|-))")


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    names = f.ctx.var_names
    pieces = []
    for m, c in f.terms:
        factors = []
        for name, a in zip(names, m):
            if a == 1:
                factors.append(name)
            elif a:
                factors.append(f"{name}^{a}")
        if not factors:
            pieces.append(str(c))
        elif c == 1:
            pieces.append("*".join(factors))
        else:
            pieces.append(f"{c}*" + "*".join(factors))
    return " + ".join(pieces)


def parse_polynomial(ctx: RingContext, text: str, line: int = None) -> Polynomial:
    """Parse ``[coeff*] var[^exp] {* var[^exp]}`` terms joined by + and -."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", line, bad + 1)
        kind = "int" if m.group(1) else "name" if m.group(2) else "op"
        value = m.group(1) or m.group(2) or m.group(3)
        if value == "**":
            value = "^"
        tokens.append((kind, value, m.start(m.lastindex) + 1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", line, 1)

    index = {name: i for i, name in enumerate(ctx.var_names)}
    terms = {}
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text) + 1)

    sign = 1
    if peek()[1] in ("+", "-"):
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    while True:
        coeff = 1
        exps = [0] * ctx.n
        expect_factor = True
        while expect_factor:
            kind, value, col = peek()
            if kind == "int":
                coeff *= int(value)
                i += 1
            elif kind == "name":
                if value not in index:
                    raise ParseError(f"unknown variable {value!r}", line, col)
                i += 1
                power = 1
                if peek()[1] == "^":
                    i += 1
                    kind2, value2, col2 = peek()
                    if kind2 != "int":
                        raise ParseError("expected integer exponent", line, col2)
                    power = int(value2)
                    i += 1
                exps[index[value]] += power
            else:
                raise ParseError("expected coefficient or variable", line, col)
            if peek()[1] == "*":
                i += 1
            else:
                expect_factor = False
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
        kind, value, col = peek()
        if kind is None:
            break
        if value not in ("+", "-"):
            raise ParseError(f"unexpected token {value!r}", line, col)
        sign = -1 if value == "-" else 1
        i += 1
        if peek()[0] is None:
            raise ParseError("dangling operator", line, col)
    return Polynomial(ctx, terms)
