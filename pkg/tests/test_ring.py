import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF, Poly, symbols
from sympy.polys.orderings import grevlex, lex

from fthresh import ArgumentError, ContextError, ParseError, RingContext
from fthresh.ring import format_polynomial, parse_polynomial

from conftest import ring


def test_add_cancellation():
    S = ring(5, "xy")
    x, y = S.gens()
    assert (x + y) + (-y) == x


def test_freshman_dream_char_2():
    S = ring(2, "xy")
    x, y = S.gens()
    assert (x + y) ** 2 == x**2 + y**2


def test_mul_reduces_mod_p():
    S = ring(5, "xy")
    x, y = S.gens()
    assert (x + y) * (x - y) == S.parse("x^2 + 4*y^2")


@pytest.mark.parametrize(
    "order,a,b,expected",
    [
        ("grevlex", (2, 1, 0), (1, 1, 1), 1),
        ("grevlex", (3, 0, 0), (2, 2, 0), -1),
        ("lex", (2, 0, 0), (1, 2, 0), 1),
        ("grevlex", (1, 1, 0), (1, 1, 0), 0),
    ],
)
def test_compare_monomials(order, a, b, expected):
    assert ring(7, "xyz", order).compare(a, b) == expected


def test_block_order_eliminates_first_block():
    S = RingContext(7, ("t", "x", "y"), "block", 1)
    assert S.compare((1, 0, 0), (0, 5, 5)) == 1
    assert S.compare((0, 2, 0), (0, 1, 1)) == 1


mono3 = st.tuples(*[st.integers(0, 5)] * 3)


@pytest.mark.parametrize("order,oracle", [("grevlex", grevlex), ("lex", lex)])
@given(a=mono3, b=mono3, c=mono3)
def test_order_matches_sympy_and_is_multiplicative(order, oracle, a, b, c):
    S = ring(3, "xyz", order)
    want = (oracle(a) > oracle(b)) - (oracle(a) < oracle(b))
    assert S.compare(a, b) == want
    ac = tuple(u + v for u, v in zip(a, c))
    bc = tuple(u + v for u, v in zip(b, c))
    assert S.compare(ac, bc) == want


def test_homogeneous_components():
    S = ring(5)
    f = S.parse("x^2 + x*y + z")
    comps = f.homogeneous_components()
    assert comps == {2: S.parse("x^2 + x*y"), 1: S.parse("z")}
    assert S.zero().homogeneous_components() == {}
    g = S.parse("x*y + z^2")
    assert g.homogeneous_components() == {2: g}


def test_context_mismatch():
    with pytest.raises(ContextError):
        ring(5).var(0) + ring(7).var(0)


@pytest.mark.parametrize("p", [1, 4, 9, 2**31 + 11])
def test_bad_modulus(p):
    with pytest.raises(ArgumentError):
        RingContext(p, ("x",))


def test_duplicate_names():
    with pytest.raises(ArgumentError):
        RingContext(3, ("x", "x"))


@pytest.mark.parametrize(
    "text,col",
    [("x^2 + w", 7), ("x^ + y", 4), ("x $ y", 3)],
)
def test_parse_errors_carry_position(text, col):
    S = ring(5)
    with pytest.raises(ParseError) as err:
        parse_polynomial(S, text, line=4)
    assert err.value.line == 4
    assert err.value.column == col


def test_parse_variants():
    S = ring(5)
    assert S.parse("x**2 - 6*y*z") == S.parse("x^2 + 4*y*z")
    assert format_polynomial(S.parse("x^2+4*y*z")) == "x^2 + 4*y*z"


coeffs = st.integers(0, 10)
terms = st.dictionaries(mono3, coeffs, max_size=6)


def _poly(S, d):
    return S.zero() + sum((S.monomial(m, c) for m, c in d.items()), S.zero())


def _sympy(S, f):
    gens = symbols("x y z")
    return Poly.from_dict({m: c for m, c in f.as_dict().items()} or {(0, 0, 0): 0}, *gens, domain=GF(S.p))


@pytest.mark.parametrize("p", [2, 3, 7])
@settings(max_examples=40, deadline=None)
@given(a=terms, b=terms, k=st.integers(0, 4))
def test_arithmetic_matches_sympy(p, a, b, k):
    S = ring(p)
    f, g = _poly(S, a), _poly(S, b)
    for ours, theirs in [
        (f + g, _sympy(S, f) + _sympy(S, g)),
        (f - g, _sympy(S, f) - _sympy(S, g)),
        (f * g, _sympy(S, f) * _sympy(S, g)),
        (f**k, _sympy(S, f) ** k),
    ]:
        assert ours == _poly(S, {m: int(c) % p for m, c in theirs.as_dict().items()})
        # canonical form: no zero coefficients, strictly descending terms
        ts = ours.terms
        assert all(c % p for _, c in ts)
        assert all(S.compare(ts[i][0], ts[i + 1][0]) == 1 for i in range(len(ts) - 1))


@pytest.mark.parametrize("p", [2, 3, 5])
@settings(max_examples=30, deadline=None)
@given(a=terms)
def test_pow_p_is_frobenius(p, a):
    S = ring(p)
    f = _poly(S, a)
    assert f**p == f.frobenius(1)
    assert f ** (p * p) == f.frobenius(2)


@settings(max_examples=30, deadline=None)
@given(a=terms)
def test_format_parse_round_trip(a):
    S = ring(7)
    f = _poly(S, a)
    assert S.parse(format_polynomial(f)) == f
