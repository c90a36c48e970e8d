from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fthresh import (
    ArgumentError,
    BudgetExceededError,
    FrobeniusContext,
    Ideal,
    NotPrincipalError,
    NotSplitError,
    a_invariants,
    b_invariant,
    bracket_power,
    fedder_colon,
    fpt_of_quotient_check,
    fpt_report,
    gorenstein_fpt,
    ideal_sum,
    is_compatible,
    is_f_pure,
    nu_invariant,
    splitting_ideal,
    splitting_prime_estimate,
    trace,
)
from fthresh.frobenius import outside_bracket_power

from conftest import ideal, ring


def frob(p, gens, names="xyz", **kw):
    S = ring(p, names)
    return FrobeniusContext(ideal(S, gens) if gens else Ideal(S), **kw)


AXES = "x*y, x*z, y*z"
QUADRIC = "x^2 + y*z"


# -- trace ----------------------------------------------------------------------


@pytest.mark.parametrize("p,e", [(2, 1), (3, 2), (5, 1)])
def test_trace_examples(p, e):
    q = p**e
    S = ring(p, "xy")
    assert trace(S.parse(f"x^{q - 1}*y^{q - 1}"), e) == S.one()
    T = ring(p, "x")
    assert trace(T.parse(f"x^{2 * p - 1}"), 1) == T.var(0)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_trace_kills_x(p):
    assert trace(ring(p, "x").var(0), 1).is_zero()


def test_trace_needs_positive_level():
    with pytest.raises(ArgumentError):
        trace(ring(3, "x").var(0), 0)


mono = st.tuples(*[st.integers(0, 30)] * 3)


@pytest.mark.parametrize("p", [2, 3, 5])
@settings(max_examples=30, deadline=None)
@given(terms=st.dictionaries(mono, st.integers(1, 4), max_size=8), e1=st.integers(1, 2), e2=st.integers(1, 2))
def test_trace_composition(p, terms, e1, e2):
    S = ring(p)
    g = sum((S.monomial(m, c) for m, c in terms.items()), S.zero())
    assert trace(trace(g, e1), e2) == trace(g, e1 + e2)


@settings(max_examples=30, deadline=None)
@given(m=st.tuples(*[st.integers(0, 8)] * 3))
def test_trace_reaches_one_from_outside_bracket(m):
    S = ring(3)
    q = 9
    if any(a >= q for a in m):
        return
    partner = tuple(q - 1 - a for a in m)
    assert trace(S.monomial(m) * S.monomial(partner), 2) == S.one()


# -- Fedder colon and F-purity ------------------------------------------------


def test_fedder_colon_examples():
    R = frob(2, "x*y", "xy")
    assert fedder_colon(R, 1) == ideal(R.ring, "x*y")
    Q = frob(5, QUADRIC)
    f = Q.ring.parse(QUADRIC)
    assert fedder_colon(Q, 1) == ideal_sum(Ideal(Q.ring, [f**4]), bracket_power(Q.I, 5))
    assert fedder_colon(frob(3, ""), 1).is_unit()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_axes_are_f_pure(p):
    R = frob(p, AXES)
    res = is_f_pure(R)
    assert res
    assert R.ring.parse(f"x^{p - 1}*y^{p - 1}*z^{p - 1}") in fedder_colon(R, 1)
    assert res.witness in fedder_colon(R, 1)
    assert outside_bracket_power(res.witness, p) == res.witness_monomial


def test_quadric_witness():
    R = frob(5, QUADRIC)
    res = is_f_pure(R)
    assert res and res.witness in fedder_colon(R, 1)
    assert all(a < 5 for a in res.witness_monomial)


def test_double_line_is_not_f_pure():
    R = frob(2, "x^2", "xy")
    assert not is_f_pure(R)
    with pytest.raises(NotSplitError):
        b_invariant(R, 1)


# -- b and nu -------------------------------------------------------------------


@pytest.mark.parametrize("p,e", [(2, 1), (2, 3), (3, 2), (5, 1)])
def test_b_of_polynomial_ring(p, e):
    R = frob(p, "")
    assert b_invariant(R, e) == 3 * (p**e - 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_b_of_axes_is_zero(p):
    assert b_invariant(frob(p, AXES), 1) == 0


def test_b_quadric():
    R = frob(5, QUADRIC)
    assert b_invariant(R, 1) == 4
    assert b_invariant(R, 2) == 24


@pytest.mark.parametrize(
    "p,gens,names",
    [(3, AXES, "xyz"), (5, QUADRIC, "xyz"), (2, "x*y", "xy"), (3, "", "xy"), (3, "x*z, x*w, y*z, y*w", "xyzw")],
)
@pytest.mark.parametrize("e", [1, 2])
def test_b_two_methods_agree(p, gens, names, e):
    R = frob(p, gens, names)
    assert b_invariant(R, e, method="hilbert") == b_invariant(R, e)


@pytest.mark.parametrize("p,e", [(2, 1), (3, 2), (5, 1)])
def test_nu_polynomial_rings(p, e):
    q = p**e
    assert nu_invariant(frob(p, "", "x"), e) == q - 1
    assert nu_invariant(frob(p, ""), e) == 3 * (q - 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_nu_axes(p):
    assert nu_invariant(frob(p, AXES), 1) == p - 1


def test_budget_guard():
    R = frob(5, QUADRIC, budget=1000)
    with pytest.raises(BudgetExceededError) as err:
        fpt_report(R, 2)
    partial = err.value.partial
    assert partial.partial and partial.e_levels == [1]


# -- reports --------------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3])
def test_report_polynomial_ring(p):
    rep = fpt_report(frob(p, ""), 3, gorenstein=True)
    assert rep.fpt_lower == [Fraction(3 * (p**e - 1), p**e) for e in (1, 2, 3)]
    assert rep.gorenstein_exact == 3


def test_report_axes_p3():
    R = frob(3, AXES)
    rep = fpt_report(R, 2, a_invariants(R.I), gorenstein=False)
    assert rep.fpt_lower == [0, 0]
    assert rep.c_estimates == [Fraction(2, 3), Fraction(8, 9)]
    assert rep.fpt_upper_from_a == 0
    assert rep.fpt_interval() == (0, 0)
    assert all(h for *_, h in rep.nu_inequalities)


def test_report_quadric_p5():
    R = frob(5, QUADRIC)
    rep = fpt_report(R, 2, a_invariants(R.I), gorenstein=True)
    assert rep.fpt_lower == [Fraction(4, 5), Fraction(24, 25)]
    assert rep.gorenstein_exact == 1 and rep.fpt_upper_from_a == 1


# -- Gorenstein -----------------------------------------------------------------


def test_gorenstein_xy():
    R = frob(2, "x*y", "xy")
    cert = gorenstein_fpt(R)
    assert cert.f == R.ring.parse("x*y") and cert.fpt_exact == 0 and cert.principality_verified


def test_gorenstein_quadric():
    R = frob(5, QUADRIC)
    cert = gorenstein_fpt(R)
    assert cert.f == R.ring.parse(QUADRIC) ** 4
    assert cert.deg_f == 8 and cert.fpt_exact == 1


def test_gorenstein_polynomial_ring():
    cert = gorenstein_fpt(frob(7, ""))
    assert cert.f == 1 and cert.fpt_exact == 3


def test_twisted_cubic_colon_is_not_principal():
    R = frob(5, "x*z - y^2, x*w - y*z, y*w - z^2", "xyzw")
    with pytest.raises(NotPrincipalError) as err:
        gorenstein_fpt(R)
    assert not err.value.certificate.principality_verified
    assert not gorenstein_fpt(R, strict=False).principality_verified


def test_principal_colon_without_gorenstein():
    # the axes are not Gorenstein, yet their Fedder colon is principal mod I^[p]
    R = frob(3, AXES)
    cert = gorenstein_fpt(R)
    assert cert.principality_verified
    assert cert.f == R.ring.parse("x^2*y^2*z^2")


@pytest.mark.parametrize("p,gens", [(3, QUADRIC), (5, QUADRIC), (7, "x^3 + y^3 + z^3")])
def test_colon_at_level_two(p, gens):
    R = frob(p, gens)
    f = gorenstein_fpt(R).f
    assert fedder_colon(R, 2) == ideal_sum(Ideal(R.ring, [f ** (1 + p)]), bracket_power(R.I, p * p))


# -- splitting ideals -----------------------------------------------------------


@pytest.mark.parametrize("p,e", [(2, 1), (3, 2)])
def test_splitting_ideal_of_polynomial_ring(p, e):
    R = frob(p, "")
    assert splitting_ideal(R, e) == bracket_power(R.maximal, p**e)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_splitting_ideals_of_axes(p):
    R = frob(p, AXES)
    assert splitting_ideal(R, 1) == R.maximal
    assert splitting_ideal(R, 2) == R.maximal
    data = splitting_prime_estimate(R, 2)
    assert data.stabilized_prime == R.maximal and data.sdim == 0
    assert data.compatible_levels == [True, True]


def test_splitting_ideal_of_quadric():
    R = frob(5, QUADRIC)
    I1 = splitting_ideal(R, 1)
    assert I1.contains_ideal(R.I) and not I1.is_unit()
    assert R.ring.parse("x") not in I1


def test_quadric_chain_does_not_stabilize():
    # each I_e contains n^[q], so no two levels agree
    R = frob(5, QUADRIC)
    data = splitting_prime_estimate(R, 2)
    assert data.stabilized_prime is None and data.sdim is None
    for e, J in data.levels.items():
        assert J.contains_ideal(bracket_power(R.maximal, 5**e))
    assert data.levels[1].contains_ideal(data.levels[2])
    assert data.levels[1] != data.levels[2]


def test_polynomial_ring_chain_does_not_stabilize():
    assert splitting_prime_estimate(frob(2, ""), 3).stabilized_prime is None


def test_compatibility():
    R = frob(3, AXES)
    assert is_compatible(R, R.I, 2) == [True, True]
    assert is_compatible(R, R.maximal, 3) == [True, True, True]
    Q = frob(5, QUADRIC)
    assert is_compatible(Q, Q.maximal, 1) == [False]
    with pytest.raises(ArgumentError):
        is_compatible(Q, ideal(Q.ring, "x"), 1)


def test_quotient_comparison():
    R = frob(3, AXES)
    cmp = fpt_of_quotient_check(R, R.maximal, 2)
    assert cmp.b_ring == [0, 0] and cmp.b_quotient == [0, 0] and all(cmp.holds)
    Q = frob(5, QUADRIC)
    same = fpt_of_quotient_check(Q, Q.I, 2)
    assert same.b_ring == same.b_quotient == [4, 24]


@pytest.mark.parametrize("p,gens,names", [(3, AXES, "xyz"), (2, "x*y", "xy"), (3, QUADRIC, "xyz"), (2, "", "xy")])
def test_b_bounds_and_monotonicity(p, gens, names):
    R = frob(p, gens, names)
    bs = [b_invariant(R, e) for e in (1, 2, 3)]
    assert all(p * bs[k] <= bs[k + 1] for k in range(2))
    for e, b in zip((1, 2, 3), bs):
        assert 0 <= b <= nu_invariant(R, e) <= R.n * (p**e - 1)
