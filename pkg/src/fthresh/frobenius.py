"""Frobenius-side invariants of R = S/I: Fedder colons, F-purity, b and nu
sequences, F-pure threshold bounds, splitting ideals and compatible ideals.

Throughout, q = p^e and n^[q] = (x_1^q, ..., x_n^q). A polynomial lies in
n^[q] exactly when each of its terms has some exponent >= q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .errors import (
    ArgumentError,
    BudgetExceededError,
    InvariantViolation,
    NotPrincipalError,
    NotSplitError,
    PreconditionError,
)
from .ideal import (
    Ideal,
    bracket_power,
    colon,
    hilbert_function,
    ideal_sum,
    intersect,
    krull_dim,
    standard_monomials_by_degree,
    is_artinian_lead,
)
from .ring import Polynomial

DEFAULT_BUDGET = 10**7


def trace(g: Polynomial, e: int) -> Polynomial:
    """The e-th trace map applied to g^(1/q), written back on integer exponents.

    A term c*x^a survives only if every a_i = q-1 mod q, and then becomes
    c*x^((a - (q-1))/q). Coefficients are unchanged since c^p = c in F_p.
    """
    if e < 1:
        raise ArgumentError("trace needs e >= 1")
    q = g.ctx.p**e
    out = {}
    for m, c in g._d.items():
        if all(a % q == q - 1 for a in m):
            out[tuple((a - q + 1) // q for a in m)] = c
    return Polynomial._raw(g.ctx, out)


def outside_bracket_power(f: Polynomial, q: int) -> Optional[tuple]:
    """A monomial of f with all exponents below q, or None if f ∈ n^[q]."""
    for m, _ in f.terms:
        if all(a < q for a in m):
            return m
    return None


class FrobeniusContext:
    """R = S/I for a proper homogeneous ideal I, with per-level caches."""

    def __init__(self, I: Ideal, budget: int = DEFAULT_BUDGET):
        if not I.is_homogeneous():
            raise ArgumentError("defining ideal must be homogeneous")
        if I.is_unit():
            raise ArgumentError("defining ideal must be proper")
        self.I = I
        self.ring = I.ctx
        self.budget = budget
        self.maximal = Ideal.maximal(I.ctx)
        self._colon: Dict[int, Ideal] = {}
        self._splitting: Dict[int, Ideal] = {}
        self._b: Dict[int, int] = {}
        self._nu: Dict[int, int] = {}

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def n(self) -> int:
        return self.ring.n

    def q(self, e: int) -> int:
        return self.p**e

    def __repr__(self):
        return f"FrobeniusContext(p={self.p}, I={self.I!r})"


def fedder_colon(R: FrobeniusContext, e: int) -> Ideal:
    """(I^[q] : I), which parametrises Hom_R(R^(1/q), R)."""
    if e < 1:
        raise ArgumentError("e must be >= 1")
    if e not in R._colon:
        if R.I.is_zero():
            R._colon[e] = Ideal.unit(R.ring)
        else:
            R._colon[e] = colon(bracket_power(R.I, R.q(e)), R.I)
    return R._colon[e]


@dataclass
class FPurityResult:
    f_pure: bool
    witness: Optional[Polynomial] = None
    witness_monomial: Optional[tuple] = None

    def __bool__(self):
        return self.f_pure


def is_f_pure(R: FrobeniusContext) -> FPurityResult:
    """Fedder's criterion: R is F-pure iff (I^[p]:I) is not inside n^[p]."""
    for g in fedder_colon(R, 1).groebner_basis():
        m = outside_bracket_power(g, R.p)
        if m is not None:
            return FPurityResult(True, g, m)
    return FPurityResult(False)


def _first_degree_outside(C: Ideal, q: int) -> Optional[int]:
    # C homogeneous, so its reduced basis is homogeneous and the least degree
    # of an element outside n^[q] is attained on a basis element
    degrees = [g.degree() for g in C.groebner_basis() if outside_bracket_power(g, q) is not None]
    return min(degrees) if degrees else None


def _first_degree_outside_hilbert(C: Ideal, q: int) -> Optional[int]:
    """Same quantity by comparing Hilbert functions of n^[q] and C + n^[q]."""
    ctx = C.ctx
    nq = bracket_power(Ideal.maximal(ctx), q)
    bigger = ideal_sum(C, nq)
    top = ctx.n * (q - 1)
    h_small = hilbert_function(nq, top)
    h_big = hilbert_function(bigger, top)
    for s in range(top + 1):
        if h_small[s] != h_big[s]:
            return s
    return None


def b_invariant(R: FrobeniusContext, e: int, method: str = "generators") -> int:
    """b_m(p^e) = n(q-1) - u, u the least degree of (I^[q]:I) outside n^[q].

    ``method="hilbert"`` finds u by a degree-by-degree Hilbert-function
    comparison instead; it enumerates up to q^n monomials.
    """
    if method == "generators" and e in R._b:
        return R._b[e]
    q = R.q(e)
    C = fedder_colon(R, e)
    if method == "generators":
        u = _first_degree_outside(C, q)
    elif method == "hilbert":
        _check_budget(R, q)
        u = _first_degree_outside_hilbert(C, q)
    else:
        raise ArgumentError(f"unknown method {method!r}")
    if u is None:
        raise NotSplitError(e)
    b = R.n * (q - 1) - u
    if method == "generators":
        R._b[e] = b
    return b


def _check_budget(R: FrobeniusContext, q: int):
    cells = q**R.n
    if cells > R.budget:
        raise BudgetExceededError(f"table of {cells} cells exceeds budget {R.budget}")


def nu_invariant(R: FrobeniusContext, e: int) -> int:
    """nu_m(p^e): the top nonzero degree of S/(I + n^[q])."""
    if e in R._nu:
        return R._nu[e]
    q = R.q(e)
    _check_budget(R, q)
    J = ideal_sum(R.I, bracket_power(R.maximal, q))
    lead = J.leading_monomials()
    top = -1
    for d, _level in standard_monomials_by_degree(lead, R.n, budget=R.budget):
        top = d
    R._nu[e] = top
    return top


# -- threshold reports ---------------------------------------------------------


@dataclass
class FThresholdReport:
    p: int
    n: int
    e_levels: List[int] = field(default_factory=list)
    b_values: List[int] = field(default_factory=list)
    nu_values: List[int] = field(default_factory=list)
    fpt_lower: List[Fraction] = field(default_factory=list)
    c_estimates: List[Fraction] = field(default_factory=list)
    fpt_upper_from_a: Optional[int] = None
    gorenstein_exact: Optional[Fraction] = None
    # (e, i, a_i, holds) for (1 - p^e) a_i <= nu(p^e)
    nu_inequalities: List[tuple] = field(default_factory=list)
    partial: bool = False

    def fpt_interval(self):
        lo = self.fpt_lower[-1] if self.fpt_lower else Fraction(0)
        if self.gorenstein_exact is not None:
            return self.gorenstein_exact, self.gorenstein_exact
        return lo, self.fpt_upper_from_a


def fpt_report(
    R: FrobeniusContext, max_e: int, a_invariants=None, gorenstein: bool = False, check: bool = True
) -> FThresholdReport:
    """b, nu and the derived bounds for e = 1..max_e.

    ``a_invariants`` (from :func:`fthresh.resolution.a_invariants`) adds the
    upper bound min(-a_i) and the per-level check (1-q) a_i <= nu(q).
    Pass ``gorenstein=True`` only for rings known to be Gorenstein: a
    principal Fedder colon alone does not imply it.
    Raises BudgetExceededError carrying the levels finished so far, and
    InvariantViolation if ``check`` is set and a known inequality fails.
    """
    if max_e < 1:
        raise ArgumentError("max_e must be >= 1")
    if not is_f_pure(R):
        raise NotSplitError(1, "ring is not F-pure")
    rep = FThresholdReport(R.p, R.n)
    finite = {}
    if a_invariants is not None:
        finite = a_invariants.finite()
        rep.fpt_upper_from_a = min(-a for a in finite.values())
    for e in range(1, max_e + 1):
        q = R.q(e)
        try:
            nu = nu_invariant(R, e)
        except BudgetExceededError as exc:
            rep.partial = True
            exc.partial = rep
            raise
        b = b_invariant(R, e)
        rep.e_levels.append(e)
        rep.b_values.append(b)
        rep.nu_values.append(nu)
        rep.fpt_lower.append(Fraction(b, q))
        rep.c_estimates.append(Fraction(nu, q))
        for i, a in sorted(finite.items()):
            rep.nu_inequalities.append((e, i, a, (1 - q) * a <= nu))
    if check:
        _check_report(rep)
    if gorenstein:
        try:
            rep.gorenstein_exact = gorenstein_fpt(R).fpt_exact
        except NotPrincipalError:
            rep.gorenstein_exact = None
    return rep


def _check_report(rep: FThresholdReport):
    p = rep.p
    for k in range(len(rep.b_values) - 1):
        if p * rep.b_values[k] > rep.b_values[k + 1]:
            raise InvariantViolation(f"p*b(p^{k + 1}) > b(p^{k + 2})")
    for e, b, nu in zip(rep.e_levels, rep.b_values, rep.nu_values):
        if not 0 <= b <= nu <= rep.n * (p**e - 1):
            raise InvariantViolation(f"0 <= b <= nu <= n(q-1) fails at e={e}")
    if rep.fpt_upper_from_a is not None:
        for lo in rep.fpt_lower:
            if lo > rep.fpt_upper_from_a:
                raise InvariantViolation("fpt lower bound exceeds min(-a_i)")


@dataclass
class GorensteinFptCertificate:
    f: Polynomial
    deg_f: int
    fpt_exact: Fraction
    principality_verified: bool


def gorenstein_fpt(R: FrobeniusContext, strict: bool = True) -> GorensteinFptCertificate:
    """Exact fpt = n - deg(f)/(p-1) when (I^[p]:I) = (f) + I^[p].

    f is a least-degree basis element of the colon outside n^[p]; ties go to
    the larger leading monomial.
    """
    C = fedder_colon(R, 1)
    p = R.p
    candidates = [g for g in C.groebner_basis() if outside_bracket_power(g, p) is not None]
    if not candidates:
        raise NotSplitError(1, "ring is not F-pure")
    key = R.ring.key
    f = min(candidates, key=lambda g: (g.degree(), key(g.leading_monomial)))
    deg = f.degree()
    principal = ideal_sum(Ideal(R.ring, [f]), bracket_power(R.I, p)) == C
    cert = GorensteinFptCertificate(f, deg, R.n - Fraction(deg, p - 1), principal)
    if not principal and strict:
        raise NotPrincipalError(cert)
    return cert


# -- splitting ideals ----------------------------------------------------------


def splitting_ideal(R: FrobeniusContext, e: int) -> Ideal:
    """Pullback to S of I_e(R), namely n^[q] : (I^[q]:I)."""
    if e < 1:
        raise ArgumentError("e must be >= 1")
    if e not in R._splitting:
        R._splitting[e] = colon(bracket_power(R.maximal, R.q(e)), fedder_colon(R, e))
    return R._splitting[e]


@dataclass
class SplittingData:
    levels: Dict[int, Ideal]
    cumulative: Dict[int, Ideal]
    stabilized_prime: Optional[Ideal] = None
    stabilized_at: Optional[int] = None
    sdim: Optional[int] = None
    compatible_levels: List[bool] = field(default_factory=list)
    # stabilization at finite e is evidence, not proof
    heuristic: bool = True


def splitting_prime_estimate(R: FrobeniusContext, max_e: int) -> SplittingData:
    """Intersect I_1 ⊇ I_2 ⊇ ... and report the first repeat of the running intersection."""
    if max_e < 1:
        raise ArgumentError("max_e must be >= 1")
    levels, cumulative = {}, {}
    running = None
    data = SplittingData(levels, cumulative)
    for e in range(1, max_e + 1):
        Ie = splitting_ideal(R, e)
        levels[e] = Ie
        if running is None or running.contains_ideal(Ie):
            new = Ie
        else:
            new = intersect(running, Ie)
        if running is not None and new == running and data.stabilized_prime is None:
            data.stabilized_prime = running
            data.stabilized_at = e
        running = new
        cumulative[e] = new
    if data.stabilized_prime is not None:
        data.sdim = krull_dim(data.stabilized_prime)
        data.compatible_levels = is_compatible(R, data.stabilized_prime, max_e)
    return data


def is_compatible(R: FrobeniusContext, J: Ideal, max_e: int) -> List[bool]:
    """Per level e, whether (I^[q]:I) ⊆ (J^[q]:J) for the pullback J ⊇ I.

    A False anywhere certifies J is not compatible; all True only covers the
    tested levels.
    """
    if not J.contains_ideal(R.I):
        raise ArgumentError("J must contain the defining ideal")
    out = []
    for e in range(1, max_e + 1):
        q = R.q(e)
        C = fedder_colon(R, e)
        if J.is_zero():
            target = Ideal.unit(R.ring)
        else:
            target = colon(bracket_power(J, q), J)
        out.append(target.contains_ideal(C))
    return out


@dataclass
class QuotientComparison:
    b_ring: List[int]
    b_quotient: List[int]
    holds: List[bool]
    fpt_lower_ring: List[Fraction]
    fpt_lower_quotient: List[Fraction]
    sdim: Optional[int] = None


def fpt_of_quotient_check(R: FrobeniusContext, J: Ideal, max_e: int, sdim: Optional[int] = None) -> QuotientComparison:
    """Compare b-sequences of R and R/J for a compatible J (b_R <= b_{R/J} levelwise)."""
    compat = is_compatible(R, J, max_e)
    if not all(compat):
        raise PreconditionError("J is not compatible at some tested level")
    RJ = FrobeniusContext(J, R.budget)
    bR = [b_invariant(R, e) for e in range(1, max_e + 1)]
    bJ = [b_invariant(RJ, e) for e in range(1, max_e + 1)]
    return QuotientComparison(
        bR,
        bJ,
        [x <= y for x, y in zip(bR, bJ)],
        [Fraction(b, R.q(e + 1)) for e, b in enumerate(bR)],
        [Fraction(b, R.q(e + 1)) for e, b in enumerate(bJ)],
        sdim,
    )
