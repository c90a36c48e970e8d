"""Search for F-pure regular sequences of linear forms.

A linear form l is a good cut for an F-pure R = S/I with Fedder element f
(f in (I^[p]:I) outside n^[p]) when

1. l^(p-1) f is not in n^[p],
2. l is not in the splitting prime (or a candidate containing it),
3. l is a nonzerodivisor on R, tested as (I : l) = I.

Then l^(p-1) f lies in ((I+l)^[p] : (I+l)), so R/(l) is again F-pure.
Over F_p such an l need not exist; the search reports that instead of
guessing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import List, Optional

from .errors import FieldTooSmallError, InvariantViolation, PreconditionError
from .frobenius import (
    FrobeniusContext,
    fedder_colon,
    gorenstein_fpt,
    is_f_pure,
    outside_bracket_power,
    splitting_ideal,
    splitting_prime_estimate,
)
from .ideal import Ideal, colon, ideal_sum
from .resolution import a_invariants, classify
from .ring import Polynomial, linear_form

EXHAUSTIVE_BOUND = 10**5


@dataclass
class LinearCut:
    form: Polynomial
    witness_monomial: tuple
    nonzerodivisor: bool
    # True when condition 2 was tested against I_e instead of a stabilized prime
    heuristic: bool


@dataclass
class StepCertificate:
    form: Polynomial
    witness_monomial: tuple
    nonzerodivisor: bool
    quotient_f_pure: bool
    a_top: int
    fpt_before: Fraction
    heuristic: bool


@dataclass
class FPureSequence:
    forms: List[Polynomial] = field(default_factory=list)
    steps: List[StepCertificate] = field(default_factory=list)
    fpt: Optional[Fraction] = None
    a_top: Optional[int] = None

    def __len__(self):
        return len(self.forms)


def is_nonzerodivisor(I: Ideal, g: Polynomial) -> bool:
    return colon(I, Ideal(I.ctx, [g])) == I


def _candidate_prime(R: FrobeniusContext, max_e: int):
    data = splitting_prime_estimate(R, max_e)
    if data.stabilized_prime is not None:
        return data.stabilized_prime, False
    return splitting_ideal(R, max_e), True


def _vectors(p, n, seed, samples, exhaustive_bound):
    rng = random.Random(seed)
    for _ in range(samples):
        v = [rng.randrange(p) for _ in range(n)]
        if any(v):
            yield v
    if p**n <= exhaustive_bound:
        # one representative per point of P^(n-1): first nonzero entry is 1
        for lead in range(n):
            for tail in product(range(p), repeat=n - lead - 1):
                yield [0] * lead + [1] + list(tail)


def find_f_pure_linear(
    R: FrobeniusContext,
    f: Optional[Polynomial] = None,
    seed: int = 0,
    prime: Optional[Ideal] = None,
    max_e: int = 1,
    samples: int = 64,
    exhaustive_bound: int = EXHAUSTIVE_BOUND,
) -> LinearCut:
    """A linear form satisfying the three cut conditions above.

    ``prime`` is the splitting-prime candidate; when omitted the chain of
    splitting ideals up to ``max_e`` is computed, and if it does not
    stabilize the cut is tested against I_max_e and flagged heuristic.
    """
    p, n = R.p, R.n
    if f is None:
        f = gorenstein_fpt(R, strict=False).f
    if outside_bracket_power(f, p) is None or f not in fedder_colon(R, 1):
        raise PreconditionError("f must lie in (I^[p]:I) but not in n^[p]")
    if f.degree() > (p - 1) * (n - 1):
        raise PreconditionError(f"deg f = {f.degree()} exceeds (p-1)(n-1) = {(p - 1) * (n - 1)}")
    heuristic = False
    if prime is None:
        prime, heuristic = _candidate_prime(R, max_e)
    seen = set()
    for v in _vectors(p, n, seed, samples, exhaustive_bound):
        inv = pow(next(c for c in v if c), -1, p)
        t = tuple(c * inv % p for c in v)
        if t in seen:
            continue
        seen.add(t)
        ell = linear_form(R.ring, t)
        mono = outside_bracket_power(ell ** (p - 1) * f, p)
        if mono is None or ell in prime:
            continue
        if not is_nonzerodivisor(R.I, ell):
            continue
        return LinearCut(ell, mono, True, heuristic)
    raise FieldTooSmallError(
        f"no linear form over F_{p} satisfies the cut conditions; the existence "
        "argument needs an infinite field"
    )


def f_pure_sequence(R: FrobeniusContext, seed: int = 0, max_e: int = 1, **search) -> FPureSequence:
    """Cut a Gorenstein F-pure ring by linear forms until its fpt reaches 0.

    Each step checks that the quotient is F-pure with witness l^(p-1) f, that
    fpt drops by exactly 1 and that a_d rises by exactly 1.
    """
    if not is_f_pure(R):
        raise PreconditionError("ring is not F-pure")
    if not classify(R.I).is_gorenstein:
        raise PreconditionError("ring is not Gorenstein")
    p = R.p
    seq = FPureSequence()
    cur = R
    cert = gorenstein_fpt(cur)
    start = cert.fpt_exact
    a_top = a_invariants(cur.I).top
    if a_top != -start:
        raise InvariantViolation(f"fpt {start} != -a_d = {-a_top}")
    seq.fpt, seq.a_top = start, a_top
    while cert.fpt_exact != 0:
        try:
            cut = find_f_pure_linear(cur, cert.f, seed=seed + len(seq), max_e=max_e, **search)
        except FieldTooSmallError as exc:
            exc.partial = seq
            raise
        J = ideal_sum(cur.I, Ideal(cur.ring, [cut.form]))
        nxt = FrobeniusContext(J, cur.budget)
        witness = cut.form ** (p - 1) * cert.f
        pure = witness in fedder_colon(nxt, 1) and bool(is_f_pure(nxt))
        if not pure:
            raise InvariantViolation(f"quotient by {cut.form} is not F-pure")
        new_cert = gorenstein_fpt(nxt)
        new_top = a_invariants(J).top
        if new_top != a_top + 1:
            raise InvariantViolation(f"a_d went from {a_top} to {new_top}, expected +1")
        if new_cert.fpt_exact != cert.fpt_exact - 1:
            raise InvariantViolation(f"fpt went from {cert.fpt_exact} to {new_cert.fpt_exact}, expected -1")
        seq.forms.append(cut.form)
        seq.steps.append(
            StepCertificate(cut.form, cut.witness_monomial, cut.nonzerodivisor, pure, new_top, cert.fpt_exact, cut.heuristic)
        )
        cur, cert, a_top = nxt, new_cert, new_top
    if len(seq) != start:
        raise InvariantViolation(f"sequence length {len(seq)} != fpt {start}")
    return seq


@dataclass
class SequenceCheck:
    ok: bool
    stage: Optional[str]
    total_degree: int
    bound: Optional[int]

    def __bool__(self):
        return self.ok


def check_f_pure_sequence_bound(R: FrobeniusContext, forms) -> SequenceCheck:
    """Check forms are a regular sequence with F-pure quotients and sum of degrees <= min(-a_i).

    ``stage`` names the first failing check: "homogeneous", "regular",
    "f-pure" or "bound".
    """
    total = sum(g.degree() for g in forms)
    finite = a_invariants(R.I).finite()
    bound = min(-a for a in finite.values()) if finite else None
    if not all(g.is_homogeneous() and g.degree() > 0 for g in forms):
        return SequenceCheck(False, "homogeneous", total, bound)
    if not is_f_pure(R):
        return SequenceCheck(False, "f-pure", total, bound)
    I = R.I
    for g in forms:
        if not is_nonzerodivisor(I, g):
            return SequenceCheck(False, "regular", total, bound)
        I = ideal_sum(I, Ideal(I.ctx, [g]))
        if I.is_unit() or not is_f_pure(FrobeniusContext(I, R.budget)):
            return SequenceCheck(False, "f-pure", total, bound)
    if bound is not None and total > bound:
        return SequenceCheck(False, "bound", total, bound)
    return SequenceCheck(True, None, total, bound)
