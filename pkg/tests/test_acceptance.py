"""Acceptance criteria A1-A6, each reported as one PASS/FAIL line."""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from fthresh import (
    FrobeniusContext,
    Ideal,
    a_invariants,
    b_invariant,
    betti_table,
    classify,
    colon,
    f_pure_sequence,
    fpt_report,
    free_resolution,
    gorenstein_fpt,
    hilbert_function,
    homological_bounds,
    is_f_pure,
    splitting_prime_estimate,
    trace,
)
from fthresh.cli import corpus_names, corpus_text, parse_ring_file
from fthresh.resolution import hilbert_from_betti

from conftest import ideal, ring

RESULTS = {}
MAX_E = 2


@contextmanager
def criterion(cid, summary):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[cid] = f"{cid} FAIL  {summary}: {type(exc).__name__}: {exc}"
        print(RESULTS[cid])
        raise
    RESULTS[cid] = f"{cid} PASS  {summary} ({time.perf_counter() - start:.1f}s)"
    print(RESULTS[cid])


def corpus():
    return [parse_ring_file(corpus_text(name)) for name in corpus_names()]


def f_pure_corpus():
    return [rf for rf in corpus() if is_f_pure(FrobeniusContext(rf.ideal))]


def test_a1_three_axes():
    with criterion("A1", "axes (xy,xz,yz) for p in 2,3,5,7"):
        for p in (2, 3, 5, 7):
            start = time.perf_counter()
            S = ring(p)
            R = FrobeniusContext(ideal(S, "x*y, x*z, y*z"))
            assert is_f_pure(R)
            assert [b_invariant(R, e) for e in (1, 2, 3)] == [0, 0, 0]
            data = splitting_prime_estimate(R, 3)
            assert data.stabilized_prime == R.maximal and data.sdim == 0
            a = a_invariants(R.I)
            assert a[1] == 0 and a[0] is None
            c = classify(R.I)
            assert c.is_cm and c.dim == 1 and c.type == 2 and not c.is_gorenstein
            rep = fpt_report(R, MAX_E, a)
            assert rep.fpt_lower[-1] == rep.fpt_upper_from_a == 0
            hb = homological_bounds(R.I, fpt=rep.fpt_upper_from_a, f_pure=True)
            assert (hb.pd, hb.mu, hb.reg, hb.dim) == (2, 3, 1, 1)
            assert hb.pd <= hb.mu and hb.reg <= hb.dim - hb.fpt
            assert time.perf_counter() - start < 5


HYPERSURFACES = ["xy2", "xy5", "quadric3", "quadric5", "quadric7", "cubic7", "cubic13"]


def test_a2_gorenstein_hypersurfaces():
    with criterion("A2", "fptExact = -a_d and deg f = (p-1)(n+a_d) on hypersurfaces"):
        start = time.perf_counter()
        for name in HYPERSURFACES:
            rf = parse_ring_file(corpus_text(name))
            R = FrobeniusContext(rf.ideal)
            assert classify(R.I).is_gorenstein
            cert = gorenstein_fpt(R)
            a_d = a_invariants(R.I).top
            assert cert.principality_verified
            assert cert.fpt_exact == -a_d, name
            assert cert.deg_f == (R.p - 1) * (R.n + a_d), name
        assert time.perf_counter() - start < 30


def test_a3_monotonicity_and_gorenstein_band():
    with criterion("A3", "p*b(p^e) <= b(p^(e+1)), fptLower non-decreasing, Gorenstein band n/p^maxE"):
        for rf in f_pure_corpus():
            R = FrobeniusContext(rf.ideal)
            gor = classify(R.I).is_gorenstein
            rep = fpt_report(R, MAX_E, gorenstein=gor, check=False)
            b = rep.b_values
            assert all(R.p * b[k] <= b[k + 1] for k in range(len(b) - 1)), rf.name
            lo = rep.fpt_lower
            assert all(lo[k] <= lo[k + 1] for k in range(len(lo) - 1)), rf.name
            if gor:
                gap = rep.gorenstein_exact - lo[-1]
                assert 0 <= gap <= Fraction(R.n, R.p**MAX_E), rf.name


def test_a4_a_invariant_inequalities():
    with criterion("A4", "fptLower(e) <= -a_i and (1-p^e) a_i <= nu(p^e)"):
        count = 0
        for rf in f_pure_corpus():
            R = FrobeniusContext(rf.ideal)
            a = a_invariants(R.I).finite()
            rep = fpt_report(R, MAX_E, check=False)
            for e, lo, nu in zip(rep.e_levels, rep.fpt_lower, rep.nu_values):
                for i, ai in a.items():
                    assert lo <= -ai, (rf.name, e, i)
                    assert (1 - R.p**e) * ai <= nu, (rf.name, e, i)
                    count += 1
        assert count > 0


def test_a5_f_pure_sequences():
    with criterion("A5", "F-pure sequences of length fpt with the a_d/fpt staircase"):
        cases = [(ring(5), "x^2 + y*z", 1), (ring(3, "xy"), None, 2), (ring(5, "xyz"), None, 3)]
        for S, gens, length in cases:
            I = ideal(S, gens) if gens else Ideal(S)
            seq = f_pure_sequence(FrobeniusContext(I))
            assert len(seq) == length
            tops = [seq.a_top] + [s.a_top for s in seq.steps]
            assert all(b - a == 1 for a, b in zip(tops, tops[1:]))
            fpts = [s.fpt_before for s in seq.steps] + [seq.fpt - length]
            assert all(x - y == 1 for x, y in zip(fpts, fpts[1:]))
            assert fpts[-1] == 0


def _monomial_membership(rng):
    n = rng.randint(1, 4)
    S = ring(rng.choice([2, 3, 5, 7]), "xyzw"[:n])
    gens = [tuple(rng.randint(0, 6) for _ in range(n)) for _ in range(rng.randint(1, 5))]
    J = Ideal(S, [S.monomial(g) for g in gens])
    for _ in range(5):
        m = tuple(rng.randint(0, 8) for _ in range(n))
        brute = any(all(a <= b for a, b in zip(g, m)) for g in gens)
        assert (S.monomial(m) in J) == brute


def _trace_composition(rng):
    p = rng.choice([2, 3, 5])
    S = ring(p, "xyz")
    e1 = rng.randint(1, 2)
    e2 = rng.randint(1, 3 - e1)
    hi = p ** (e1 + e2) * 2
    g = S.zero()
    for _ in range(rng.randint(1, 8)):
        m = tuple(rng.choice([rng.randint(0, hi), p ** (e1 + e2) - 1]) for _ in range(3))
        g = g + S.monomial(m, rng.randint(1, p - 1) if p > 1 else 1)
    assert trace(trace(g, e1), e2) == trace(g, e1 + e2)


def _euler_characteristic(rf):
    J = rf.ideal
    bt = betti_table(free_resolution(J))
    top = bt.reg + bt.pd + 2
    h = hilbert_function(J, top)
    assert all(hilbert_from_betti(bt, J.ctx.n, d) == h[d] for d in range(top + 1)), rf.name


def _principal_colon(rng):
    p = rng.choice([2, 3, 5])
    e = 1 if p > 2 else rng.randint(1, 2)
    q = p**e
    S = ring(p, "xyz")
    f = S.zero()
    while f.is_zero() or f.degree() < 1:
        f = S.zero()
        for _ in range(rng.randint(2, 4)):
            m = tuple(rng.randint(0, 2) for _ in range(3))
            f = f + S.monomial(m, rng.randint(1, p - 1))
    lhs = colon(Ideal(S, [f**q]), Ideal(S, [f]))
    assert lhs == Ideal(S, [f ** (q - 1)]), str(f)


def test_a6_oracle_suites():
    with criterion("A6", "membership, trace composition, Euler characteristic, principal colons"):
        start = time.perf_counter()
        rng = random.Random(20240601)
        for _ in range(200):
            _monomial_membership(rng)
        for _ in range(200):
            _trace_composition(rng)
        for rf in corpus():
            _euler_characteristic(rf)
        for _ in range(50):
            _principal_colon(rng)
        assert time.perf_counter() - start < 120


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
