"""Inequality suite tying the Frobenius side to the homological side.

Checks, by identifier:

V1  Fedder's criterion agrees with b(p) being defined.
V2  p*b(p^e) <= b(p^(e+1)), fptLower non-decreasing, 0 <= b <= nu <= n(q-1).
V3  fptLower(e) <= -a_i for every finite a_i, and every finite a_i <= 0.
V4  (1-q) a_i <= nu(q) for every e and finite a_i.
V5  pd <= mu(I) and reg <= dim - fpt.
V6  Gorenstein and splitting-prime consistency: fpt = -a_d,
    deg f = (p-1)(n + a_d), the e=2 colon is (f^(1+p)) + I^[p^2],
    a_d = max j - n on the last Betti column, decreasing splitting chain,
    fptLower <= sdim, and a_i = 0 forcing b = 0 and I_e = m.

V2-V6 only apply to F-pure rings and are skipped otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .errors import NotPrincipalError, NotSplitError
from .frobenius import (
    DEFAULT_BUDGET,
    FrobeniusContext,
    b_invariant,
    fedder_colon,
    fpt_report,
    gorenstein_fpt,
    is_f_pure,
    splitting_prime_estimate,
)
from .ideal import Ideal, bracket_power, ideal_sum
from .resolution import a_invariants, betti_table, classify, free_resolution


@dataclass
class Check:
    id: str
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""


@dataclass
class Verification:
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, id, name, ok, detail=""):
        status = "skip" if ok is None else ("pass" if ok else "fail")
        self.checks.append(Check(id, name, status, detail))


def _fmt(x):
    return str(x) if x is not None else "-inf"


def verify_ring(I: Ideal, max_e: int = 2, budget: int = DEFAULT_BUDGET, expect: Optional[dict] = None) -> Verification:
    out = Verification()
    R = FrobeniusContext(I, budget)
    p, n = R.p, R.n
    pure = is_f_pure(R)
    try:
        b_invariant(R, 1)
        split = True
    except NotSplitError:
        split = False
    out.add("V1", "Fedder criterion", bool(pure) == split, f"F-pure={bool(pure)}")
    if not pure:
        for vid, name in [
            ("V2", "b monotonicity"),
            ("V3", "fpt <= -a_i"),
            ("V4", "(1-q) a_i <= nu"),
            ("V5", "homological bounds"),
            ("V6", "Gorenstein and splitting consistency"),
        ]:
            out.add(vid, name, None, "ring is not F-pure")
        _expectations(out, expect, {"fpure": False})
        return out

    C = free_resolution(I)
    bt = betti_table(C)
    ainv = a_invariants(I)
    finite = ainv.finite()
    cls = classify(I)
    rep = fpt_report(R, max_e, ainv, gorenstein=False, check=False)

    b, nu, lower = rep.b_values, rep.nu_values, rep.fpt_lower
    v2 = [f"b={b}", f"nu={nu}"]
    ok2 = all(p * b[k] <= b[k + 1] for k in range(len(b) - 1))
    ok2 &= all(lower[k] <= lower[k + 1] for k in range(len(lower) - 1))
    ok2 &= all(0 <= x <= y <= n * (p**e - 1) for e, x, y in zip(rep.e_levels, b, nu))
    out.add("V2", "b monotonicity", ok2, ", ".join(v2))

    ok3 = all(lo <= -a for lo in lower for a in finite.values()) and all(a <= 0 for a in finite.values())
    out.add("V3", "fpt <= -a_i", ok3, f"a={ {i: _fmt(ainv[i]) for i in range(ainv.d + 1)} }")

    ok4 = all(h for *_, h in rep.nu_inequalities)
    out.add("V4", "(1-q) a_i <= nu", ok4, f"{len(rep.nu_inequalities)} inequalities")

    cert = None
    if cls.is_gorenstein:
        try:
            cert = gorenstein_fpt(R)
        except NotPrincipalError as exc:
            cert = exc.certificate
    upper = rep.fpt_upper_from_a
    if cert is not None and cert.principality_verified:
        fpt, how = cert.fpt_exact, "exact"
    elif upper is not None and lower and lower[-1] == upper:
        fpt, how = Fraction(upper), "pinned"
    else:
        fpt, how = (lower[-1] if lower else Fraction(0)), "implied"
    mu = C.modules[1].rank if C.length else 0
    ok5 = bt.pd <= mu and bt.reg <= cls.dim - fpt
    out.add("V5", "homological bounds", ok5, f"pd={bt.pd} mu={mu} reg={bt.reg} dim={cls.dim} fpt={fpt} ({how})")

    ok6, notes = True, []
    a_d = ainv.top
    if cls.is_cm:
        top_j = max(j for (i, j) in bt.entries if i == bt.pd)
        ok6 &= a_d == top_j - n
        notes.append(f"a_d={a_d} maxj={top_j}")
    if cls.is_gorenstein:
        ok6 &= cert is not None and cert.principality_verified
        if cert is not None:
            ok6 &= cert.fpt_exact == -a_d and cert.deg_f == (p - 1) * (n + a_d)
            notes.append(f"fptExact={cert.fpt_exact} degF={cert.deg_f}")
            if max_e >= 2:
                q2 = p * p
                expected = ideal_sum(Ideal(R.ring, [cert.f ** (1 + p)]), bracket_power(I, q2))
                ok6 &= expected == fedder_colon(R, 2)
    split_data = splitting_prime_estimate(R, max_e)
    chain = [split_data.levels[e] for e in sorted(split_data.levels)]
    ok6 &= all(chain[k].contains_ideal(chain[k + 1]) for k in range(len(chain) - 1))
    if split_data.stabilized_prime is not None:
        ok6 &= all(lo <= split_data.sdim for lo in lower) and all(split_data.compatible_levels)
        notes.append(f"sdim={split_data.sdim}")
    if 0 in finite.values():
        ok6 &= all(x == 0 for x in b) and all(J == R.maximal for J in chain)
    out.add("V6", "Gorenstein and splitting consistency", ok6, " ".join(notes))

    _expectations(
        out,
        expect,
        {
            "fpure": True,
            "gorenstein": cls.is_gorenstein,
            "cm": cls.is_cm,
            "pd": bt.pd,
            "reg": bt.reg,
            "dim": cls.dim,
            "b": b,
            "fpt": cert.fpt_exact if cert is not None and cert.principality_verified else None,
            "sdim": split_data.sdim,
            **{f"a.{i}": ainv[i] for i in range(ainv.d + 1)},
        },
    )
    return out


def _expectations(out: Verification, expect, actual):
    if not expect:
        return
    bad = []
    for key, want in sorted(expect.items()):
        if key not in actual:
            continue
        got = actual[key]
        if isinstance(want, list):
            got = got[: len(want)] if isinstance(got, list) else got
        if got != want:
            bad.append(f"{key}: expected {_fmt(want)}, got {_fmt(got)}")
    out.add("E", "recorded expectations", not bad, "; ".join(bad))
