"""Command line front end and ring-definition files.

A ring file is line oriented::

    # the coordinate ring of three lines through the origin
    name = squarefree3
    p = 3
    vars = x y z
    gens:
    x*y
    x*z
    y*z
    expect.fpt = 0

``key = value`` lines may appear anywhere; every other line after
``gens:`` is one generator. ``expect.*`` keys record known values that
``verify`` compares against.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .errors import (
    ArgumentError,
    BudgetExceededError,
    FThreshError,
    InvariantViolation,
    ParseError,
    PreconditionError,
)
from .frobenius import (
    DEFAULT_BUDGET,
    FrobeniusContext,
    fpt_report,
    is_compatible,
    is_f_pure,
    nu_invariant,
    splitting_prime_estimate,
)
from .ideal import Ideal
from .resolution import a_invariants, betti_table, classify, free_resolution
from .ring import RingContext, format_polynomial, is_prime, parse_polynomial

REPORT_VERSION = 1

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4, 5


@dataclass
class RingFile:
    ctx: RingContext
    ideal: Ideal
    name: Optional[str] = None
    expect: Dict[str, object] = field(default_factory=dict)


def _strip_comment(line):
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _expect_value(text):
    text = text.strip()
    low = text.lower()
    if low in ("true", "false"):
        return low == "true"
    if low in ("-inf", "-infinity"):
        return None
    if "," in text:
        return [_expect_value(t) for t in text.split(",") if t.strip()]
    if "/" in text:
        return Fraction(text)
    try:
        return int(text)
    except ValueError:
        return text


def parse_ring_file(text: str, order: Optional[str] = None) -> RingFile:
    """Parse a ring file into a context and a homogeneous ideal."""
    p = None
    names = None
    name = None
    file_order = None
    expect = {}
    gens = []
    in_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if "=" in line:
            key, _, value = line.partition("=")
            key = key.strip()
            col = line.index("=") + 2 + (len(value) - len(value.lstrip()))
            value = value.strip()
            if key == "p":
                try:
                    p = int(value)
                except ValueError:
                    raise ParseError(f"p must be an integer, got {value!r}", lineno, col) from None
                if not is_prime(p):
                    raise ParseError(f"{p} is not prime", lineno, col)
            elif key == "vars":
                names = value.replace(",", " ").split()
            elif key == "name":
                name = value
            elif key == "order":
                file_order = value
            elif key.startswith("expect."):
                expect[key[len("expect."):]] = _expect_value(value)
            else:
                raise ParseError(f"unknown key {key!r}", lineno, len(line) - len(line.lstrip()) + 1)
            continue
        stripped = line.strip()
        if stripped.rstrip(":").strip() == "gens" and stripped.endswith(":"):
            in_gens = True
            continue
        if not in_gens:
            raise ParseError("expected 'key = value' or 'gens:'", lineno, len(line) - len(line.lstrip()) + 1)
        gens.append((lineno, line))
    if p is None:
        raise ParseError("missing 'p = <prime>'")
    if not names:
        raise ParseError("missing 'vars = ...'")
    try:
        ctx = RingContext(p, tuple(names), order or file_order or "grevlex")
    except ArgumentError as exc:
        raise ParseError(str(exc)) from None
    polys = []
    for lineno, line in gens:
        f = parse_polynomial(ctx, line, lineno)
        if not f.is_homogeneous():
            raise ParseError("generator is not homogeneous", lineno, len(line) - len(line.lstrip()) + 1)
        polys.append(f)
    return RingFile(ctx, Ideal(ctx, polys), name, expect)


def format_ring_file(rf: RingFile) -> str:
    lines = []
    if rf.name:
        lines.append(f"name = {rf.name}")
    lines.append(f"p = {rf.ctx.p}")
    lines.append("vars = " + " ".join(rf.ctx.var_names))
    if rf.ctx.order != "grevlex":
        lines.append(f"order = {rf.ctx.order}")
    lines.append("gens:")
    lines.extend(format_polynomial(g) for g in rf.ideal.generators)
    for key, value in rf.expect.items():
        if isinstance(value, list):
            value = ", ".join("-inf" if v is None else str(v) for v in value)
        elif value is None:
            value = "-inf"
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"expect.{key} = {value}")
    return "\n".join(lines) + "\n"


# -- built-in corpus -----------------------------------------------------------


def corpus_names() -> List[str]:
    root = resources.files("fthresh") / "corpus"
    return sorted(entry.name[: -len(".ring")] for entry in root.iterdir() if entry.name.endswith(".ring"))


def corpus_text(name: str) -> str:
    return (resources.files("fthresh") / "corpus" / f"{name}.ring").read_text(encoding="utf-8")


def load_ring(spec: str, order: Optional[str] = None) -> RingFile:
    """Read a ring file by path, or a built-in corpus entry by bare name."""
    path = Path(spec)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    else:
        stem = path.name[:-5] if path.name.endswith(".ring") else path.name
        if stem not in corpus_names():
            raise ParseError(f"no such ring file or corpus entry: {spec}")
        text = corpus_text(stem)
    rf = parse_ring_file(text, order)
    if rf.name is None:
        rf.name = path.stem
    return rf


# -- report sections -----------------------------------------------------------


def rational(x) -> Optional[dict]:
    if x is None:
        return None
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def ring_section(rf: RingFile) -> dict:
    return {
        "name": rf.name,
        "p": rf.ctx.p,
        "vars": list(rf.ctx.var_names),
        "order": rf.ctx.order,
        "gens": [format_polynomial(g) for g in rf.ideal.generators],
    }


def fpurity_section(R: FrobeniusContext) -> dict:
    res = is_f_pure(R)
    return {
        "fPure": res.f_pure,
        "witness": format_polynomial(res.witness) if res.witness is not None else None,
        "witnessMonomial": list(res.witness_monomial) if res.witness_monomial is not None else None,
    }


def fpt_section(R: FrobeniusContext, max_e: int) -> dict:
    gor = classify(R.I).is_gorenstein
    rep = fpt_report(R, max_e, a_invariants(R.I), gorenstein=gor)
    lo, hi = rep.fpt_interval()
    return {
        "levels": [
            {"e": e, "q": R.q(e), "b": b, "nu": nu, "fptLower": rational(fl), "cEstimate": rational(c)}
            for e, b, nu, fl, c in zip(rep.e_levels, rep.b_values, rep.nu_values, rep.fpt_lower, rep.c_estimates)
        ],
        "fptLower": [rational(x) for x in rep.fpt_lower],
        "fptUpperFromA": rational(rep.fpt_upper_from_a),
        "gorensteinExact": rational(rep.gorenstein_exact),
        "interval": {"lower": rational(lo), "upper": rational(hi)},
        "nuInequalities": [{"e": e, "i": i, "a": a, "holds": h} for e, i, a, h in rep.nu_inequalities],
        "partial": rep.partial,
    }


def nu_section(R: FrobeniusContext, max_e: int) -> dict:
    levels = []
    for e in range(1, max_e + 1):
        nu = nu_invariant(R, e)
        levels.append({"e": e, "q": R.q(e), "nu": nu, "cEstimate": rational(Fraction(nu, R.q(e)))})
    return {"levels": levels}


def ainv_section(I: Ideal) -> dict:
    ainv = a_invariants(I)
    return {"d": ainv.d, "values": [{"i": i, "a": ainv[i]} for i in range(ainv.d + 1)]}


def betti_section(I: Ideal) -> dict:
    bt = betti_table(free_resolution(I))
    cls = classify(I)
    return {
        "entries": [{"i": i, "j": j, "beta": v} for (i, j), v in sorted(bt.entries.items())],
        "pd": bt.pd,
        "reg": bt.reg,
        "dim": cls.dim,
        "depth": cls.depth,
        "type": cls.type,
        "cohenMacaulay": cls.is_cm,
        "gorenstein": cls.is_gorenstein,
        "diagram": bt.format(),
    }


def _gens(J: Ideal) -> List[str]:
    return [format_polynomial(g) for g in J.groebner_basis()]


def splitting_section(R: FrobeniusContext, max_e: int) -> dict:
    data = splitting_prime_estimate(R, max_e)
    return {
        "levels": [{"e": e, "ideal": _gens(J)} for e, J in sorted(data.levels.items())],
        "stabilized": data.stabilized_prime is not None,
        "stabilizedAt": data.stabilized_at,
        "prime": _gens(data.stabilized_prime) if data.stabilized_prime is not None else None,
        "sdim": data.sdim,
        "compatibleLevels": [{"e": e + 1, "compatible": c} for e, c in enumerate(data.compatible_levels)],
        "heuristic": data.heuristic,
    }


def compatibility_section(R: FrobeniusContext, J: Ideal, max_e: int) -> dict:
    levels = is_compatible(R, J, max_e)
    return {
        "ideal": [format_polynomial(g) for g in J.generators],
        "levels": [{"e": e + 1, "compatible": c} for e, c in enumerate(levels)],
        "compatibleUpTo": max_e if all(levels) else None,
    }


def sequence_section(R: FrobeniusContext, seed: int, max_e: int) -> dict:
    from .bertini import f_pure_sequence

    seq = f_pure_sequence(R, seed=seed, max_e=max_e)
    return {
        "forms": [format_polynomial(f) for f in seq.forms],
        "length": len(seq),
        "fpt": rational(seq.fpt),
        "aTop": seq.a_top,
        "steps": [
            {
                "step": k + 1,
                "form": format_polynomial(s.form),
                "witnessMonomial": list(s.witness_monomial),
                "nonzerodivisor": s.nonzerodivisor,
                "quotientFPure": s.quotient_f_pure,
                "aTop": s.a_top,
                "fptBefore": rational(s.fpt_before),
                "heuristic": s.heuristic,
            }
            for k, s in enumerate(seq.steps)
        ],
    }


def verification_section(rf: RingFile, max_e: int, budget: int) -> dict:
    from .verify import verify_ring

    res = verify_ring(rf.ideal, max_e, budget, rf.expect)
    return {
        "checks": [{"id": c.id, "name": c.name, "status": c.status, "detail": c.detail} for c in res.checks],
        "passed": res.passed,
    }


# -- dispatch ------------------------------------------------------------------

COMMANDS = ("check", "fpt", "nu", "ainv", "betti", "splitting", "compatible", "sequence", "verify")


def run_command(cmd: str, rf: RingFile, args) -> Tuple[dict, int]:
    """Build the report for one ring; returns (report, exit code)."""
    report = {"version": REPORT_VERSION, "command": cmd, "ring": ring_section(rf)}
    code = EXIT_OK
    if cmd in ("ainv", "betti"):
        if cmd == "ainv":
            report["aInvariants"] = ainv_section(rf.ideal)
        else:
            report["betti"] = betti_section(rf.ideal)
        return report, code
    if cmd == "verify":
        report["verification"] = verification_section(rf, args.emax, args.budget)
        return report, EXIT_OK if report["verification"]["passed"] else EXIT_INVARIANT
    R = FrobeniusContext(rf.ideal, args.budget)
    if cmd == "check":
        report["fpurity"] = fpurity_section(R)
        if not report["fpurity"]["fPure"]:
            code = EXIT_PRECONDITION
    elif cmd == "fpt":
        report["fpt"] = fpt_section(R, args.emax)
    elif cmd == "nu":
        report["nu"] = nu_section(R, args.emax)
    elif cmd == "splitting":
        report["splitting"] = splitting_section(R, args.emax)
    elif cmd == "compatible":
        if not args.ideal:
            raise ArgumentError("compatible needs --ideal")
        J = Ideal.parse(rf.ctx, args.ideal)
        report["compatibility"] = compatibility_section(R, J, args.emax)
    elif cmd == "sequence":
        report["sequence"] = sequence_section(R, args.seed, args.emax)
    return report, code


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(exc, InvariantViolation):
        return EXIT_INVARIANT
    if isinstance(exc, (PreconditionError, ArgumentError)):
        return EXIT_PRECONDITION
    return EXIT_INVARIANT


def _frac(d):
    return "none" if d is None else (str(d["num"]) if d["den"] == 1 else f"{d['num']}/{d['den']}")


def render_text(report: dict) -> str:
    """Human-readable rendering of a report."""
    if "entries" in report:
        return "\n\n".join(render_text(r) for r in report["entries"])
    ring = report["ring"]
    out = [f"{ring['name']}: F_{ring['p']}[{', '.join(ring['vars'])}] / ({', '.join(ring['gens'])})"]
    if "error" in report:
        out.append(f"  error: {report['error']['message']}")
    if "fpurity" in report:
        s = report["fpurity"]
        out.append(f"  F-pure (witness {s['witness']})" if s["fPure"] else "  not F-pure")
    if "fpt" in report:
        s = report["fpt"]
        for lv in s["levels"]:
            out.append(
                f"  e={lv['e']}: b={lv['b']} nu={lv['nu']} fptLower={_frac(lv['fptLower'])} c~{_frac(lv['cEstimate'])}"
            )
        out.append(f"  fpt in [{_frac(s['interval']['lower'])}, {_frac(s['interval']['upper'])}]")
        if s["gorensteinExact"] is not None:
            out.append(f"  Gorenstein: fpt = {_frac(s['gorensteinExact'])}")
    if "nu" in report:
        for lv in report["nu"]["levels"]:
            out.append(f"  e={lv['e']}: nu={lv['nu']} (nu/q = {_frac(lv['cEstimate'])})")
    if "aInvariants" in report:
        s = report["aInvariants"]
        vals = ", ".join(f"a_{v['i']}={'-inf' if v['a'] is None else v['a']}" for v in s["values"])
        out.append(f"  d={s['d']}: {vals}")
    if "betti" in report:
        s = report["betti"]
        out.append(s["diagram"])
        out.append(
            f"  pd={s['pd']} reg={s['reg']} dim={s['dim']} depth={s['depth']} type={s['type']}"
            f" CM={s['cohenMacaulay']} Gorenstein={s['gorenstein']}"
        )
    if "splitting" in report:
        s = report["splitting"]
        for lv in s["levels"]:
            out.append(f"  I_{lv['e']} = ({', '.join(lv['ideal'])})")
        if s["stabilized"]:
            out.append(f"  stabilized at e={s['stabilizedAt']}: P = ({', '.join(s['prime'])}), sdim={s['sdim']}")
        else:
            out.append("  no stabilization within the tested levels")
    if "compatibility" in report:
        s = report["compatibility"]
        for lv in s["levels"]:
            out.append(f"  e={lv['e']}: {'compatible' if lv['compatible'] else 'NOT compatible'}")
    if "sequence" in report:
        s = report["sequence"]
        out.append(f"  F-pure sequence of length {s['length']} (fpt = {_frac(s['fpt'])}): {s['forms']}")
        for st in s["steps"]:
            out.append(f"    step {st['step']}: {st['form']} a_top -> {st['aTop']}")
    if "verification" in report:
        for c in report["verification"]["checks"]:
            out.append(f"  {c['id']} {c['status'].upper():4} {c['name']}  {c['detail']}")
    return "\n".join(out)


def _run_one(cmd, spec, args):
    return run_command(cmd, load_ring(spec, args.order), args)


def _verify_entry(job):
    name, args = job
    rf = parse_ring_file(corpus_text(name), args.order)
    rf.name = rf.name or name
    return run_command("verify", rf, args)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fthresh", description="F-pure thresholds, a-invariants and related invariants.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("ring", nargs="?", help="ring file, or the name of a built-in corpus entry")
    ap.add_argument("--emax", type=int, default=2)
    ap.add_argument("--order", default=None, choices=("grevlex", "lex"))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    ap.add_argument("--ideal", help="comma-separated generators for 'compatible'")
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--corpus", action="store_true", help="with 'verify', run every built-in ring")
    ap.add_argument("--jobs", type=int, default=1)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.corpus:
            if args.command != "verify":
                raise ArgumentError("--corpus only applies to verify")
            jobs = [(name, args) for name in corpus_names()]
            if args.jobs > 1:
                with ProcessPoolExecutor(args.jobs) as pool:
                    results = list(pool.map(_verify_entry, jobs))
            else:
                results = [_verify_entry(j) for j in jobs]
            entries = [r for r, _ in results]
            passed = all(c == EXIT_OK for _, c in results)
            report = {"version": REPORT_VERSION, "command": "verify", "corpus": True, "entries": entries, "passed": passed}
            code = EXIT_OK if passed else EXIT_INVARIANT
        else:
            if not args.ring:
                raise ArgumentError("a ring file is required")
            report, code = _run_one(args.command, args.ring, args)
    except FThreshError as exc:
        code = exit_code_for(exc)
        if args.json:
            err = {"type": type(exc).__name__, "message": str(exc), "exitCode": code}
            print(json.dumps({"version": REPORT_VERSION, "command": args.command, "error": err}, indent=2))
        else:
            print(f"fthresh: {exc}", file=sys.stderr)
        return code
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
