"""Command-line front end.

    monideal classify "x^3, x^2*y^8, x*y^15, y^21" --json
    monideal rees "x^3, x^2y, xy^4, y^10"
    monideal scan --n 5 --emax 7

Exit codes: 0 success, 1 usage or resource error, 2 a mathematical
inconsistency (two routes that must agree did not).
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .core import MonomialIdeal, Staircase, monomial_str, to_staircase, variable_names
from .errors import MonomialIdealError, ResourceExceeded
from .fullness import is_m_full, m_full_closure, tight_factorization
from .normality import classify
from .polyalg import Limits, Polynomial
from .polyhedra import (
    LatticePolytope2,
    boundary_points,
    integer_rounding_check,
    integral_closure,
    lattice_points,
    newton_polytope,
    normal_up_to,
    pick_area,
    pick_check,
    rounding_violation_search,
)

SCHEMA = 1


# -- parsing --------------------------------------------------------------

class ParseError(MonomialIdealError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        c = text[pos]
        if c in ",*^-":
            yield c, c, pos
            pos += 1
        elif c.isdigit():
            m = re.match(r"\d+", text[pos:])
            yield "num", int(m.group()), pos
            pos += m.end()
        elif c.isalpha():
            m = re.match(r"[A-Za-z]\d*", text[pos:])
            yield "var", m.group(), pos
            pos += m.end()
        else:
            raise ParseError(f"unexpected character {c!r}", pos)
    yield "end", None, len(text)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``x^3, x^2*y^8, xy^15`` style input; ``x1..xd`` name d > 2 variables."""
    toks = list(_tokens(text))
    monos = []
    i = 0

    def expect_factor_start(kind, pos):
        if kind not in ("var", "num"):
            raise ParseError("expected a variable or 1", pos)

    while True:
        kind, val, pos = toks[i]
        expect_factor_start(kind, pos)
        mono = []
        while True:
            kind, val, pos = toks[i]
            if kind == "num":
                if val != 1:
                    raise ParseError(f"coefficient {val} is not allowed", pos)
                mono.append(("1", 0, pos))
                i += 1
            elif kind == "var":
                i += 1
                exp = 1
                if toks[i][0] == "^":
                    i += 1
                    k2, v2, p2 = toks[i]
                    if k2 == "-":
                        raise ParseError("negative exponent", p2)
                    if k2 != "num":
                        raise ParseError("expected an exponent after '^'", p2)
                    exp = v2
                    i += 1
                mono.append((val, exp, pos))
            else:
                raise ParseError("expected a variable or 1", pos)
            kind = toks[i][0]
            if kind == "*":
                i += 1
                continue
            if kind == "var":
                continue
            break
        monos.append(mono)
        kind, _, pos = toks[i]
        if kind == "end":
            break
        if kind != ",":
            raise ParseError("expected ',' or end of input", pos)
        i += 1

    names = {name for mono in monos for name, _, _ in mono if name != "1"}
    indexed = {n for n in names if len(n) > 1}
    plain = names - indexed
    for mono in monos:
        for name, _, pos in mono:
            if name == "1":
                continue
            if name not in ("x", "y") and not re.fullmatch(r"x[1-9]\d*", name):
                raise ParseError(f"unknown variable {name!r}", pos)
            if indexed and plain:
                raise ParseError("mixing x, y with indexed variables", pos)
    if indexed:
        dim = max(3, max(int(n[1:]) for n in indexed))
        index = {f"x{k}": k - 1 for k in range(1, dim + 1)}
    else:
        dim, index = 2, {"x": 0, "y": 1}
    gens = []
    for mono in monos:
        v = [0] * dim
        for name, exp, _ in mono:
            if name != "1":
                v[index[name]] += exp
        gens.append(v)
    return MonomialIdeal(dim, gens)


def format_ideal(I: MonomialIdeal) -> str:
    names = variable_names(I.dim)
    return ", ".join(monomial_str(g, names) for g in I.gens)


# -- JSON -----------------------------------------------------------------

def to_jsonable(obj):
    """Exact, float-free conversion: Fractions become "p/q" (integers stay ints)."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise TypeError("floating point value in a report")
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, MonomialIdeal):
        return {"dim": obj.dim, "generators": [list(g) for g in obj.gens], "text": format_ideal(obj)}
    if isinstance(obj, Staircase):
        return {"a": list(obj.a), "b": list(obj.b)}
    if isinstance(obj, Polynomial):
        return str(obj)
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(report: dict, compact: bool = False) -> str:
    report = dict(report, schema=SCHEMA)
    if compact:
        return json.dumps(to_jsonable(report), sort_keys=True, separators=(",", ":"))
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2)


# -- sections -------------------------------------------------------------

def _staircase_or_none(I: MonomialIdeal):
    try:
        return to_staircase(I)
    except MonomialIdealError:
        return None


def closure_section(I: MonomialIdeal) -> dict:
    out = {"integral_closure": integral_closure(I)}
    Q = newton_polytope(I)
    if Q.chain is not None:
        out["newton_vertices"] = [list(p) for p in Q.chain]
    else:
        out["newton_facets"] = [{"normal": list(n), "rhs": r} for n, r in Q.facets()]
    if I.dim == 2:
        trace = []
        out["m_full_closure"] = m_full_closure(I, trace=trace)
        out["m_full_steps"] = len(trace) - 1
    return out


def mfull_section(S: Staircase) -> dict:
    v = is_m_full(S)
    out = {"verdict": v}
    if v.is_m_full:
        X, Y = tight_factorization(S)
        out["x_tight_factor"], out["y_tight_factor"] = X, Y
    return out


def _report(rep) -> dict:
    return {"checks": rep.checks, "overall_necessary": rep.overall_necessary,
            "overall_sufficient": rep.overall_sufficient, "k": rep.k}


def normal_section(I: MonomialIdeal, power_bound: int) -> dict:
    S = _staircase_or_none(I)
    if S is None:
        ok, first = normal_up_to(I, power_bound)
        return {"normal_up_to_power": power_bound, "normal": ok, "first_failing_power": first}
    c = classify(S)
    return {"normal": c.normal, "necessary": _report(c.necessary), "sufficient": _report(c.sufficient),
            "consistency": c.consistency}


def rees_section(S: Staircase, args) -> dict:
    from .rees import fiber_hilbert, rees_presentation, reduction_number_probe

    limits = Limits(args.max_basis, args.max_degree)
    pres = rees_presentation(S, limits=limits)
    probe = reduction_number_probe(S, trials=args.trials, seed=args.seed)
    out = {
        "phi": pres.phi.as_lists(),
        "content": [pres.dual.r, pres.dual.s],
        "B": [[str(p) for p in row] for row in pres.dual.B],
        "B0": [[str(p) for p in row] for row in pres.dual.B0],
        "linear": pres.linear,
        "quadrics": pres.quadrics,
        "extra_generators": pres.extra_generators,
        "groebner": {k: list(G.basis) for k, G in sorted(pres.ideals.items())},
        "routes_agree": pres.routes_agree,
        "quadrics_in_ideal": pres.quadrics_in_ideal,
        "generated_in_degree_two": pres.generated_in_degree_two,
        "expected_equations": pres.expected,
        "fiber_hilbert": fiber_hilbert(S, args.fiber_degree),
        "reduction": probe,
    }
    bad = []
    if pres.routes_agree is False and (pres.expected.cm_hypothesis == "verified" or probe.verdict == "atMostOne"):
        bad.append("colon and elimination routes differ although R[It] is Cohen-Macaulay")
    if pres.expected.routes_agree is False:
        bad.append("minor and height criteria for expected equations disagree")
    if pres.quadrics_in_ideal is False:
        bad.append("T.phi or I_2(B) not contained in the defining ideal")
    out["violations"] = bad
    return out


def pick_section(I: MonomialIdeal) -> dict:
    if I.dim != 2:
        raise MonomialIdealError("pick works on two-variable ideals")
    S = to_staircase(I)
    polys = [("region", [(0, 0)] + list(S.gens))]
    pts = S.gens
    for i in range(len(pts) - 2):
        polys.append((f"triangle_{i + 1}", list(pts[i:i + 3])))
    out = []
    for name, points in polys:
        try:
            P = LatticePolytope2.hull(points)
        except MonomialIdealError as e:
            out.append({"name": name, "skipped": str(e)})
            continue
        total, bnd = lattice_points(P), boundary_points(P)
        out.append({"name": name, "vertices": [list(v) for v in P.vertices], "area": pick_area(P),
                    "lattice_points": total, "boundary": bnd, "interior": total - bnd,
                    "pick_holds": pick_check(P)})
    return {"polygons": out}


def irp_section(I: MonomialIdeal, args) -> dict:
    if args.search:
        v = rounding_violation_search(I, args.wbox)
    else:
        v = integer_rounding_check(I, args.wbox)
    return {"verdict": v}


def classify_report(I: MonomialIdeal, args, rees: bool = True) -> dict:
    out = {"input": I}
    S = _staircase_or_none(I)
    out["closure"] = closure_section(I)
    out["normal"] = normal_section(I, args.power_bound)
    if S is not None:
        out["mfull"] = mfull_section(S)
        out["staircase"] = S
        if rees:
            out["rees"] = rees_section(S, args)
    return out


def _violations(report: dict) -> list[str]:
    bad = [k for k, ok in report.get("normal", {}).get("consistency", {}).items() if not ok]
    bad += report.get("rees", {}).get("violations", []) if isinstance(report.get("rees"), dict) else []
    bad += report.get("violations", [])
    return bad


# -- scan ------------------------------------------------------------------

def staircase_family(nmax: int, emax: int):
    """All staircases with 2 <= n <= nmax and a_1, b_1 <= emax, in a fixed order."""
    for n in range(2, nmax + 1):
        for a in itertools.combinations(range(emax, 0, -1), n - 1):
            for b in itertools.combinations(range(emax, 0, -1), n - 1):
                yield Staircase(a + (0,), b + (0,))


def _scan_one(S: Staircase):
    c = classify(S)
    return {
        "input": S.ideal,
        "m_full": c.m_full.is_m_full,
        "normal": c.normal,
        "necessary": c.necessary.overall_necessary,
        "sufficient": c.sufficient.overall_sufficient,
        "consistency": c.consistency,
    }


def run_scan(nmax: int, emax: int, workers=None):
    family = list(staircase_family(nmax, emax))
    if workers == 1:
        yield from map(_scan_one, family)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_scan_one, family, chunksize=32)


# -- main -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monideal", description="Monomial ideals in k[x,y]: closures, normality, Rees algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, ideal=True):
        if ideal:
            sp.add_argument("ideal", help='generators, e.g. "x^3, x^2*y^8, x*y^15, y^21"')
        sp.add_argument("--json", action="store_true", help="canonical JSON output")
        sp.add_argument("--out", help="also write the JSON report to this file")
        sp.add_argument("--power-bound", type=int, default=3, help="powers checked for normality when d >= 3")
        sp.add_argument("--wbox", type=int, default=8, help="integer rounding box side")
        sp.add_argument("--search", action="store_true", help="irp: grow the box up to --wbox until a violation appears")
        sp.add_argument("--seed", type=int, default=7)
        sp.add_argument("--trials", type=int, default=5)
        sp.add_argument("--fiber-degree", type=int, default=5)
        sp.add_argument("--max-basis", type=int, default=Limits.max_basis)
        sp.add_argument("--max-degree", type=int, default=Limits.max_degree)

    for name, text in [("closure", "integral and m-full closures"), ("mfull", "m-fullness and tight factorization"),
                       ("normal", "normality verdict and condition suites"), ("rees", "Rees algebra equations"),
                       ("pick", "Pick's formula on the staircase region"), ("irp", "integer rounding property"),
                       ("classify", "all of the above")]:
        common(sub.add_parser(name, help=text))
    sp = sub.add_parser("scan", help="classify every staircase with n <= N, exponents <= E")
    common(sp, ideal=False)
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--emax", type=int, default=6)
    sp.add_argument("--workers", type=int, default=None)
    return p


def _print_human(report: dict, indent: str = ""):
    for key in sorted(report):
        val = to_jsonable(report[key])
        if isinstance(val, dict) and not ("generators" in val and "text" in val):
            print(f"{indent}{key}:")
            _print_human(val, indent + "  ")
        elif isinstance(val, dict):
            print(f"{indent}{key}: ({val['text']})")
        else:
            print(f"{indent}{key}: {json.dumps(val, sort_keys=True)}")


def _emit(report: dict, args):
    text = dumps(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    else:
        _print_human(report)


def _scan(args) -> int:
    witnesses = violations = count = 0
    lines = []
    for rec in run_scan(args.n, args.emax, args.workers):
        count += 1
        bad = [k for k, ok in rec["consistency"].items() if not ok]
        violations += bool(bad)
        if rec["necessary"] and not rec["normal"]:
            witnesses += 1
        line = dumps(rec, compact=True)
        lines.append(line)
        if args.json:
            print(line)
        elif bad or (rec["necessary"] and not rec["normal"]):
            tag = "VIOLATION " + ",".join(bad) if bad else "necessary-pass, not normal"
            print(f"({format_ideal(rec['input'])})  {tag}")
    summary = {"scanned": count, "violations": violations, "necessary_pass_not_normal": witnesses,
               "n": args.n, "emax": args.emax}
    print(dumps({"summary": summary}, compact=True) if args.json else
          f"scanned {count}, violations {violations}, necessary-pass non-normal {witnesses}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines + [dumps({"summary": summary}, compact=True)]) + "\n")
    return 2 if violations else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "scan":
            return _scan(args)
        I = parse_ideal(args.ideal)
        report = {"input": I}
        if args.command == "closure":
            report["closure"] = closure_section(I)
        elif args.command == "mfull":
            report["mfull"] = mfull_section(to_staircase(I))
        elif args.command == "normal":
            report["normal"] = normal_section(I, args.power_bound)
        elif args.command == "rees":
            report["rees"] = rees_section(to_staircase(I), args)
        elif args.command == "pick":
            report["pick"] = pick_section(I)
        elif args.command == "irp":
            report["irp"] = irp_section(I, args)
        elif args.command == "classify":
            report = classify_report(I, args)
        _emit(report, args)
        return 2 if _violations(report) else 0
    except AssertionError as e:
        print(f"inconsistency: {e}", file=sys.stderr)
        return 2
    except (MonomialIdealError, ResourceExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
