"""Command-line front end.

Exit codes: 0 success, 1 domain diagnostic, 2 resource limit, 3 usage or
parse error.  With ``--json`` every invocation prints exactly one JSON
document ``{command, inputs, theta, result | error, diagnostics}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import arith, checks, fgh, hf, rsrank, rsyntax, terms
from .errors import DomainError, InvalidTerm, ParseError, PsiUndefined, ResourceError
from .syntax import parse_formula, parse_hf, parse_operand, parse_term
from .terms import BaseOrder, Diagnostic, format_term

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_USAGE = 0, 1, 2, 3

GLOBAL_DEFAULTS = {"theta": "0", "json": False, "seed": 0, "max_g": 2,
                   "budget_steps": 10**7, "budget_bits": 10**6}


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _global_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("global options")
    g.add_argument("--theta", default=argparse.SUPPRESS,
                   help="rank of the base set: a natural number or 'omega' (default 0)")
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="print one JSON document")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    g.add_argument("--max-g", type=int, default=argparse.SUPPRESS,
                   help="maximal term complexity for pools (default 2)")
    g.add_argument("--budget-steps", type=int, default=argparse.SUPPRESS,
                   help="fast-growing hierarchy step budget (default 10^7)")
    g.add_argument("--budget-bits", type=int, default=argparse.SUPPRESS,
                   help="fast-growing hierarchy bit-length budget (default 10^6)")


def build_parser() -> argparse.ArgumentParser:
    p = _ArgParser(prog="bhnotation",
                   description="Workbench for the relativised Bachmann-Howard notation system.")
    _global_flags(p)
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_ArgParser)

    def cmd(name, help_, *args):
        sp = sub.add_parser(name, help=help_, description=help_)
        _global_flags(sp)
        for a in args:
            sp.add_argument(a)
        return sp

    cmd("parse", "parse and validate an ordinal term", "term")
    cmd("cmp", "compare two terms", "a", "b")
    cmd("add", "ordinal sum a + b", "a", "b")
    cmd("natsum", "natural (Hessenberg) sum a # b", "a", "b")
    cmd("veblen", "normal form of phi(a, b)", "a", "b")
    cmd("psi", "normal form of psi(a)", "a")
    cmd("cnf", "additive parts of a term", "a")
    sp = cmd("k", "the K-set of a term", "a")
    sp = cmd("inb", "membership in B(eta), or in H_eta(empty) with --h", "a", "eta")
    sp.add_argument("--h", action="store_true", help="test a in H_eta(empty) = B(eta+1)")
    cmd("fs", "n-th element of the fundamental sequence", "alpha", "n")
    cmd("fgh", "fast-growing hierarchy F_alpha(n)", "alpha", "n")
    cmd("level", "level of an RS term", "term")
    sp = cmd("rank", "rank of an RS term or closed formula", "expr")
    sp.add_argument("--system", choices=("L", "P"), help="force the L- or P-system")
    sp = sub.add_parser("norm", help="norm of a formula or sequent",
                        description="norm of a sequent of closed L-system formulas")
    _global_flags(sp)
    sp.add_argument("formulas", nargs="*")
    sp = cmd("decompose", "pool-restricted decomposition of a formula", "formula")
    sp.add_argument("--pool", action="append", default=[],
                    help="extra index term (repeatable); the generator pool for --seed is always used")
    cmd("hf-tc", "transitive closure TC({x})", "set")
    cmd("hf-rank", "membership rank", "set")
    sp = cmd("hf-v", "stage V_alpha(x) of the von Neumann hierarchy over x", "set", "alpha")
    sp.add_argument("--cumulative", action="store_true")
    sp.add_argument("--cap", type=int, default=hf.DEFAULT_CAP)
    sp = cmd("hf-eval", "truth of a bounded formula over a finite universe", "formula")
    sp.add_argument("--universe", default="{}", help="x: the universe is TC({x}) (default {})")
    sp.add_argument("--stage", type=int, help="use V_stage(x) as the universe instead")
    sp.add_argument("--let", action="append", default=[], metavar="VAR=SET",
                    help="assign a free variable (repeatable)")
    sp = sub.add_parser("enumerate", help="enumerate normal forms",
                        description="all normal forms up to --max-g, sorted")
    _global_flags(sp)
    sp.add_argument("--max-gamma", type=int, help="largest Gamma index (default theta)")
    sp.add_argument("--max-sum-len", type=int, default=3)
    sp.add_argument("--max-pool", type=int, default=10**6)
    sp = cmd("check", "run a property suite")
    sp.add_argument("suite", choices=checks.SUITES + ("all",))
    sp.add_argument("--samples", type=int, help="sample count for sampled properties")
    return p


# -- helpers -------------------------------------------------------------------------

def _base(theta: str) -> BaseOrder:
    if str(theta).lower() == "omega":
        return BaseOrder.omega()
    try:
        n = int(theta)
    except ValueError:
        raise UsageError(f"--theta must be a natural number or 'omega', got {theta!r}") from None
    if n < 0:
        raise UsageError("--theta must be a natural number")
    return BaseOrder.finite(n)


def _nat(text: str, what: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"{what} must be a natural number, got {text!r}") from None
    if n < 0:
        raise UsageError(f"{what} must be a natural number, got {text!r}")
    return n


class Ctx:
    def __init__(self, args):
        self.args = args
        self.base = _base(args.theta)
        self.diagnostics: List[dict] = []

    def term(self, text: str) -> terms.Term:
        raw = parse_term(text)
        r = terms.validate(raw, self.base)
        if isinstance(r, Diagnostic):
            raise InvalidTerm(r)
        return r

    def budget(self) -> fgh.Budget:
        try:
            return fgh.Budget(self.args.budget_steps, self.args.budget_bits)
        except ValueError as e:
            raise UsageError(str(e)) from None


def _diag(d: Diagnostic) -> dict:
    return {"rule": d.rule, "message": d.message, "subterm": format_term(d.subterm)}


def _t(t) -> str:
    return format_term(t)


def _expr(text: str, base: BaseOrder):
    """A closed formula or an RS term."""
    try:
        return parse_formula(text, base)
    except ParseError as first:
        try:
            return parse_operand(text, base)
        except ParseError:
            raise first from None


def _check_closed(x, base: BaseOrder):
    if isinstance(x, rsyntax.Var):
        raise rsrank.IllFormed(f"free variable {x.name} where a closed term is required")
    if isinstance(x, (rsyntax.UBar, rsyntax.LStage, rsyntax.VStage, rsyntax.FreeVar, rsyntax.Sep)):
        rsrank.check_term(x, base)
        return
    fv = rsyntax.free_vars(x)
    if fv:
        raise rsrank.IllFormed(f"formula has free variables {sorted(fv)}")
    for t in rsyntax.operands(x):
        if not isinstance(t, rsyntax.Var):
            rsrank.check_term(t, base)


def _system(x, forced: Optional[str]) -> str:
    if forced:
        return forced
    if isinstance(x, (rsyntax.UBar, rsyntax.LStage, rsyntax.VStage, rsyntax.FreeVar, rsyntax.Sep)):
        systems = rsyntax.system_of_term(x)
    else:
        systems = rsyntax.system_of(x)
    if not systems:
        raise rsrank.IllFormed("expression mixes L-system and P-system syntax")
    return "L" if "L" in systems else "P"


# -- commands -------------------------------------------------------------------------

def _run(ctx: Ctx):
    a = ctx.args
    c = a.command
    if c == "parse":
        t = ctx.term(a.term)
        return {"term": _t(t), "sugar": format_term(t, sugar=True),
                "complexity": terms.complexity(t)}, {"term": a.term}
    if c == "cmp":
        return str(terms.compare(ctx.term(a.a), ctx.term(a.b))), {"a": a.a, "b": a.b}
    if c in ("add", "natsum", "veblen"):
        x, y = ctx.term(a.a), ctx.term(a.b)
        fn = {"add": arith.add, "natsum": arith.natural_sum, "veblen": arith.veblen}[c]
        return _t(fn(x, y)), {"a": a.a, "b": a.b}
    if c == "psi":
        return _t(arith.psi(ctx.term(a.a))), {"a": a.a}
    if c == "cnf":
        return [_t(p) for p in arith.cnf(ctx.term(a.a))], {"a": a.a}
    if c == "k":
        return [_t(p) for p in terms.sort_terms(terms.k_set(ctx.term(a.a)))], {"a": a.a}
    if c == "inb":
        x, eta = ctx.term(a.a), ctx.term(a.eta)
        fn = terms.in_H_eta if a.h else terms.in_B
        return fn(x, eta), {"a": a.a, "eta": a.eta, "h": a.h}
    if c == "fs":
        alpha, n = ctx.term(a.alpha), _nat(a.n, "n")
        return _t(fgh.fundamental_sequence(alpha, n)), {"alpha": a.alpha, "n": n}
    if c == "fgh":
        alpha, n = ctx.term(a.alpha), _nat(a.n, "n")
        return str(fgh.fgh_eval(alpha, n, ctx.budget())), {"alpha": a.alpha, "n": n}
    if c == "level":
        t = parse_operand(a.term, ctx.base)
        _check_closed(t, ctx.base)
        return _t(rsrank.level(t, ctx.base)), {"term": a.term}
    if c == "rank":
        x = _expr(a.expr, ctx.base)
        _check_closed(x, ctx.base)
        system = _system(x, a.system)
        r = rsrank.rank_L(x) if system == "L" else rsrank.rank_P(x)
        return {"rank": _t(r), "system": system}, {"expr": a.expr, "system": a.system}
    if c == "norm":
        fs = [parse_formula(s, ctx.base) for s in a.formulas]
        for f in fs:
            _check_closed(f, ctx.base)
        return _t(rsrank.norm_sequent(fs)), {"formulas": list(a.formulas)}
    if c == "decompose":
        f = parse_formula(a.formula, ctx.base)
        _check_closed(f, ctx.base)
        x = hf.hf_from_nat(ctx.base.theta if ctx.base.theta is not None else 2)
        pool = list(rsrank.FormulaGenerator(seed=a.seed, x=x).pool)
        for s in a.pool:
            t = parse_operand(s, ctx.base)
            _check_closed(t, ctx.base)
            if t not in pool:
                pool.append(t)
        comps = rsrank.decompose(f, pool)
        kind = "and" if isinstance(f, (rsyntax.NotIn, rsyntax.BAll, rsyntax.All, rsyntax.And)) else "or"
        return {"kind": kind, "pool_size": len(pool),
                "components": [{"index": str(i), "formula": str(g)} for i, g in comps]}, \
            {"formula": a.formula, "pool": list(a.pool)}
    if c == "hf-tc":
        x = parse_hf(a.set)
        u = hf.transitive_closure(x)
        return {"size": len(u), "elements": [str(e) for e in u], "graph": u.to_json()}, {"set": a.set}
    if c == "hf-rank":
        return hf.set_rank(parse_hf(a.set)), {"set": a.set}
    if c == "hf-v":
        x = parse_hf(a.set)
        alpha = _nat(a.alpha, "alpha")
        u = hf.v_stage(x, alpha, cap=a.cap, cumulative=a.cumulative)
        return {"size": len(u), "elements": [str(e) for e in u] if len(u) <= 64 else None}, \
            {"set": a.set, "alpha": alpha, "cumulative": a.cumulative}
    if c == "hf-eval":
        f = parse_formula(a.formula, ctx.base)
        x = parse_hf(a.universe)
        m = hf.v_stage(x, a.stage) if a.stage is not None else hf.transitive_closure(x)
        env = {}
        for binding in a.let:
            name, sep, lit = binding.partition("=")
            if not sep or not name.strip():
                raise UsageError(f"--let expects VAR=SET, got {binding!r}")
            env[name.strip()] = parse_hf(lit)
        return hf.eval_formula(m, f, env), {"formula": a.formula, "universe": a.universe,
                                            "stage": a.stage, "let": list(a.let)}
    if c == "enumerate":
        mg = a.max_gamma if a.max_gamma is not None else (
            ctx.base.theta if ctx.base.theta is not None else 2)
        pool = terms.enumerate_terms(ctx.base, a.max_g, mg, max_sum_len=a.max_sum_len,
                                     max_pool=a.max_pool)
        return [_t(t) for t in pool], {"max_g": a.max_g, "max_gamma": mg,
                                       "max_sum_len": a.max_sum_len}
    if c == "check":
        budget = fgh.Budget(min(a.budget_steps, 10**5), min(a.budget_bits, 10**4))
        reports = checks.run_suite(a.suite, ctx.base, a.max_g, seed=a.seed,
                                   budget=budget, samples=a.samples)
        ctx.check_failed = not all(r.ok for r in reports)
        return [r.to_json() for r in reports], {"suite": a.suite, "samples": a.samples,
                                                "max_g": a.max_g, "seed": a.seed}
    raise UsageError(f"unknown command {c!r}")


def _text(result) -> str:
    if isinstance(result, bool):
        return "true" if result else "false"
    if isinstance(result, list):
        if result and isinstance(result[0], dict) and "suite" in result[0]:
            return "\n".join(line for r in result for line in _report_lines(r))
        return "\n".join(str(x) for x in result)
    if isinstance(result, dict):
        if "components" in result:
            head = f"{result['kind']} over {len(result['components'])} components"
            return "\n".join([head] + [f"[{c['index']}] {c['formula']}" for c in result["components"]])
        if "graph" in result:
            return "\n".join(result["elements"])
        if "rank" in result:
            return result["rank"]
        if "term" in result:
            return result["term"]
        if "size" in result:
            lines = [f"size {result['size']}"]
            if result.get("elements"):
                lines += result["elements"]
            return "\n".join(lines)
    return str(result)


def _report_lines(r: dict) -> List[str]:
    out = [f"suite {r['suite']}: {'ok' if r['ok'] else 'FAILED'}"]
    out += [f"  {k}: {v}" for k, v in r["info"].items()]
    for p in r["properties"]:
        out.append(f"  {p['name']}: {p['trials']} trials, {p['failures']} failures")
        out += [f"    counterexample: {ex}" for ex in p["counterexamples"]]
    return out


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    doc = {"command": None, "inputs": {}, "theta": None, "diagnostics": []}
    try:
        args = build_parser().parse_args(argv)
        for k, v in GLOBAL_DEFAULTS.items():
            if not hasattr(args, k):
                setattr(args, k, v)
        if args.command is None:
            raise UsageError("no command given (see --help)")
        doc["command"] = args.command
        ctx = Ctx(args)
        doc["theta"] = str(ctx.base)
        result, inputs = _run(ctx)
        doc["inputs"] = inputs
        doc["result"] = result
        doc["diagnostics"] = ctx.diagnostics
        code = EXIT_DOMAIN if getattr(ctx, "check_failed", False) else EXIT_OK
        if want_json:
            out.write(json.dumps(doc, sort_keys=True) + "\n")
        else:
            out.write(_text(result) + "\n")
        return code
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except Exception as e:  # classified below; anything else is a bug and re-raised
        exc = e
    if isinstance(exc, (UsageError, ParseError)):
        code, kind = EXIT_USAGE, "usage" if isinstance(exc, UsageError) else "parse"
    elif isinstance(exc, DomainError):
        code, kind = EXIT_DOMAIN, "domain"
        if isinstance(exc, InvalidTerm):
            doc["diagnostics"] = [_diag(exc.diagnostic)]
        elif isinstance(exc, PsiUndefined):
            doc["diagnostics"] = [{"rule": "psi condition",
                                   "message": f"{_t(exc.witness)} in K is not below the argument",
                                   "subterm": _t(exc.arg)}]
    elif isinstance(exc, ResourceError):
        code, kind = EXIT_RESOURCE, "resource"
    elif isinstance(exc, ValueError):
        code, kind = EXIT_USAGE, "usage"
    else:
        raise exc
    e = exc
    if not doc["inputs"]:
        doc["inputs"] = {"argv": [x for x in argv if x != "--json"]}
    doc["error"] = {"kind": kind, "type": type(e).__name__, "message": str(e)}
    if want_json:
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        err.write(f"error ({kind}): {e}\n")
        for d in doc["diagnostics"]:
            if d["rule"] in str(e):
                continue
            err.write(f"  {d['rule']}: {d['message']} in {d['subterm']}\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
