"""Command-line interface.

Exit codes: 0 success, 2 invalid design or input, 3 timeout, 4 budget exceeded.
A design argument is either a path to a design file or a built-in name
(see ``designdom gen --help``).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import campaigns
from .bounds import full_report
from .constructors import (
    BUILTINS,
    PRESETS,
    affine_plane_9,
    builtin,
    cyclic_preset,
    fano,
    fixture_8_4_3,
    projective_plane,
    sts_bose,
)
from .design import DesignParams, classify, complement, derived, double, dual, residual
from .errors import BudgetExceeded, DesignError
from .exact import beta_exact, gamma_bnb, tau_exact
from .fileformat import format_design, load_design
from .graph import IncidenceGraph
from .neatness import find_pasch, pasch_trade
from .report import Report, analyze, emit_report

log = logging.getLogger("designdom")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_TIMEOUT = 3
EXIT_BUDGET = 4

TIMEOUT_ENV = "DESIGNDOM_TIMEOUT"


def resolve_design(ref: str):
    if Path(ref).exists():
        return load_design(ref)
    if ref in BUILTINS:
        return builtin(ref)
    raise DesignError(f"{ref!r} is neither a file nor a built-in design ({', '.join(sorted(BUILTINS))})")


def _default_timeout() -> float:
    raw = os.environ.get(TIMEOUT_ENV)
    if raw:
        try:
            return float(raw)
        except ValueError:
            log.warning("ignoring non-numeric %s=%r", TIMEOUT_ENV, raw)
    return 60.0


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--timeout", type=float, default=None,
                   help=f"seconds per exact solve (default ${TIMEOUT_ENV} or 60)")
    p.add_argument("--budget", type=int, default=None, help="node budget for searches")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")


# -- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "fano":
        d = fano()
    elif kind == "pg":
        d = projective_plane(args.q)
    elif kind == "ag9":
        d = affine_plane_9()
    elif kind == "sts-bose":
        d = sts_bose(args.v)
    elif kind == "cyclic":
        d = cyclic_preset(args.preset)
    elif kind == "fixture-843":
        d = fixture_8_4_3()
    else:
        src = resolve_design(args.design)
        if kind == "double":
            d = double(src)
        elif kind == "complement":
            d = complement(src)
        elif kind == "dual":
            d = dual(src)
        elif kind == "residual":
            d = residual(src, args.block - 1)
        else:
            d = derived(src, args.block - 1)
    _write(args, format_design(d))
    return EXIT_OK


# -- analysis commands -------------------------------------------------------


def _emit(args, rep: Report) -> None:
    _write(args, emit_report(rep, args.format))


def cmd_check(args) -> int:
    d = resolve_design(args.design)
    cls = classify(d)
    info = {
        "design": args.design, "v": d.v, "k": d.k, "lambda": d.lam, "b": d.b, "r": d.r,
        "simple": cls.is_simple, "steiner": cls.is_steiner,
        "symmetric": cls.is_symmetric, "sts": cls.is_sts, "valid": True,
    }
    if args.format == "json":
        _write(args, json.dumps(info, indent=2) + "\n")
    else:
        _write(args, "".join(f"{k}: {v}\n" for k, v in info.items()))
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.params:
        p = DesignParams.from_vkl(*args.params)
        rep = full_report(p)
        if args.tau is not None or args.beta is not None:
            rep = full_report(p, tau=args.tau, beta=args.beta)
        if args.format == "json":
            _write(args, json.dumps(rep.to_dict(), indent=2) + "\n")
        else:
            lines = [f"{b.name:<16} lower {b.value:>6}  {b.note}" for b in rep.lower]
            lines += [f"{b.name:<16} upper {b.value:>6}  {b.note}" for b in rep.upper]
            lines.append(f"best: [{rep.best_lower}, {rep.best_upper}]")
            lines.append(f"fractional domination number: {rep.fractional}")
            _write(args, "\n".join(lines) + "\n")
        return EXIT_OK
    if not args.design:
        raise DesignError("bounds needs a design or --params v k lambda")
    d = resolve_design(args.design)
    rep = analyze(d, source=args.design)
    if args.tau is not None or args.beta is not None:
        rep.bounds = full_report(d, tau=args.tau, beta=args.beta)
    _emit(args, rep)
    return EXIT_OK


def cmd_gamma(args) -> int:
    d = resolve_design(args.design)
    g = IncidenceGraph(d)
    rep = Report(args.design, d, full_report(d, graph=g))
    res = gamma_bnb(g, time_limit=args.timeout, node_budget=args.budget)
    rep.solves["gamma"] = res
    _emit(args, rep)
    return EXIT_OK if res.optimal else EXIT_TIMEOUT


def cmd_tau(args) -> int:
    d = resolve_design(args.design)
    tau = tau_exact(d, time_limit=args.timeout)
    beta = beta_exact(d, time_limit=args.timeout, check_tau=False)
    rep = Report(args.design, d, full_report(d))
    if tau.optimal and beta.optimal:
        rep.bounds = full_report(d, tau=tau.value, beta=beta.value)
    rep.solves["tau"] = tau
    rep.solves["beta"] = beta
    _emit(args, rep)
    return EXIT_OK if tau.optimal and beta.optimal else EXIT_TIMEOUT


def cmd_analyze(args) -> int:
    d = resolve_design(args.design)
    rep = analyze(d, source=args.design, exact=args.exact, enumerate_sets=args.enumerate,
                  neat=args.neat, timeout=args.timeout, budget=args.budget)
    _emit(args, rep)
    return EXIT_TIMEOUT if rep.timed_out else EXIT_OK


def cmd_neat(args) -> int:
    args.exact = args.enumerate = args.neat = True
    return cmd_analyze(args)


def cmd_pasch(args) -> int:
    d = resolve_design(args.design)
    configs = find_pasch(d)
    if args.trade is not None:
        if not 1 <= args.trade <= len(configs):
            raise DesignError(f"--trade must be in 1..{len(configs)}")
        _write(args, format_design(pasch_trade(d, configs[args.trade - 1])))
        return EXIT_OK
    if args.format == "json":
        _write(args, json.dumps({"design": args.design, "count": len(configs),
                                 "configurations": [c.to_dict() for c in configs]}, indent=2) + "\n")
    else:
        lines = [f"{len(configs)} Pasch configurations"]
        for i, c in enumerate(configs, 1):
            lines.append(f"{i}: points {[x + 1 for x in c.points]} blocks {[j + 1 for j in c.blocks]}")
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    t = args.timeout
    designs = [resolve_design(s) for s in args.inputs]
    name = args.campaign
    if name == "sts-uniform":
        verdicts = [campaigns.sts_uniform(designs, timeout=t)]
    elif name == "pasch":
        verdicts = [v for d in designs for v in campaigns.pasch(d, timeout=t, trades=args.trades)]
    elif name == "projective":
        qs = args.q or [2]
        verdicts = [v for q in qs for v in campaigns.projective(q, timeout=t)]
    elif name == "biplane":
        verdicts = [campaigns.biplane(d, timeout=t) for d in designs]
    elif name == "residual":
        verdicts = [v for d in designs for v in campaigns.residual_campaign(d, timeout=t)]
    else:
        verdicts = campaigns.simple_neat(designs, timeout=t)
    if args.format == "json":
        _write(args, json.dumps({"campaign": name, "verdicts": [v.to_dict() for v in verdicts]},
                                indent=2, sort_keys=True) + "\n")
    else:
        lines = []
        for v in verdicts:
            lines.append(f"[{v.verdict}] {v.claim}")
            for key, val in v.evidence.items():
                lines.append(f"    {key}: {val}")
        _write(args, "\n".join(lines) + "\n")
    if any(v.verdict == campaigns.NOT_COMPUTED and "note" not in v.evidence for v in verdicts):
        return EXIT_TIMEOUT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="designdom", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a built-in or transformed design file")
    gsub = gen.add_subparsers(dest="kind", required=True)
    for kind in ("fano", "ag9", "fixture-843"):
        gsub.add_parser(kind).add_argument("--out")
    p = gsub.add_parser("pg")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out")
    p = gsub.add_parser("sts-bose")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--out")
    p = gsub.add_parser("cyclic")
    p.add_argument("--preset", choices=sorted(PRESETS), required=True)
    p.add_argument("--out")
    for kind in ("double", "complement", "dual", "residual", "derived"):
        p = gsub.add_parser(kind)
        p.add_argument("design")
        if kind in ("residual", "derived"):
            p.add_argument("--block", type=int, default=1, help="1-based block index")
        p.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="validate a design")
    p.add_argument("design")
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="bound ladder for gamma")
    p.add_argument("design", nargs="?")
    p.add_argument("--params", type=int, nargs=3, metavar=("V", "K", "LAMBDA"))
    p.add_argument("--tau", type=int)
    p.add_argument("--beta", type=int)
    _common(p)
    p.set_defaults(func=cmd_bounds)

    for name, func, helptext in (("gamma", cmd_gamma, "exact domination number"),
                                 ("tau", cmd_tau, "exact transversal and independence numbers")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("design")
        _common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("analyze", help="bounds plus optional exact values and neatness")
    p.add_argument("design")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--neat", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("neat", help="neat / super-neat classification")
    p.add_argument("design")
    _common(p)
    p.set_defaults(func=cmd_neat)

    p = sub.add_parser("pasch", help="list Pasch configurations or apply a trade")
    p.add_argument("design")
    p.add_argument("--trade", type=int, help="1-based configuration to trade; writes the new design")
    _common(p)
    p.set_defaults(func=cmd_pasch)

    p = sub.add_parser("verify", help="run a conjecture campaign")
    p.add_argument("campaign", choices=campaigns.CAMPAIGNS)
    p.add_argument("inputs", nargs="*")
    p.add_argument("--q", type=int, action="append", help="plane order (projective campaign)")
    p.add_argument("--trades", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if hasattr(args, "timeout") and args.timeout is None:
        args.timeout = _default_timeout()
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DesignError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
