"""Command line: compute, expand and verify.

Exit status is 0 on success, 1 when a verification check fails and 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import TwistConfig
from .expr import ExprError, Value, evaluate, parse
from .render import FORMATS, render
from .verify import SUITES, all_passed, applicable, default_configs, run_all, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # flags may come before or after the subcommand; only the top level
        # holds defaults so a subcommand does not reset them
        g = argparse.ArgumentParser(add_help=False)

        def d(value):
            return argparse.SUPPRESS if suppress else value

        g.add_argument("--order", type=int, default=d(4), help="truncation order N (default 4)")
        g.add_argument("--twist", choices=("L", "W"), default=d("L"), help="twist generator kind (default L)")
        g.add_argument("--n0", type=int, default=d(1), help="nonzero index of the twist generator (default 1)")
        g.add_argument("--seed", type=int, default=d(0), help="seed for the randomized ring-law checks")
        return g

    common = global_flags(True)
    p = _Parser(prog="w22quant", description="Quantizations of U(W(2,2)) by Drinfeld twists.",
                parents=[global_flags(False)])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("compute", parents=[common], help="evaluate an expression")
    c.add_argument("--expr", required=True)
    c.add_argument("--format", choices=FORMATS, default="text")

    e = sub.add_parser("expand", parents=[common], help="print one t-coefficient of an expression")
    e.add_argument("--expr", required=True)
    e.add_argument("--degree", type=int, required=True)
    e.add_argument("--format", choices=("text", "latex"), default="text")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--report", choices=("text", "json"), default="text")
    v.add_argument("--all-configs", action="store_true",
                   help="run over n0 in {1, 2, -1} and both twist kinds instead of one config")
    return p


def _config(args) -> TwistConfig:
    return TwistConfig(args.n0, args.twist, args.order)


def _compute(args, out) -> int:
    cfg = _config(args)
    value = evaluate(parse(args.expr), cfg)
    out.write(render(value, args.format, cfg) + "\n")
    return EXIT_OK


def _expand(args, out) -> int:
    cfg = _config(args)
    if args.degree < 0:
        raise ValueError("--degree must be nonnegative")
    value = evaluate(parse(args.expr), cfg)
    if value.series:
        if args.degree > value.order:
            raise ValueError("degree %d exceeds the truncation order %d" % (args.degree, value.order))
        coeff = value.data[args.degree]
    else:
        # a value without t is its own t^0 coefficient
        coeff = value.data if args.degree == 0 else value.data * 0
    out.write(render(Value(value.kind, False, None, coeff), args.format, cfg) + "\n")
    return EXIT_OK


def _verify(args, out) -> int:
    if args.all_configs:
        reports = run_all(default_configs(args.order), suites=SUITES if args.suite == "all" else (args.suite,),
                          seed=args.seed)
    else:
        cfg = _config(args)
        if args.suite == "all":
            reports = [run_suite(s, cfg, seed=args.seed) for s in SUITES if applicable(s, cfg)]
        else:
            reports = [run_suite(args.suite, cfg, seed=args.seed)]
    ok = all_passed(reports)
    if args.report == "json":
        out.write(json.dumps({"status": "pass" if ok else "fail", "reports": [r.to_json() for r in reports]},
                             indent=1, sort_keys=True) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
        out.write("%s: %d suite runs\n" % ("PASS" if ok else "FAIL", len(reports)))
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        handler = {"compute": _compute, "expand": _expand, "verify": _verify}[args.command]
        return handler(args, out)
    except ExprError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
