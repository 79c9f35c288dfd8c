"""Command line interface.

Every command writes one JSON document to stdout::

    {"schema_version": 1, "command": ..., "inputs": {...}, "outputs": {...}}

Rationals are strings ``"p/q"`` (or ``"p"``). Exit codes: 0 success,
1 failed verification, 2 usage or parse error, 3 zero form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .apolarity import ann_dim, sylvester_generators
from .duality import coker_branch
from .forms import form_to_json, parse_form, render
from .moduli import SplittingType, census, describe, fiber_dim
from .suites import SUITES, run_suite

SCHEMA_VERSION = 1

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(command, inputs, outputs, out):
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs, "outputs": outputs}
    out.write(json.dumps(doc, default=_default, indent=2, sort_keys=False) + "\n")


def _read_form(text):
    try:
        p = parse_form(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse form {text!r}: {exc}") from None
    if p.is_zero():
        raise CliError("the zero form has no apolar ideal of interest", EXIT_DOMAIN)
    return p


def _default_seed():
    raw = os.environ.get("APOLAR_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"APOLAR_SEED must be an integer, got {raw!r}") from None


def cmd_ann(args, out):
    p = _read_form(args.form)
    l = p.degree
    prof = sylvester_generators(p)
    outputs = prof.as_dict()
    outputs["g1_coeffs"] = form_to_json(prof.g1)["coeffs"]
    outputs["g2_coeffs"] = form_to_json(prof.g2)["coeffs"]
    outputs["ann_dims"] = [ann_dim(p, d) for d in range(l + 1)]
    if args.degree is not None:
        if not 0 <= args.degree <= l:
            raise CliError(f"--degree must lie in 0..{l}")
        outputs["ann_dim"] = ann_dim(p, args.degree)
    _emit("ann", {"form": render(p), "degree": args.degree}, outputs, out)
    return EXIT_OK


def cmd_fiber_dim(args, out):
    p = _read_form(args.form)
    try:
        s = fiber_dim(args.n1, args.n2, p)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    l, d = -2 - args.n2, args.n1 - args.n2
    r = sylvester_generators(p).cactus_rank
    _emit("fiber-dim", {"n1": args.n1, "n2": args.n2, "form": render(p)},
          {"l": l, "d": d, "crank": r, "fiber_dim": s, "branch": coker_branch(l, d, r)}, out)
    return EXIT_OK


def cmd_verify(args, out):
    seed = args.seed if args.seed is not None else _default_seed()
    report = run_suite(args.suite, seed, args.max_degree)
    _emit("verify", {"suite": args.suite, "seed": seed, "max_degree": args.max_degree},
          report.as_dict(), out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_census(args, out):
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        table = census(args.l, args.d, args.samples, seed, args.bound, workers=args.workers)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["crank", "fiber_dim", "count"])
        writer.writerows(table.rows())
        out.write(buf.getvalue())
    else:
        inputs = {"l": args.l, "d": args.d, "samples": args.samples, "seed": seed, "bound": args.bound}
        _emit("census", inputs, table.as_dict(), out)
    return EXIT_OK


def cmd_describe(args, out):
    try:
        splitting = SplittingType.parse(args.splitting)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _emit("describe", {"splitting": args.splitting}, describe(splitting).as_dict(), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apolar", description="Apolar ideals, ranks and moduli fiber dimensions of binary forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ann", help="apolar ideal generators, ranks and graded dimensions")
    p.add_argument("form", help='e.g. "X0^2*X1^3" or \'{"degree": 2, "coeffs": ["0", "1", "0"]}\'')
    p.add_argument("--degree", type=int, help="also report dim Ann(P)_d for this d")
    p.set_defaults(func=cmd_ann)

    p = sub.add_parser("fiber-dim", help="fiber dimension over [P] for O(n1) + O(n2)")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("form")
    p.set_defaults(func=cmd_fiber_dim)

    p = sub.add_parser("verify", help="run a seeded identity suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--seed", type=int, help="default: $APOLAR_SEED or 0")
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="stratum frequencies over random integer forms")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, help="default: $APOLAR_SEED or 0")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("describe", help="H^1 and automorphism dimensions of a splitting type")
    p.add_argument("--splitting", required=True, help='e.g. "-3:1,-5:1"')
    p.set_defaults(func=cmd_describe)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    # splitting types start with '-', which argparse would take for an option
    for i in range(len(argv) - 1):
        if argv[i] == "--splitting":
            argv[i:i + 2] = [f"--splitting={argv[i + 1]}"]
            break
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"apolar {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
