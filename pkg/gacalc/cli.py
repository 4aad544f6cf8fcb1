# gacalc/cli.py
"""
Command-line front end.

    gacalc eval "e1*e2 + 3"
    gacalc decompose --point 0,0,0 "2*e0 + e1 + 3*e01"
    gacalc parallel --point 1,2,3 --plane 0,1,0,0
    gacalc check --suite all

Global options (--algebra, --signature, --gram, --scalars, --json,
--verbose) are accepted before or after the subcommand.
"""

import argparse
import json
import logging
import math
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from . import config
from .clifford_core import CliffordAlgebra, Multivector
from .errors import ConfigError, GacalcError
from .models import (
    AnglePayload,
    CliConfig,
    DecompositionPayload,
    LieTablePayload,
    MultivectorPayload,
    PlanePayload,
    UnitPayload,
)
from .parser import evaluate_source
from .pga3d import dihedral_angle, parallel_through
from .playfair import decompose
from .scalars import ScalarMode
from .structure import bivector_lie_table, commutator, inverse, unit_decompose
from .utils import complement_for, parse_plane, parse_point
from .verification import SUITES, run_suites, suggest_suite

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


# --- Argument parsing ---
def _add_common_options(parser: argparse.ArgumentParser, suppress: bool):
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--algebra", default=default(None), help="pga3, p,q,r or a gram file path")
    parser.add_argument("--signature", default=default(None), help="p,q,r with the degenerate vectors first")
    parser.add_argument("--gram", default=default(None), help="whitespace-separated symmetric matrix file")
    parser.add_argument("--scalars", choices=[m.value for m in ScalarMode], default=default(None))
    parser.add_argument("--json", action="store_true", default=default(False), help="structured output")
    parser.add_argument("--verbose", "-v", action="store_true", default=default(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gacalc", description="Degenerate Clifford algebra calculator")
    _add_common_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")

    p = sub.add_parser("decompose", parents=[common], help="Playfair split X = at_point + Y*e0")
    p.add_argument("expr")
    p.add_argument("--point", help="x,y,z of the PGA3 point (default: the coordinate complement)")

    p = sub.add_parser("parallel", parents=[common], help="plane through a point parallel to a plane")
    p.add_argument("--point", required=True)
    p.add_argument("--plane", required=True, help="v0,v1,v2,v3")

    p = sub.add_parser("angle", parents=[common], help="dihedral angle between two planes")
    p.add_argument("--plane1", required=True)
    p.add_argument("--plane2", required=True)

    p = sub.add_parser("inv", parents=[common], help="two-sided inverse")
    p.add_argument("expr")

    p = sub.add_parser("cmt", parents=[common], help="commutator 1/2(BX - XB)")
    p.add_argument("b")
    p.add_argument("x")

    p = sub.add_parser("units", parents=[common], help="split a unit as r*(1 + tail*e0)")
    p.add_argument("--decompose", dest="expr", required=True)
    p.add_argument("--point")

    sub.add_parser("lie-table", parents=[common], help="bracket table of the bivectors")

    p = sub.add_parser("check", parents=[common], help="run the verification suites")
    p.add_argument("--suite", default="all", help="'all' or comma-separated suite names")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--list", action="store_true", help="list the suites and exit")

    sub.add_parser("serve", parents=[common], help="serve the JSON API with uvicorn")
    return parser


def load_config(args: argparse.Namespace) -> CliConfig:
    fields = {"algebra": args.algebra, "signature": args.signature, "gram": args.gram,
              "json_output": args.json}
    if args.scalars:
        fields["scalars"] = args.scalars
    try:
        return CliConfig(**fields)
    except ValidationError as e:
        raise ConfigError("; ".join(err["msg"] for err in e.errors())) from None


# --- Output ---
def _emit(cfg: CliConfig, lines: Sequence[str], payload=None):
    if cfg.json_output and payload is not None:
        print(payload if isinstance(payload, str) else payload.model_dump_json(indent=2))
        return
    for line in lines:
        print(line)


def _emit_multivector(cfg: CliConfig, mv: Multivector):
    _emit(cfg, [mv.to_text()], json.dumps(mv.to_json()))


# --- Commands ---
def cmd_eval(args, cfg: CliConfig) -> int:
    alg = CliffordAlgebra.of(cfg.build_form())
    _emit_multivector(cfg, evaluate_source(args.expr, alg))
    return EXIT_OK


def cmd_decompose(args, cfg: CliConfig) -> int:
    form = cfg.build_form()
    comp = complement_for(form, args.point)
    x = evaluate_source(args.expr, CliffordAlgebra.of(form))
    split = decompose(x, comp)
    payload = DecompositionPayload(
        at_point=MultivectorPayload.of(split.at_w),
        at_infinity=MultivectorPayload.of(split.at_infinity()),
        cofactor=MultivectorPayload.of(split.ideal_cofactor),
    )
    _emit(cfg, [f"at_point: {split.at_w}",
                f"at_infinity: {split.at_infinity()}",
                f"cofactor: {split.ideal_cofactor}"], payload)
    return EXIT_OK


def cmd_parallel(args, cfg: CliConfig) -> int:
    plane = parallel_through(parse_point(args.point, cfg.scalars), parse_plane(args.plane, cfg.scalars))
    payload = PlanePayload.of(plane)
    _emit(cfg, [f"plane: {','.join(payload.coords)}", f"vector: {payload.text}"], payload)
    return EXIT_OK


def cmd_angle(args, cfg: CliConfig) -> int:
    theta = dihedral_angle(parse_plane(args.plane1, cfg.scalars), parse_plane(args.plane2, cfg.scalars))
    payload = AnglePayload(radians=theta, degrees=math.degrees(theta))
    _emit(cfg, [f"angle: {payload.radians!r} rad ({payload.degrees!r} deg)"], payload)
    return EXIT_OK


def cmd_inv(args, cfg: CliConfig) -> int:
    alg = CliffordAlgebra.of(cfg.build_form())
    _emit_multivector(cfg, inverse(evaluate_source(args.expr, alg)))
    return EXIT_OK


def cmd_cmt(args, cfg: CliConfig) -> int:
    alg = CliffordAlgebra.of(cfg.build_form())
    _emit_multivector(cfg, commutator(evaluate_source(args.b, alg), evaluate_source(args.x, alg)))
    return EXIT_OK


def cmd_units(args, cfg: CliConfig) -> int:
    form = cfg.build_form()
    comp = complement_for(form, args.point)
    u = unit_decompose(evaluate_source(args.expr, CliffordAlgebra.of(form)), comp)
    payload = UnitPayload(r=MultivectorPayload.of(u.r), tail=MultivectorPayload.of(u.tail))
    _emit(cfg, [f"r: {u.r}", f"tail: {u.tail}"], payload)
    return EXIT_OK


def cmd_lie_table(args, cfg: CliConfig) -> int:
    payload = LieTablePayload.of(bivector_lie_table(CliffordAlgebra.of(cfg.build_form())))
    lines = ["basis: " + " ".join(payload.basis)]
    lines += [f"{pair} = {value}" for pair, value in payload.brackets.items()]
    if payload.matches_se3 is not None:
        lines.append(f"se(3) structure constants: {'match' if payload.matches_se3 else 'MISMATCH'}")
    _emit(cfg, lines, payload)
    return EXIT_OK


def _suite_names(selector: str) -> List[str]:
    if selector == "all":
        return list(SUITES)
    names = [s.strip() for s in selector.split(",") if s.strip()]
    for name in names:
        if name not in SUITES:
            guess = suggest_suite(name)
            hint = f"; did you mean {guess!r}?" if guess else ""
            raise ConfigError(f"unknown suite {name!r}{hint}")
    return names


def cmd_check(args, cfg: CliConfig) -> int:
    if args.list:
        for suite in SUITES.values():
            print(f"{suite.name}: {suite.statement}")
        return EXIT_OK
    reports = run_suites(_suite_names(args.suite), seed=args.seed)
    if cfg.json_output:
        print(json.dumps([r.model_dump() for r in reports], indent=2))
    else:
        for report in reports:
            print(report.line())
    failed = [r.suite for r in reports if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(reports)} suites failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_serve(args, cfg: CliConfig) -> int:
    import uvicorn

    print(f"gacalc API running on http://{config.API_HOST}:{config.API_PORT}/")
    uvicorn.run("gacalc.main:app", host=config.API_HOST, port=config.API_PORT)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "decompose": cmd_decompose,
    "parallel": cmd_parallel,
    "angle": cmd_angle,
    "inv": cmd_inv,
    "cmt": cmd_cmt,
    "units": cmd_units,
    "lie-table": cmd_lie_table,
    "check": cmd_check,
    "serve": cmd_serve,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parses argv, runs one subcommand and returns the exit code.

    Returns:
        int: 0 on success, 1 when a verification suite fails, 2 on usage
        errors and on every library error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = load_config(args)
        return COMMANDS[args.command](args, cfg)
    except GacalcError as e:
        log.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
