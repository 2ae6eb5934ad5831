"""Command line interface: solve, gen, and check subcommands.

Exit codes: 0 on success (an empty labelling set is a success), 1 when a
semantics reports a genuine negative (no maximally proper labelling, grounded
iteration not convergent) or a check fails, 2 on unparseable or invalid input.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .diffcheck import run_checks, run_fuzz
from .errors import (
    InvalidProbabilityError,
    MayMustError,
    NoMaximallyProperError,
    NonConvergentError,
)
from .generate import generate_random
from .mmaf import parse_mmaf, serialize_mmaf
from .render import FORMATS, render
from .solver import ENGINES, SEMANTICS_NAMES, solve


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_solve(args: argparse.Namespace) -> int:
    f = parse_mmaf(_read_input(args.input))
    result = solve(f, args.semantics, args.engine)
    print(render(result, f, args.output_format, dot_all=args.all))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        prob = Fraction(args.probability)
    except (ValueError, ZeroDivisionError):
        raise InvalidProbabilityError(
            f"probability must be an exact rational, got {args.probability!r}"
        ) from None
    f = generate_random(args.count, prob, args.tuples, args.seed)
    text = serialize_mmaf(f)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.input:
        report = run_checks(parse_mmaf(_read_input(args.input)))
        print(report.render())
        return 0 if report.passed else 1
    summary = run_fuzz(args.fuzz, args.max_args, args.seed)
    print(summary.render())
    return 0 if summary.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maymust",
        description="Solve argumentation frameworks with may/must scales.",
        epilog="MAYMUST_MAX_BRUTE overrides the exhaustive bound (default 12); "
        "MAYMUST_PURE=1 forces the pure-Python kernel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute a semantics for an instance")
    p_solve.add_argument("-i", "--input", required=True, help="instance file, - for stdin")
    p_solve.add_argument("-s", "--semantics", required=True, choices=SEMANTICS_NAMES)
    p_solve.add_argument("--engine", choices=ENGINES, default="brute")
    p_solve.add_argument(
        "-o",
        dest="output_format",
        choices=FORMATS,
        default="text",
        help="output format (default: text)",
    )
    p_solve.add_argument(
        "--all",
        action="store_true",
        help="with -o dot, emit one graph per labelling instead of the first",
    )
    p_solve.set_defaults(run=_cmd_solve)

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("-n", dest="count", type=int, required=True, help="argument count")
    p_gen.add_argument(
        "-p",
        dest="probability",
        required=True,
        help="attack probability, an exact rational like 0.3 or 3/10",
    )
    p_gen.add_argument(
        "--tuples",
        default="uniform",
        help="tuple mode: uniform, uniform:<maxbound>, dung, or ratio",
    )
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", dest="output", help="output file (default: stdout)")
    p_gen.set_defaults(run=_cmd_gen)

    p_check = sub.add_parser("check", help="run differential self-checks")
    group = p_check.add_mutually_exclusive_group(required=True)
    group.add_argument("-i", "--input", help="check one instance file, - for stdin")
    group.add_argument("--fuzz", type=int, help="check N random instances")
    p_check.add_argument("--max-args", type=int, default=7)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.set_defaults(run=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.run(args)
        sys.stdout.flush()
        return code
    except (NoMaximallyProperError, NonConvergentError) as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except MayMustError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); exit quietly
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
