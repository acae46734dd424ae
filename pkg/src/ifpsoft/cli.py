"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 parse failure, 3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, Sequence, Tuple

from . import files
from .decision import decide
from .errors import DomainError, ParseError, ValidationError
from .omega import (
    omega_complement,
    omega_equal,
    omega_intersection,
    omega_subset,
    omega_union,
)
from .soft import ifss_and_product, ifss_or_product

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3

# name -> (arity, function, kind); kind is "set", "bool" or "paired"
OPS: Dict[str, Tuple[int, Callable, str]] = {
    "union": (2, omega_union, "set"),
    "intersection": (2, omega_intersection, "set"),
    "complement": (1, omega_complement, "set"),
    "subset": (2, omega_subset, "bool"),
    "equal": (2, omega_equal, "bool"),
    "and-product": (2, ifss_and_product, "paired"),
    "or-product": (2, ifss_or_product, "paired"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_decide(args) -> int:
    o = files.load_omega(args.input, relaxed=False)
    report = decide(o)
    if args.format == "machine":
        text = files.dumps(files.report_to_dict(report, args.precision))
    else:
        text = files.render_table(report, args.precision)
    _emit(text, args.output)
    return EXIT_OK


def cmd_op(args) -> int:
    arity, fn, kind = OPS[args.name]
    if len(args.inputs) != arity:
        raise ParseError(f"{args.name} takes {arity} input file(s), got {len(args.inputs)}")
    if kind == "paired":
        operands = [files.load_soft(p) for p in args.inputs]
    else:
        operands = [files.load_omega(p, relaxed=args.relaxed) for p in args.inputs]
    result = fn(*operands)
    if kind == "bool":
        text = "true\n" if result else "false\n"
    elif kind == "paired":
        text = files.dumps(files.paired_to_dict(result))
    else:
        text = files.dumps(files.omega_to_dict(result))
    _emit(text, args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    doc = files.read_json(args.input)
    files.check_schema(doc)
    problems = files.diagnose(doc, relaxed=args.relaxed)
    if problems:
        sys.stdout.write("".join(f"{p}\n" for p in problems))
        return EXIT_INVALID
    sys.stdout.write("ok\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ifpsoft",
        description="Ω-set algebra and opportune-element decisions.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="aggregate an Ω-set and pick the opportune element")
    p.add_argument("input")
    p.add_argument("--format", choices=("table", "machine"), default="table")
    p.add_argument("--precision", type=int, default=3, help="display digits (default 3)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("op", help="apply a set operation to problem files")
    p.add_argument("name", choices=sorted(OPS))
    p.add_argument("inputs", nargs="+")
    p.add_argument("--relaxed", action="store_true", help="accept complement outputs")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("validate", help="list invariant violations in a problem file")
    p.add_argument("input")
    p.add_argument("--relaxed", action="store_true")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
