"""hfseq command line: conversions, arithmetic, enumeration, Kraft sums and a benchmark.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
2 parse error, 3 domain or range error, 64 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, NoReturn, Optional, Sequence

from cli_tools import (
    ARITH_OPS,
    Format,
    cmd_arith,
    cmd_bench,
    cmd_convert,
    cmd_enum,
    cmd_kraft,
    load_kraft_reference,
)
from config import get_config
from errors import DomainError, NatRangeError, ParseError, UsageError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 64

FORMAT_CHOICES = [f.value for f in Format]


class _ArgumentParser(argparse.ArgumentParser):
    """Report usage errors as UsageError instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    config = get_config()
    parser = _ArgumentParser(
        prog="hfseq",
        description="Arithmetic on hereditarily finite sequences, System-T types and Dyck codes.",
    )
    sub = parser.add_subparsers(dest="command", metavar="{convert,arith,enum,kraft,bench}")
    sub.required = True

    p_convert = sub.add_parser("convert", help="convert between dec, tree, type and dyck forms")
    p_convert.add_argument("items", nargs="*", help="inputs; read from stdin (one per line) when omitted")
    p_convert.add_argument("--from", dest="source", choices=FORMAT_CHOICES, help="input form (default: detect)")
    p_convert.add_argument("--to", dest="target", choices=FORMAT_CHOICES, default=Format.TREE.value, help="output form")

    p_arith = sub.add_parser("arith", help="apply add, mul, sub, cmp, pow, succ or pred")
    p_arith.add_argument("op", choices=ARITH_OPS)
    p_arith.add_argument("operands", nargs="*", help="operands; read from stdin (one per line) when omitted")
    p_arith.add_argument("--from", dest="source", choices=FORMAT_CHOICES, help="operand form (default: detect)")
    p_arith.add_argument("--to", dest="target", choices=FORMAT_CHOICES, help="result form (default: first operand's)")

    p_enum = sub.add_parser("enum", help="list the first k numbers in a given form")
    p_enum.add_argument("k", type=int)
    p_enum.add_argument("--format", dest="fmt", choices=FORMAT_CHOICES, default=Format.TREE.value)

    p_kraft = sub.add_parser("kraft", help="Kraft sums over the Dyck codes of ranks 0..m-1")
    p_kraft.add_argument("ms", nargs="*", type=int, help="values of m (default: the reference table)")

    p_bench = sub.add_parser("bench", help="time add and mul on random operands of doubling size")
    p_bench.add_argument("--max-bits", type=int, default=4096, help="largest digit length (>= 256)")
    p_bench.add_argument("--trials", type=int, default=config.bench.trials)
    p_bench.add_argument("--seed", type=int, default=config.bench.seed)
    p_bench.add_argument("--mul-max-bits", type=int, default=config.bench.mul_max_bits,
                         help="largest digit length timed for mul")
    p_bench.add_argument("--tower", action="store_true", help="also time the depth-8 tower round trip")
    return parser


def _read_stdin_items() -> List[str]:
    return [line.strip() for line in sys.stdin if line.strip()]


def _optional_format(value: Optional[str]) -> Optional[Format]:
    return Format(value) if value else None


def run(args: argparse.Namespace) -> List[str]:
    """Dispatch a parsed command and return the output lines."""
    logger.info(f"Running '{args.command}'")
    if args.command == "convert":
        items = args.items or _read_stdin_items()
        return [cmd_convert(item, Format(args.target), _optional_format(args.source)) for item in items]
    if args.command == "arith":
        operands = args.operands or _read_stdin_items()
        return [cmd_arith(args.op, operands, _optional_format(args.source), _optional_format(args.target))]
    if args.command == "enum":
        return cmd_enum(args.k, Format(args.fmt))
    if args.command == "kraft":
        reference = load_kraft_reference(get_config().kraft_reference)
        return cmd_kraft(args.ms, reference)
    if args.command == "bench":
        return cmd_bench(args.max_bits, args.trials, args.seed, args.mul_max_bits, args.tower)
    raise UsageError(f"unknown command '{args.command}'")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        for line in run(args):
            print(line)
        return EXIT_OK
    except ParseError as e:
        logger.error(f"Parse error: {e}")
        return EXIT_PARSE
    except (DomainError, NatRangeError) as e:
        logger.error(f"Domain error: {e}")
        return EXIT_DOMAIN
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
