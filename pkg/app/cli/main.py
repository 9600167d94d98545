"""
Description:
Command-line front end.

    python -m app.cli example mo3
    python -m app.cli partitions --example mo3 --max-len 1
    python -m app.cli enumerate-nits --n 3 --k 2 --count-only
    python -m app.cli reversible --example swap-reversible
    python -m app.cli measure --n 3 --modes 1,2,3 --seed 7 --prepare-mode 2 --prepare-value 3 --sequence 1,1,2

Payloads go to stdout (or --out), logs and error messages to stderr.
Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.

Dependencies:
- argparse: For subcommands and flags.
- loguru: For logging.
- app.cli.commands: For the subcommand drivers.
- app.errors.handlers: For the exit codes.

Author: @kcaparas1630
"""
import argparse
import sys
from typing import List, Optional

from loguru import logger

from app import __version__
from app.cli.commands import COMMANDS
from app.constants.example_names import EXAMPLE_NAMES
from app.core.logging_config import configure_logging
from app.errors.exceptions import AutomatonError
from app.errors.handlers import EXIT_OK, exit_code_for


def _add_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--example", choices=EXAMPLE_NAMES, help="Use a canonical example")
    source.add_argument("--input", help="Envelope JSON file, '-' for stdin")


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _add_max_len(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-len", type=_non_negative, default=None, help="Longest input word (default |S|-1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="automata", description="Automaton models of quantized systems")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="loguru level, e.g. DEBUG")
    parser.add_argument("--out", default=None, help="Write the payload to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    example = sub.add_parser("example", help="Emit a canonical example as an envelope")
    example.add_argument("name", help=f"One of: {', '.join(EXAMPLE_NAMES)}")

    partitions = sub.add_parser("partitions", help="Experimental and finest partitions of an automaton")
    _add_source(partitions)
    _add_max_len(partitions)

    logic = sub.add_parser("logic", help="Partition logic of an automaton, urn model or logic")
    _add_source(logic)
    _add_max_len(logic)

    states = sub.add_parser("states", help="Two-valued states of a partition logic")
    _add_source(states)
    _add_max_len(states)
    states.add_argument("--limit", type=int, default=None, help="Search space guard")

    for name, help_text in (
        ("to-urn", "Translate an automaton into an urn model"),
        ("from-urn", "Translate an urn model into an automaton"),
        ("reversible", "Permutation matrix and cycle form of a reversible automaton"),
        ("dot", "DOT text of a logic (Hasse diagram) or reversible automaton (flow diagram)"),
    ):
        _add_source(sub.add_parser(name, help=help_text))

    measure = sub.add_parser("measure", help="Seeded counterfactual measurements")
    measure.add_argument("--n", type=int, required=True, help="Information base")
    measure.add_argument("--modes", required=True, help="Comma-separated mode labels")
    measure.add_argument("--seed", type=int, required=True, help="64-bit generator seed")
    measure.add_argument("--prepare-mode", required=True)
    measure.add_argument("--prepare-value", type=int, required=True)
    measure.add_argument("--sequence", required=True, help="Comma-separated modes to measure")
    measure.add_argument("--envelope", action="store_true", help="Emit a transcript envelope instead of JSON lines")

    nits = sub.add_parser("enumerate-nits", help="Complete sets of comeasurable nits")
    nits.add_argument("--n", type=int, required=True)
    nits.add_argument("--k", type=int, required=True)
    nits.add_argument("--count-only", action="store_true")
    nits.add_argument("--formula", action="store_true", help="With --count-only and k=2, use the closed form")
    nits.add_argument("--limit", type=int, default=None, help="Guard on n^k")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level)
    try:
        payload = COMMANDS[args.command](args)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(payload)
            logger.info(f"Wrote {args.command} output to {args.out}")
        else:
            sys.stdout.write(payload)
    except AutomatonError as e:
        logger.error(f"{args.command} failed: {e.detail}")
        print(e.detail, file=sys.stderr)
        return exit_code_for(e)
    except OSError as e:
        logger.error(f"{args.command} could not access a file: {e}")
        print(str(e), file=sys.stderr)
        return exit_code_for(e)
    return EXIT_OK
