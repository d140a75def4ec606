# k3census/cli/main.py
import argparse
import logging
import sys
from typing import List, Optional

from engine.census import CatalogParseError

from .commands import COMMANDS
from .options import EXIT_USAGE

logger = logging.getLogger("cli.main")


class CensusArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CensusArgumentParser(
        prog="k3census",
        description="Du Val baskets, link topology and moduli of weighted K3 complete intersections.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for per-stratum detail")
    subparsers = parser.add_subparsers(dest="command", metavar="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except CatalogParseError as e:
        logger.error("catalog parse error: %s", e)
        sys.stderr.write(f"k3census: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        logger.error("cannot read or write %s", getattr(e, "filename", None) or e)
        sys.stderr.write(f"k3census: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
