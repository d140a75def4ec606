# k3census/cli/options.py
import argparse
from typing import List

from engine.utils import DEFAULT_FORMAT, DEFAULT_JOBS

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ANALYSIS = 2
EXIT_VERIFY = 3

FORMATS = ("csv", "json", "md")


def int_list(text: str) -> List[int]:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def add_system_flags(parser: argparse.ArgumentParser, degrees: bool = True):
    parser.add_argument("-w", "--weights", type=int_list, required=True, help="comma-separated weights, e.g. 1,1,1,2")
    if degrees:
        parser.add_argument("-d", "--degrees", type=int_list, required=True, help="comma-separated degrees, e.g. 5 or 6,6")


def add_output_flags(parser: argparse.ArgumentParser, jobs: bool = False):
    parser.add_argument("--format", choices=FORMATS, default=DEFAULT_FORMAT, help="report format (default md)")
    parser.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    if jobs:
        parser.add_argument("--jobs", type=positive_int, default=DEFAULT_JOBS, help="worker processes")
