# k3census/cli/commands/h0.py
from engine.wps import h0

from ..options import EXIT_OK, add_system_flags, non_negative_int
from ..report import emit


def register(subparsers):
    p = subparsers.add_parser("h0", help="number of weighted monomials of degree l")
    add_system_flags(p, degrees=False)
    p.add_argument("-l", "--degree", type=non_negative_int, required=True, help="degree l")
    p.set_defaults(func=run)


def run(args) -> int:
    emit(f"{h0(args.weights, args.degree)}\n")
    return EXIT_OK
