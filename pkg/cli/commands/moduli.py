# k3census/cli/commands/moduli.py
from engine.errors import AnalysisError
from engine.k3inv import build_record
from engine.stratum import WeightSystem

from ..options import EXIT_ANALYSIS, EXIT_OK, add_system_flags
from ..report import emit, render_error


def register(subparsers):
    p = subparsers.add_parser("moduli", help="moduli dimension three ways: 2(k-2), 2(h0 - sum h0), 2(20 - rank M)")
    add_system_flags(p)
    p.set_defaults(func=run)


def run(args) -> int:
    try:
        record = build_record(WeightSystem.of(args.weights, args.degrees))
    except AnalysisError as e:
        emit(render_error("md", e.to_dict()))
        return EXIT_ANALYSIS
    poly = "-" if record.moduli_dim_polynomial is None else str(record.moduli_dim_polynomial)
    verdict = "agree" if record.moduli_agree else "differ"
    emit(f"{record.moduli_dim} {poly} {2 * record.dolgachev_dim} ({verdict})\n")
    return EXIT_OK
