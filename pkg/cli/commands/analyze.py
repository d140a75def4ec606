# k3census/cli/commands/analyze.py
import logging

from engine.errors import AnalysisError
from engine.k3inv import build_record
from engine.stratum import WeightSystem

from ..options import EXIT_ANALYSIS, EXIT_OK, add_output_flags, add_system_flags
from ..report import RECORD_COLUMNS, ReportDocument, emit, record_row, render_error

logger = logging.getLogger("cli.analyze")


def register(subparsers):
    p = subparsers.add_parser("analyze", help="basket, link and moduli of one weight system")
    add_system_flags(p)
    add_output_flags(p)
    p.set_defaults(func=run)


def run(args) -> int:
    try:
        ws = WeightSystem.of(args.weights, args.degrees)
        record = build_record(ws)
    except AnalysisError as e:
        logger.info("analysis failed: %s", e)
        emit(render_error(args.format, e.to_dict()), args.output)
        return EXIT_ANALYSIS

    doc = ReportDocument(
        fmt=args.format,
        columns=RECORD_COLUMNS,
        table=[record_row(record)],
        records=[record.to_dict()],
        summary=[f"{ws.label}: {record.link}, moduli dimensions agree: {'yes' if record.moduli_agree else 'no'}"],
        title=ws.label,
    )
    emit(doc.render(), args.output)
    return EXIT_OK
