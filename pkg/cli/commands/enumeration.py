# k3census/cli/commands/enumeration.py
import logging

from engine.census import CATALOG_COLUMNS, enumerate_codim1
from engine.k3inv import build_record
from engine.utils import DEFAULT_MAX_WEIGHT

from ..options import EXIT_OK, add_output_flags, positive_int
from ..report import RECORD_COLUMNS, ReportDocument, emit, record_row

logger = logging.getLogger("cli.enumeration")

_EXTRA_COLUMNS = ["b2_link", "link", "moduli_dim", "moduli_dim_polynomial", "dolgachev_dim"]


def register(subparsers):
    p = subparsers.add_parser("enumerate", help="search quasismooth K3 hypersurfaces up to a weight bound")
    p.add_argument("--max-weight", type=positive_int, default=DEFAULT_MAX_WEIGHT, help="largest weight searched (default 40)")
    add_output_flags(p, jobs=True)
    p.set_defaults(func=run)


def run(args) -> int:
    systems = enumerate_codim1(args.max_weight, jobs=args.jobs)
    records = [build_record(ws) for ws in systems]

    table = []
    for i, record in enumerate(records, 1):
        row = record_row(record)
        table.append({
            "id": i,
            "codim": record.ws.codim,
            "weights": row["weights"],
            "degrees": row["degrees"],
            "basket": row["basket"],
            "b2": record.b2_orbifold,
            **{c: row[c] for c in _EXTRA_COLUMNS},
        })

    doc = ReportDocument(
        fmt=args.format,
        columns=CATALOG_COLUMNS + _EXTRA_COLUMNS,
        table=table,
        records=[dict(id=i, **r.to_dict()) for i, r in enumerate(records, 1)],
        summary=[f"{len(records)} weight systems with weights <= {args.max_weight}"],
        title=f"Quasismooth K3 hypersurfaces, weights <= {args.max_weight}",
    )
    emit(doc.render(), args.output)
    return EXIT_OK
