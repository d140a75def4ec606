# k3census/cli/commands/verify.py
import logging
from typing import Dict, List

from engine.census import (
    B2_DIFF,
    CATALOG_TITLES,
    VerificationReport,
    bundled_catalog,
    load_catalog,
    verify_catalog,
)
from engine.utils import BUNDLED_CATALOGS

from ..options import EXIT_OK, EXIT_VERIFY, add_output_flags
from ..report import ReportDocument, emit

logger = logging.getLogger("cli.verify")

COLUMNS = [
    "codim",
    "id",
    "weights",
    "degrees",
    "printed_basket",
    "computed_basket",
    "printed_b2",
    "computed_b2",
    "status",
    "documented",
    "note",
]


def register(subparsers):
    p = subparsers.add_parser("verify", help="recompute every row of a catalog and diff against the printed values")
    p.add_argument("--catalog", action="append", metavar="PATH",
                   help="catalog file; repeat to combine (default: both bundled catalogs)")
    add_output_flags(p, jobs=True)
    p.set_defaults(func=run)


def load_rows(paths):
    if paths:
        return [row for path in paths for row in load_catalog(path)]
    return [row for name in BUNDLED_CATALOGS for row in bundled_catalog(name)]


def _span(values: List[int]) -> str:
    return " ".join(str(v) for v in values) or "none"


def verdict_rows(report: VerificationReport) -> List[Dict]:
    rows = []
    for v in report.verdicts:
        rows.append({
            "codim": v.row.codim,
            "id": v.row.id,
            "weights": v.row.ws.weights_str(),
            "degrees": v.row.ws.degrees_str(),
            "printed_basket": v.row.expected_basket.canonical(),
            "computed_basket": v.computed_basket.canonical() if v.computed_basket else "",
            "printed_b2": v.row.expected_b2,
            "computed_b2": "" if v.computed_b2 is None else v.computed_b2,
            "status": v.status,
            "documented": "yes" if v.documented else "no",
            "note": v.note,
        })
    return rows


def summary_lines(report: VerificationReport) -> List[str]:
    lines = []
    for codim in report.codims:
        counts = report.counts(codim)
        title = CATALOG_TITLES.get(codim, f"codim {codim}")
        lines.append(
            f"{title}: {len(report.select(codim))} rows, "
            + ", ".join(f"{n} {status}" for status, n in counts.items())
        )
        lines.append(f"{title}: realized b2(X) {_span(report.realized_b2_orbifold(codim))}")
        lines.append(f"{title}: realized b2(L) {_span(report.realized_b2_link(codim))}")
    if len(report.codims) > 1:
        lines.append(f"combined: realized b2(L) {_span(report.realized_b2_link())}")
    for codim in report.codims:
        rows18 = report.rows_with_b2_orbifold(18, codim)
        if rows18:
            lines.append(f"{CATALOG_TITLES.get(codim, codim)}: b2(X) = 18 on rows {_span(rows18)}")
    agree, compared = report.moduli_agreement()
    if compared:
        lines.append(f"2(h0(d) - sum h0(w_i)) = 2(k - 2) on {agree}/{compared} hypersurface rows")
    for d in report.discrepancies:
        tag = "" if d in report.undocumented else "documented "
        lines.append(f"{tag}discrepancy: {d.describe()}")
    b2_only = sum(1 for v in report.verdicts if v.status == B2_DIFF)
    lines.append(f"verdict: {'pass' if report.passed else 'FAIL'} ({b2_only} printed-b2 differences allowed)")
    return lines


def run(args) -> int:
    rows = load_rows(args.catalog)
    report = verify_catalog(rows, jobs=args.jobs)
    doc = ReportDocument(
        fmt=args.format,
        columns=COLUMNS,
        table=verdict_rows(report),
        records=verdict_rows(report),
        summary=summary_lines(report),
        title="Catalog verification",
        extra={
            "counts": {str(c): report.counts(c) for c in report.codims},
            "realized_b2_link": {str(c): report.realized_b2_link(c) for c in report.codims},
            "realized_b2_link_combined": report.realized_b2_link(),
            "discrepancies": [vars(d) for d in report.discrepancies],
            "undocumented": [vars(d) for d in report.undocumented],
            "passed": report.passed,
        },
    )
    emit(doc.render(), args.output)
    return EXIT_OK if report.passed else EXIT_VERIFY
