# k3census/cli/commands/classify.py
from engine.census import CATALOG_TITLES, classify, verify_catalog

from ..options import EXIT_OK, EXIT_VERIFY, add_output_flags
from ..report import ReportDocument, emit
from .verify import load_rows


def register(subparsers):
    p = subparsers.add_parser("classify", help="which #k(S2xS3) links the catalogs realize")
    p.add_argument("--catalog", action="append", metavar="PATH",
                   help="catalog file; repeat to combine (default: both bundled catalogs)")
    add_output_flags(p, jobs=True)
    p.set_defaults(func=run)


def run(args) -> int:
    report = verify_catalog(load_rows(args.catalog), jobs=args.jobs)
    result = classify(report)

    table = []
    for k, suppliers in result.suppliers.items():
        row = {"k": k, "link": f"#{k}(S2xS3)", "b2_orbifold": k + 1}
        for codim in report.codims:
            row[f"codim{codim}_rows"] = " ".join(str(i) for c, i in suppliers if c == codim)
        table.append(row)

    span = result.realized_k
    summary = [
        f"realized k: {' '.join(str(k) for k in span)}",
        "every k from 3 to 21 is realized" if result.complete
        else f"missing k: {' '.join(str(k) for k in result.missing)}",
    ]
    for codim, ks in result.realized_k_by_codim.items():
        summary.append(f"{CATALOG_TITLES.get(codim, codim)}: k in {' '.join(str(k) for k in ks)}")

    doc = ReportDocument(
        fmt=args.format,
        columns=["k", "link", "b2_orbifold"] + [f"codim{c}_rows" for c in report.codims],
        table=table,
        records=table,
        summary=summary,
        title="Null Sasaki links #k(S2xS3)",
        extra={"complete": result.complete, "missing": list(result.missing)},
    )
    emit(doc.render(), args.output)
    return EXIT_OK if result.complete and report.passed else EXIT_VERIFY
