# k3census/cli/commands/lattice.py
from engine.quadlattice import gram_E8, gram_H, k3_gram, scan_hyperbolic_embeddings, signature

from ..options import EXIT_OK, add_output_flags, positive_int
from ..report import ReportDocument, emit


def register(subparsers):
    p = subparsers.add_parser("lattice", help="K3 lattice facts and the rank-2 embedding scan")
    p.add_argument("--max-entry", type=positive_int, default=20, help="largest Gram entry in the scan (default 20)")
    add_output_flags(p)
    p.set_defaults(func=run)


def run(args) -> int:
    table = []
    for name, lattice in (("E8", gram_E8()), ("H(1)", gram_H(1)), ("H(2)", gram_H(2)), ("K3", k3_gram())):
        pos, neg, zero = signature(lattice)
        table.append({
            "lattice": name,
            "rank": lattice.rank,
            "signature": f"({pos},{neg},{zero})",
            "even": "yes" if lattice.is_even else "no",
            "determinant": lattice.determinant,
        })
    scan = scan_hyperbolic_embeddings(args.max_entry)
    summary = [
        f"embedding scan over {scan.inputs} even positive-definite rank-2 lattices, entries <= {args.max_entry}",
        f"(f(l1), f(l2)) = 2(l1, l2) on {scan.off_diagonal_identity}/{scan.inputs}",
        f"image primitive on {scan.primitive}/{scan.inputs}",
        f"(f(li), f(li)) = (li, li) on {scan.diagonal_equals_source}/{scan.inputs}",
        f"(f(li), f(li)) = 2(li, li) on {scan.diagonal_equals_doubled_source}/{scan.inputs}",
    ]
    doc = ReportDocument(
        fmt=args.format,
        columns=["lattice", "rank", "signature", "even", "determinant"],
        table=table,
        records=table,
        summary=summary,
        title="Lattices",
        extra={"scan": vars(scan)},
    )
    emit(doc.render(), args.output)
    return EXIT_OK
