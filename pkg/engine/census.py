# k3census/engine/census.py
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from utils.file_manager import read_csv_frame, read_lines

from .errors import AnalysisError
from .exactgeom import is_representable
from .k3inv import K3Record, build_record
from .stratum import Basket, BasketSyntaxError, WeightSystem, analyze, try_analyze
from .utils import DEFAULT_JOBS, K3_SECOND_BETTI, fan_out, get_catalog_path
from .wps import is_well_formed

logger = logging.getLogger("engine.census")

CATALOG_COLUMNS = ["id", "codim", "weights", "degrees", "basket", "b2"]
CATALOG_TITLES = {1: "Reid list (codim 1)", 2: "Fletcher list (codim 2)"}

MATCH = "match"
BASKET_DIFF = "basket diff"
B2_DIFF = "b2 diff"
ERROR = "error"
STATUSES = (MATCH, BASKET_DIFF, B2_DIFF, ERROR)


class CatalogParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Discrepancy:
    codim: int
    id: int
    field: str
    printed: str
    computed: str
    note: str = ""

    def key(self) -> Tuple:
        return (self.codim, self.id, self.field, self.printed, self.computed)

    def describe(self) -> str:
        text = f"{CATALOG_TITLES.get(self.codim, f'codim {self.codim}')} No.{self.id}: {self.field} printed {self.printed}, computed {self.computed}"
        return f"{text} ({self.note})" if self.note else text


# Every printed entry known to conflict with recomputation. The catalog files
# keep the printed values; weight errata are applied on load.
DOCUMENTED_DISCREPANCIES: Tuple[Discrepancy, ...] = (
    Discrepancy(1, 13, "basket", "A1+A2+A5", "A1+A2+A4", "vertex of weight 5 gives A4; printed b2 15 fits the computed basket"),
    Discrepancy(1, 15, "b2", "14", "16"),
    Discrepancy(1, 34, "b2", "15", "17"),
    Discrepancy(1, 53, "b2", "16", "15"),
    Discrepancy(1, 66, "weights", "5 6 7 8", "5 6 7 9", "printed weights sum to 26, not 27"),
    Discrepancy(1, 72, "b2", "6", "11"),
    Discrepancy(1, 74, "b2", "5", "6"),
    Discrepancy(2, 18, "weights", "1 2 2 3 5", "1 2 3 3 5", "printed weights sum to 13, not 14"),
    Discrepancy(2, 26, "b2", "13", "12"),
    Discrepancy(2, 42, "weights", "1 2 5 6 6", "1 4 5 6 6", "printed weights sum to 20, not 22"),
    Discrepancy(2, 84, "b2", "6", "4"),
)

WEIGHT_ERRATA: Dict[Tuple[int, int, Tuple[int, ...]], Tuple[int, ...]] = {
    (d.codim, d.id, tuple(int(x) for x in d.printed.split())): tuple(int(x) for x in d.computed.split())
    for d in DOCUMENTED_DISCREPANCIES
    if d.field == "weights"
}

_DOCUMENTED_KEYS = {d.key(): d for d in DOCUMENTED_DISCREPANCIES}


@dataclass(frozen=True)
class CatalogRow:
    id: int
    codim: int
    ws: WeightSystem
    expected_basket: Basket
    expected_b2: int
    printed_ws: WeightSystem

    @property
    def corrected(self) -> bool:
        return self.ws != self.printed_ws


# ---------- quasismoothness and enumeration ----------

def quasismooth_codim1(ws: WeightSystem) -> bool:
    """
    For every nonempty index set I: some degree-d monomial lives on the I
    variables, or at least |I| distinct outside variables x_e admit a
    degree-d monomial x_e * (monomial in the I variables).
    """
    if ws.codim != 1:
        raise ValueError(f"{ws.label}: quasismoothness criterion is for hypersurfaces")
    w, d = ws.weights, ws.degrees[0]
    n = len(w)
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            w_I = tuple(w[i] for i in subset)
            if is_representable(w_I, d):
                continue
            outside = [e for e in range(n) if e not in subset]
            linear = sum(1 for e in outside if is_representable(w_I, d - w[e]))
            if linear < size:
                return False
    return True


def _is_census_member(ws: WeightSystem) -> bool:
    d = ws.degrees[0]
    if not is_well_formed(ws.weights) or d in ws.weights:
        return False
    if not quasismooth_codim1(ws):
        return False
    try:
        analyze(ws)
    except AnalysisError as e:
        logger.debug("%s dropped: %s", ws.label, e)
        return False
    return True


def _enumerate_smallest(w0: int, max_weight: int) -> List[WeightSystem]:
    found = []
    for w1 in range(w0, max_weight + 1):
        for w2 in range(w1, max_weight + 1):
            for w3 in range(w2, max_weight + 1):
                ws = WeightSystem(weights=(w0, w1, w2, w3), degrees=(w0 + w1 + w2 + w3,))
                if _is_census_member(ws):
                    found.append(ws)
    return found


def enumerate_codim1(max_weight: int, jobs: int = DEFAULT_JOBS) -> List[WeightSystem]:
    """Quasismooth well-formed K3 hypersurfaces with Du Val basket and weights up to max_weight."""
    if max_weight < 1:
        raise ValueError(f"max_weight must be >= 1, got {max_weight}")
    chunks = fan_out(partial(_enumerate_smallest, max_weight=max_weight), range(1, max_weight + 1), jobs)
    systems = sorted({ws for chunk in chunks for ws in chunk}, key=lambda ws: ws.weights)
    logger.info("enumeration up to weight %d: %d systems", max_weight, len(systems))
    return systems


# ---------- catalog ingestion ----------

def _column(text: str, field_index: int, offset: int = 0) -> int:
    return sum(len(f) + 1 for f in text.split(",")[:field_index]) + offset + 1


def _parse_int(value: str, name: str, line: int, text: str, index: int) -> int:
    try:
        return int(value.strip())
    except ValueError:
        raise CatalogParseError(f"{name} must be an integer, got {value!r}", line, _column(text, index))


def _parse_ints(value: str, name: str, line: int, text: str, index: int) -> Tuple[int, ...]:
    try:
        values = tuple(int(x) for x in value.split())
    except ValueError:
        raise CatalogParseError(f"{name} must be space-separated integers, got {value!r}", line, _column(text, index))
    if not values:
        raise CatalogParseError(f"{name} is empty", line, _column(text, index))
    return values


def _parse_row(record: Dict[str, str], line: int, text: str) -> CatalogRow:
    row_id = _parse_int(record["id"], "id", line, text, 0)
    codim = _parse_int(record["codim"], "codim", line, text, 1)
    if codim not in (1, 2):
        raise CatalogParseError(f"codim must be 1 or 2, got {codim}", line, _column(text, 1))
    weights = _parse_ints(record["weights"], "weights", line, text, 2)
    degrees = _parse_ints(record["degrees"], "degrees", line, text, 3)
    if len(degrees) != codim:
        raise CatalogParseError(f"codim {codim} needs {codim} degrees, got {len(degrees)}", line, _column(text, 3))
    if len(weights) != codim + 3:
        raise CatalogParseError(f"codim {codim} needs {codim + 3} weights, got {len(weights)}", line, _column(text, 2))
    if any(x < 1 for x in weights + degrees):
        raise CatalogParseError("weights and degrees must be positive", line, _column(text, 2))
    try:
        basket = Basket.parse(record["basket"])
    except BasketSyntaxError as e:
        leading = len(record["basket"]) - len(record["basket"].lstrip())
        raise CatalogParseError(str(e), line, _column(text, 4, leading + e.offset))
    b2 = _parse_int(record["b2"], "b2", line, text, 5)

    printed = WeightSystem.of(weights, degrees)
    effective = printed
    corrected = WEIGHT_ERRATA.get((codim, row_id, printed.weights))
    if corrected is not None:
        effective = WeightSystem.of(corrected, degrees)
        logger.info("row %d: printed weights %s replaced by %s", row_id, printed.weights, effective.weights)
    return CatalogRow(
        id=row_id,
        codim=codim,
        ws=effective,
        expected_basket=basket,
        expected_b2=b2,
        printed_ws=printed,
    )


def load_catalog(path: str) -> List[CatalogRow]:
    """
    Parse a catalog file: header ``id,codim,weights,degrees,basket,b2``
    (extra trailing columns allowed), ``#`` comment lines skipped.
    """
    lines = read_lines(path)
    numbered = [(n, text) for n, text in enumerate(lines, 1) if text.strip() and not text.lstrip().startswith("#")]
    if not numbered:
        raise CatalogParseError("catalog is empty", 1, 1)
    header_line, header = numbered[0]
    columns = [c.strip() for c in header.split(",")]
    if columns[:len(CATALOG_COLUMNS)] != CATALOG_COLUMNS:
        bad = next((i for i, c in enumerate(CATALOG_COLUMNS) if i >= len(columns) or columns[i] != c), 0)
        raise CatalogParseError(
            f"header must start with {','.join(CATALOG_COLUMNS)}", header_line, _column(header, bad)
        )
    for n, text in numbered[1:]:
        count = len(text.split(","))
        if count != len(columns):
            at = min(count, len(columns))
            raise CatalogParseError(f"expected {len(columns)} fields, found {count}", n, _column(text, at))

    frame = read_csv_frame(path)
    if len(frame) != len(numbered) - 1:
        raise CatalogParseError(f"read {len(frame)} rows from {len(numbered) - 1} data lines", header_line, 1)

    rows: List[CatalogRow] = []
    seen: Dict[Tuple[int, int], int] = {}
    for (n, text), record in zip(numbered[1:], frame.to_dict(orient="records")):
        row = _parse_row(record, n, text)
        if (row.codim, row.id) in seen:
            raise CatalogParseError(f"duplicate id {row.id} (first on line {seen[(row.codim, row.id)]})", n, 1)
        seen[(row.codim, row.id)] = n
        rows.append(row)
    logger.info("loaded %d rows from %s", len(rows), path)
    return rows


def bundled_catalog(name: str) -> List[CatalogRow]:
    return load_catalog(get_catalog_path(name))


# ---------- verification ----------

@dataclass(frozen=True)
class RowVerdict:
    row: CatalogRow
    status: str
    record: Optional[K3Record] = None
    error: Optional[Dict] = None
    discrepancies: Tuple[Discrepancy, ...] = ()

    @property
    def computed_basket(self) -> Optional[Basket]:
        return self.record.basket if self.record else None

    @property
    def computed_b2(self) -> Optional[int]:
        return self.record.b2_orbifold if self.record else None

    @property
    def documented(self) -> bool:
        return all(d.key() in _DOCUMENTED_KEYS for d in self.discrepancies)

    @property
    def note(self) -> str:
        if self.error:
            return f"{self.error['error']} at {tuple(self.error['indices'])}"
        return "; ".join(
            f"{d.field} printed {d.printed}, computed {d.computed}" + ("" if d.key() in _DOCUMENTED_KEYS else " (undocumented)")
            for d in self.discrepancies
        )


def verify_row(row: CatalogRow) -> RowVerdict:
    found: List[Discrepancy] = []
    if row.corrected:
        found.append(Discrepancy(row.codim, row.id, "weights", row.printed_ws.weights_str(), row.ws.weights_str()))
    basket, error = try_analyze(row.ws)
    if error is not None:
        return RowVerdict(row=row, status=ERROR, error=error.to_dict(), discrepancies=tuple(found))
    record = build_record(row.ws, basket)

    status = MATCH
    if not record.basket.same_as(row.expected_basket):
        status = BASKET_DIFF
        found.append(Discrepancy(row.codim, row.id, "basket", row.expected_basket.canonical(), record.basket.canonical()))
    if record.b2_orbifold != row.expected_b2:
        status = status if status == BASKET_DIFF else B2_DIFF
        found.append(Discrepancy(row.codim, row.id, "b2", str(row.expected_b2), str(record.b2_orbifold)))
    return RowVerdict(row=row, status=status, record=record, discrepancies=tuple(found))


@dataclass
class VerificationReport:
    verdicts: List[RowVerdict] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.verdicts)

    @property
    def codims(self) -> List[int]:
        return sorted({v.row.codim for v in self.verdicts})

    def select(self, codim: Optional[int] = None) -> List[RowVerdict]:
        return [v for v in self.verdicts if codim is None or v.row.codim == codim]

    def counts(self, codim: Optional[int] = None) -> Dict[str, int]:
        c = {s: 0 for s in STATUSES}
        for v in self.select(codim):
            c[v.status] += 1
        return c

    def realized_b2_orbifold(self, codim: Optional[int] = None) -> List[int]:
        return sorted({v.record.b2_orbifold for v in self.select(codim) if v.record})

    def realized_b2_link(self, codim: Optional[int] = None) -> List[int]:
        return sorted({v.record.b2_link for v in self.select(codim) if v.record})

    def rows_with_b2_orbifold(self, b2: int, codim: Optional[int] = None) -> List[int]:
        return [v.row.id for v in self.select(codim) if v.record and v.record.b2_orbifold == b2]

    @property
    def discrepancies(self) -> List[Discrepancy]:
        return [d for v in self.verdicts for d in v.discrepancies]

    @property
    def undocumented(self) -> List[Discrepancy]:
        return [d for d in self.discrepancies if d.key() not in _DOCUMENTED_KEYS]

    def moduli_agreement(self) -> Tuple[int, int]:
        """(agreeing, compared) hypersurface rows for 2(h0 - sum h0) against 2(k - 2)."""
        compared = [v.record for v in self.verdicts if v.record and v.record.moduli_dim_polynomial is not None]
        agree = sum(1 for r in compared if r.moduli_dim_polynomial == r.moduli_dim)
        return agree, len(compared)

    @property
    def passed(self) -> bool:
        """No analysis errors and every basket mismatch is a documented one."""
        return all(
            v.status in (MATCH, B2_DIFF) or (v.status == BASKET_DIFF and v.documented)
            for v in self.verdicts
        )


def verify_catalog(rows: Sequence[CatalogRow], jobs: int = DEFAULT_JOBS) -> VerificationReport:
    verdicts = sorted(fan_out(verify_row, rows, jobs), key=lambda v: (v.row.codim, v.row.id))
    report = VerificationReport(verdicts=verdicts)
    for d in report.undocumented:
        logger.warning("undocumented discrepancy: %s", d.describe())
    logger.info("verified %d rows: %s", len(report), report.counts())
    return report


# ---------- classification ----------

FULL_LINK_RANGE = tuple(range(3, K3_SECOND_BETTI))


@dataclass(frozen=True)
class Classification:
    realized_k: Tuple[int, ...]
    realized_k_by_codim: Dict[int, Tuple[int, ...]]
    suppliers: Dict[int, Tuple[Tuple[int, int], ...]]

    @property
    def complete(self) -> bool:
        return self.realized_k == FULL_LINK_RANGE

    @property
    def missing(self) -> Tuple[int, ...]:
        return tuple(k for k in FULL_LINK_RANGE if k not in self.realized_k)


def classify(report: VerificationReport) -> Classification:
    """Which k in #k(S2xS3) the verified rows realize, and by which (codim, id)."""
    suppliers: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for v in report.verdicts:
        if v.record:
            suppliers[v.record.k].append((v.row.codim, v.row.id))
    return Classification(
        realized_k=tuple(sorted(suppliers)),
        realized_k_by_codim={c: tuple(report.realized_b2_link(c)) for c in report.codims},
        suppliers={k: tuple(sorted(s)) for k, s in sorted(suppliers.items())},
    )
