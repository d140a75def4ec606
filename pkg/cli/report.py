# k3census/cli/report.py
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from engine.k3inv import K3Record
from utils.file_manager import write_text_atomic

RECORD_COLUMNS = [
    "weights",
    "degrees",
    "basket",
    "b2_orbifold",
    "b2_link",
    "link",
    "moduli_dim",
    "moduli_dim_polynomial",
    "dolgachev_dim",
    "period_domain",
]


@dataclass
class ReportDocument:
    """
    A table plus summary lines, rendered as csv, json or markdown.
    ``records`` are the json objects; ``table`` the flat rows behind csv/md.
    """
    fmt: str
    columns: List[str]
    table: List[Dict[str, Any]]
    records: List[Dict[str, Any]]
    summary: List[str] = field(default_factory=list)
    title: Optional[str] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def render(self) -> str:
        if self.fmt == "json":
            return self._json()
        if self.fmt == "csv":
            return self._csv()
        return self._markdown()

    def _frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.table, columns=self.columns)

    def _csv(self) -> str:
        text = self._frame().to_csv(index=False, lineterminator="\n")
        return text + "".join(f"# {line}\n" for line in self.summary)

    def _json(self) -> str:
        doc = {"records": self.records, "summary": self.summary}
        doc.update(self.extra)
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    def _markdown(self) -> str:
        parts = []
        if self.title:
            parts.append(f"## {self.title}\n")
        if self.table:
            parts.append(self._frame().to_markdown(index=False) + "\n")
        else:
            parts.append("_no rows_\n")
        if self.summary:
            parts.append("\n".join(f"- {line}" for line in self.summary) + "\n")
        return "\n".join(parts)


def record_row(record: K3Record) -> Dict[str, Any]:
    pq = record.period_quadric
    poly = record.moduli_dim_polynomial
    return {
        "weights": record.ws.weights_str(),
        "degrees": record.ws.degrees_str(),
        "basket": record.basket.canonical(),
        "b2_orbifold": record.b2_orbifold,
        "b2_link": record.b2_link,
        "link": record.link,
        "moduli_dim": record.moduli_dim,
        "moduli_dim_polynomial": "-" if poly is None else poly,
        "dolgachev_dim": record.dolgachev_dim,
        "period_domain": f"{pq.condition} in {pq.ambient}, dim_C {pq.complex_dim}",
    }


def render_error(fmt: str, error: Dict[str, Any]) -> str:
    if fmt == "json":
        return json.dumps(error, indent=2) + "\n"
    indices = " ".join(str(i) for i in error["indices"])
    if fmt == "csv":
        return pd.DataFrame([{**error, "indices": indices}], columns=["error", "indices", "message"]).to_csv(
            index=False, lineterminator="\n"
        )
    where = f" at ({indices})" if indices else ""
    return f"**error** `{error['error']}`{where}: {error['message']}\n"


def emit(text: str, output: Optional[str] = None):
    if output:
        write_text_atomic(output, text)
    else:
        sys.stdout.write(text)
