"""Report serialization: JSON with fixed float formatting, and CSV."""

from __future__ import annotations

import csv
import io
import json
import math
from datetime import datetime, timezone
from typing import Any, Iterable, Optional

from .inequalities import CheckResult

CHECK_COLUMNS = (
    "graph_index",
    "graph6",
    "theorem",
    "case",
    "alpha",
    "beta",
    "lambda",
    "mu",
    "p",
    "variant",
    "lhs",
    "rhs",
    "slack",
    "verdict",
    "strict",
    "tightness_predicted",
    "tightness_observed",
    "note",
)


def format_float(x: float) -> str:
    """17 significant digits, enough for an exact round trip."""
    if not math.isfinite(x):
        return "null"
    s = format(x, ".17g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float rendered by :func:`format_float`.

    Key order is preserved, so equal inputs give byte-identical output.
    """
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def check_row(r: CheckResult) -> dict:
    return {
        "graph_index": r.graph_index,
        "graph6": r.graph,
        "theorem": r.theorem,
        "case": r.case,
        "alpha": r.params.get("alpha"),
        "beta": r.params.get("beta"),
        "lambda": r.params.get("lambda"),
        "mu": r.params.get("mu"),
        "p": r.params.get("p"),
        "variant": r.variant,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "slack": r.slack,
        "verdict": r.verdict.value,
        "strict": r.strict,
        "tightness_predicted": r.tightness_predicted,
        "tightness_observed": r.tightness_observed,
        "note": r.note,
    }


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def to_csv(rows: Iterable[dict], columns: Optional[Iterable[str]] = None) -> str:
    rows = list(rows)
    if columns is None:
        columns = list(rows[0]) if rows else []
    columns = list(columns)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_csv_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def to_text(rows: Iterable[dict], columns: Optional[Iterable[str]] = None) -> str:
    rows = list(rows)
    if columns is None:
        columns = list(rows[0]) if rows else []
    columns = list(columns)
    table = [columns] + [[_csv_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(columns))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table) + "\n"


def build_report(invocation: dict, summary: Any, rows: list, timestamp: bool = True) -> dict:
    report: dict = {"invocation": invocation}
    if timestamp:
        report["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    report["summary"] = summary
    report["rows"] = rows
    return report
