"""Reading polytope files and serializing reports.

Input format: blocks made of a header line ``a b [comment]`` followed by
``a`` rows of ``b`` integers. If ``a < b`` the rows are coordinates and the
columns are vertices (PALP style); otherwise (including ``a == b``) each row
is a vertex. Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from .errors import ParseError, StringyFanoError
from .polytope import LatticePolytope
from .stringy import StringyEFunction


@dataclass(frozen=True)
class PolytopeRecord:
    index: int
    source_line: int
    polytope: LatticePolytope
    label: str | None = None


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def parse_polytopes(text: str | bytes) -> list[PolytopeRecord]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    records = []
    pos = 0
    while pos < len(lines):
        lineno, header = lines[pos]
        tokens = header.split()
        if len(tokens) < 2:
            raise ParseError(f"expected a header 'rows cols', got {header!r}", lineno)
        a, b = _ints(tokens[:2], lineno)
        if a <= 0 or b <= 0:
            raise ParseError(f"block dimensions must be positive, got {a} {b}", lineno)
        label = " ".join(tokens[2:]).lstrip("#").strip() or None
        rows = []
        for k in range(a):
            if pos + 1 + k >= len(lines):
                raise ParseError(f"block ends after {k} of {a} rows", lineno)
            rline, row = lines[pos + 1 + k]
            values = _ints(row.split(), rline)
            if len(values) != b:
                raise ParseError(f"row has {len(values)} entries, expected {b}", rline)
            rows.append(values)
        vertices = [tuple(col) for col in zip(*rows)] if a < b else [tuple(r) for r in rows]
        try:
            polytope = LatticePolytope(tuple(vertices))
        except StringyFanoError as exc:
            raise ParseError(f"invalid polytope: {exc}", lineno) from exc
        records.append(PolytopeRecord(len(records), lineno, polytope, label))
        pos += 1 + a
    return records


def format_polytopes(records: Iterable[PolytopeRecord | LatticePolytope]) -> str:
    """Native text form with one vertex per row."""
    out = []
    for rec in records:
        P = rec.polytope if isinstance(rec, PolytopeRecord) else rec
        label = rec.label if isinstance(rec, PolytopeRecord) else None
        out.append(f"{len(P.vertices)} {P.dim}" + (f" {label}" if label else ""))
        out += [" ".join(str(x) for x in v) for v in P.vertices]
    return "\n".join(out) + ("\n" if out else "")


def rational_json(x) -> dict[str, str]:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational_json(obj)
    if isinstance(obj, StringyEFunction):
        return [{"alpha": rational_json(a), "psi": c} for a, c in obj.terms]
    if isinstance(obj, LatticePolytope):
        return [list(v) for v in obj.vertices]
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _text_value(obj: Any) -> str:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, StringyEFunction):
        return str(obj)
    if isinstance(obj, LatticePolytope):
        return str([list(v) for v in obj.vertices])
    if dataclasses.is_dataclass(obj):
        return ", ".join(f"{f.name}={_text_value(getattr(obj, f.name))}" for f in dataclasses.fields(obj))
    if isinstance(obj, dict):
        return ", ".join(f"{k}={_text_value(v)}" for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_text_value(v) for v in obj) + "]"
    return str(obj)


def _text_block(obj: Any, indent: str = "") -> list[str]:
    if dataclasses.is_dataclass(obj) and not isinstance(obj, (StringyEFunction, LatticePolytope)):
        lines = []
        for f in dataclasses.fields(obj):
            value = getattr(obj, f.name)
            if isinstance(value, (list, tuple)) and value and dataclasses.is_dataclass(value[0]):
                lines.append(f"{indent}{f.name}:")
                for item in value:
                    lines += _text_block(item, indent + "  ")
                    lines.append("")
            elif isinstance(value, dict):
                lines.append(f"{indent}{f.name}:")
                for k, v in value.items():
                    lines.append(f"{indent}  {k}: {_text_value(v)}")
            elif dataclasses.is_dataclass(value) and not isinstance(value, (StringyEFunction, LatticePolytope)):
                lines.append(f"{indent}{f.name}:")
                lines += _text_block(value, indent + "  ")
            else:
                lines.append(f"{indent}{f.name}: {_text_value(value)}")
        return lines
    if isinstance(obj, dict):
        return [f"{indent}{k}: {_text_value(v)}" for k, v in obj.items()]
    if isinstance(obj, (list, tuple)):
        lines = []
        for item in obj:
            lines += _text_block(item, indent)
            lines.append("")
        return lines
    return [indent + _text_value(obj)]


def _csv_rows(obj: Any) -> list[list[str]]:
    from .batch import BatchSummary, CheckResult
    if isinstance(obj, BatchSummary):
        results = obj.results
    elif isinstance(obj, CheckResult):
        results = [obj]
    elif isinstance(obj, (list, tuple)) and all(isinstance(r, CheckResult) for r in obj):
        results = list(obj)
    else:
        return [["value"], [json.dumps(to_jsonable(obj), sort_keys=True)]]
    rows = [["index", "label", "check", "status", "details"]]
    for r in results:
        rows.append([str(r.index), r.label or "", r.check, r.status,
                     json.dumps(to_jsonable(r.details), sort_keys=True, separators=(",", ":"))])
    return rows


def _summary_json(summary, include_results: bool) -> dict:
    names = [f.name for f in dataclasses.fields(summary)]
    if not include_results:
        names.remove("results")
    return {n: to_jsonable(getattr(summary, n)) for n in names}


def emit_report(obj: Any, fmt: str = "json", include_results: bool = False) -> bytes:
    """Serialize a report, list of reports or batch summary.

    Batch summaries list only failures in JSON unless ``include_results``.
    """
    from .batch import BatchSummary
    if fmt == "json":
        data = _summary_json(obj, include_results) if isinstance(obj, BatchSummary) else to_jsonable(obj)
        text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(_csv_rows(obj))
        text = buf.getvalue()
    elif fmt == "text":
        body = obj.to_text() if hasattr(obj, "to_text") else "\n".join(_text_block(obj))
        text = body.rstrip("\n") + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text.encode("utf-8")
