"""Check records and JSON / CSV / table serialization.

Exact rationals serialize as ``"p/q"`` strings, never floats; floats are
numeric cross-check values and serialize as decimals with 12 significant digits.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

_RELATIONS = {
    "==": operator.eq,
    "<=": operator.le,
    ">=": operator.ge,
    "<": operator.lt,
    ">": operator.gt,
    "!=": operator.ne,
}


@dataclass(frozen=True)
class Check:
    name: str
    lhs: Any
    rhs: Any
    relation: str
    passed: bool


def compare(name: str, lhs, rhs, relation: str = "==", *, shown_lhs=None, shown_rhs=None) -> Check:
    """Evaluate ``lhs relation rhs`` exactly; ``shown_*`` override what is reported."""
    ok = bool(_RELATIONS[relation](lhs, rhs))
    return Check(
        name,
        lhs if shown_lhs is None else shown_lhs,
        rhs if shown_rhs is None else shown_rhs,
        relation,
        ok,
    )


def close(name: str, lhs: float, rhs: float, tol: float) -> Check:
    return Check(name, float(lhs), float(rhs), f"~{tol:g}", abs(float(lhs) - float(rhs)) <= tol)


def to_jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return float(f"{float(x):.12g}")
    if isinstance(x, Check):
        return {
            "name": x.name,
            "lhs": to_jsonable(x.lhs),
            "rhs": to_jsonable(x.rhs),
            "relation": x.relation,
            "pass": x.passed,
        }
    if dataclasses.is_dataclass(x):
        return {f.name: to_jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "__str__"):
        return str(x)
    raise TypeError(type(x))


def envelope(command: str, config, results, checks: list[Check]) -> dict:
    return {
        "command": command,
        "config": to_jsonable(config),
        "results": to_jsonable(results),
        "checks": [to_jsonable(c) for c in checks],
    }


def dumps_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _flatten(prefix: str, x, out: list):
    if isinstance(x, dict):
        for k, v in x.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(x, list) and x and all(isinstance(v, dict) for v in x):
        for idx, v in enumerate(x):
            _flatten(f"{prefix}[{idx}]", v, out)
    else:
        out.append((prefix, x if not isinstance(x, list) else " ".join(map(str, x))))


def dumps_csv(doc: dict) -> str:
    """Key/value rows for results, then one row per check."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    rows: list = []
    _flatten("", doc["results"], rows)
    w.writerow(["key", "value"])
    for k, v in rows:
        w.writerow([k, v])
    if doc["checks"]:
        w.writerow([])
        w.writerow(["check", "lhs", "relation", "rhs", "pass"])
        for c in doc["checks"]:
            w.writerow([c["name"], c["lhs"], c["relation"], c["rhs"], c["pass"]])
    return buf.getvalue()


def _is_records(x) -> bool:
    return (isinstance(x, list) and bool(x) and all(isinstance(v, dict) for v in x)
            and all(v.keys() == x[0].keys() for v in x))


def _columns(recs: list[dict]) -> list[str]:
    keys = list(recs[0])
    cells = [keys] + [[str(r[k]) for k in keys] for r in recs]
    widths = [max(len(row[i]) for row in cells) for i in range(len(keys))]
    return ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]


def dumps_table(doc: dict) -> str:
    lines = [f"== {doc['command']} =="]
    rows: list = []
    records = {}
    results = doc["results"]
    if isinstance(results, dict):
        records = {k: v for k, v in results.items() if _is_records(v)}
        results = {k: v for k, v in results.items() if k not in records}
    _flatten("", results, rows)
    if rows:
        width = max(len(k) for k, _ in rows)
        lines += [f"{k.ljust(width)}  {v}" for k, v in rows]
    for name, recs in records.items():
        lines.append(f"-- {name} --")
        lines += _columns(recs)
    for c in doc["checks"]:
        mark = "PASS" if c["pass"] else "FAIL"
        lines.append(f"[{mark}] {c['name']}: {c['lhs']} {c['relation']} {c['rhs']}")
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps_json(doc)
    if fmt == "csv":
        return dumps_csv(doc)
    if fmt == "table":
        return dumps_table(doc)
    raise ValueError(f"unknown format {fmt!r}")
