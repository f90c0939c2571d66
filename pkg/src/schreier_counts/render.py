"""Text renderings of tables, sequences and polynomials.

All renderers return strings that end in exactly one newline and carry no
trailing whitespace on any line.
"""
from __future__ import annotations

import csv
import io
import json

from .polynomial import IntPolynomial
from .sets import SchreierError
from .tables import CountSequence, RTable, table_from_rows

TABLE_FORMATS = ("pretty", "csv", "json")
SEQUENCE_FORMATS = ("pretty", "csv", "json", "bfile")
POLY_FORMATS = ("pretty", "json")


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def table_csv(table: RTable) -> str:
    # cells with d >= n do not exist and are left blank
    N = table.N
    rows = [["n\\d"] + [str(d) for d in range(N)]]
    for n, row in enumerate(table.rows, start=1):
        rows.append([str(n)] + [str(x) for x in row] + [""] * (N - n))
    return _csv(rows)


def table_json(table: RTable) -> str:
    return json.dumps({"k": table.k, "N": table.N, "rows": [list(r) for r in table.rows]}) + "\n"


def table_pretty(table: RTable) -> str:
    N = table.N
    head = "n\\d"
    width = max([len(str(x)) for row in table.rows for x in row] + [len(str(N - 1))])
    label_width = max(len(head), len(str(N)))
    lines = [f"{head:>{label_width}} | " + " ".join(f"{d:>{width}}" for d in range(N))]
    lines.append("-" * (label_width + 1) + "+" + "-" * (len(lines[0]) - label_width - 2))
    for n, row in enumerate(table.rows, start=1):
        lines.append(f"{n:>{label_width}} | " + " ".join(f"{x:>{width}}" for x in row))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_table(table: RTable, fmt: str) -> str:
    if fmt == "csv":
        return table_csv(table)
    if fmt == "json":
        return table_json(table)
    if fmt == "pretty":
        return table_pretty(table)
    raise SchreierError(f"unknown table format {fmt!r}")


def load_table_json(text: str) -> RTable:
    """Parse the JSON written by :func:`table_json`."""
    try:
        obj = json.loads(text)
        k, rows = obj["k"], obj["rows"]
    except (ValueError, KeyError, TypeError) as exc:
        raise SchreierError(f"malformed table JSON: {exc}") from exc
    table = table_from_rows(k, rows)
    if "N" in obj and obj["N"] != table.N:
        raise SchreierError(f"table JSON says N={obj['N']} but has {table.N} rows")
    return table


def render_sequence(seq: CountSequence, fmt: str, k: int, engine: str) -> str:
    values = seq.values
    if fmt == "pretty":
        return " ".join(str(v) for v in values) + "\n"
    if fmt == "bfile":
        return "".join(f"{n} {v}\n" for n, v in enumerate(values, start=1))
    if fmt == "csv":
        return _csv([["n", seq.label]] + [[n, v] for n, v in enumerate(values, start=1)])
    if fmt == "json":
        return json.dumps({"k": k, "which": seq.label, "engine": engine, "values": list(values)}) + "\n"
    raise SchreierError(f"unknown sequence format {fmt!r}")


def render_poly(p: IntPolynomial, fmt: str) -> str:
    if fmt == "pretty":
        return f"{p}\n"
    if fmt == "json":
        return json.dumps(list(p.coeffs)) + "\n"
    raise SchreierError(f"unknown polynomial format {fmt!r}")
