"""Bit-stable writers for run results.

Floats are serialized with Python's shortest round-trip repr, so re-reading
a file reproduces the exact binary values and identical runs produce
byte-identical files. CSV output follows RFC 4180 (UTF-8, header row, CRLF
line endings); JSON uses sorted keys.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

import numpy as np

__all__ = ["format_cell", "render_csv", "write_csv", "render_json", "write_json"]


def format_cell(value) -> str:
    if isinstance(value, bool) or isinstance(value, np.bool_):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)  # default dialect: RFC 4180 quoting, CRLF
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buf.getvalue()


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_csv(header, rows))


def _jsonable(obj):
    if isinstance(obj, dict):
        return {key: _jsonable(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(val) for val in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(val) for val in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, complex):
        return {"im": obj.imag, "re": obj.real}
    return obj


def render_json(document: dict) -> str:
    return json.dumps(_jsonable(document), indent=2, sort_keys=True) + "\n"


def write_json(path, document: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_json(document))
