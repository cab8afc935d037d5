"""Operator/state file format.

A JSON document::

    {"rows": 2, "cols": 2, "re": [[0, 0], [0, 0]], "im": [[0, -1], [1, 0]]}

``im`` may be omitted (all zeros). Numbers are written with 15
significant digits.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .cspace import ComplexOp


class OperatorFileError(Exception):
    """Malformed operator document; message carries line/field context."""


def _matrix(doc: dict, key: str, rows: int, cols: int) -> np.ndarray:
    value = doc[key]
    if not isinstance(value, list) or len(value) != rows:
        raise OperatorFileError(f"field {key!r}: expected {rows} rows")
    out = np.zeros((rows, cols))
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            raise OperatorFileError(f"field {key!r}, row {i}: expected {cols} entries")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise OperatorFileError(f"field {key!r}, row {i}, column {j}: {v!r} is not a finite number")
            out[i, j] = v
    return out


def loads(text: str) -> ComplexOp:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OperatorFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise OperatorFileError("top level must be an object with rows, cols, re[, im]")
    for key in ("rows", "cols", "re"):
        if key not in doc:
            raise OperatorFileError(f"missing field {key!r}")
    rows, cols = doc["rows"], doc["cols"]
    for key, v in (("rows", rows), ("cols", cols)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise OperatorFileError(f"field {key!r}: expected a positive integer, got {v!r}")
    re = _matrix(doc, "re", rows, cols)
    im = _matrix(doc, "im", rows, cols) if doc.get("im") is not None else np.zeros((rows, cols))
    return ComplexOp(re, im)


def load(path) -> ComplexOp:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise OperatorFileError(f"{path}: {exc.strerror}") from None
    try:
        return loads(text)
    except OperatorFileError as exc:
        raise OperatorFileError(f"{path}: {exc}") from None


def _num(x: float):
    v = float(f"{x:.15g}")
    if v == 0:
        return 0.0
    return v


def dumps(op: ComplexOp) -> str:
    rows, cols = op.shape
    doc = {
        "rows": rows,
        "cols": cols,
        "re": [[_num(v) for v in row] for row in op.re],
        "im": [[_num(v) for v in row] for row in op.im],
    }
    return json.dumps(doc)
