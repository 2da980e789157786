"""Reading and writing design files.

CSV: one sample per line, comma-separated coordinates, optional leading
``#`` comment lines. JSON: ``{"p": int, "n": int, "samples": [[...]], "meta": {}}``.
Coordinates are written with 17 significant digits, which round-trips every
float64 exactly.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .core import SampleSet, ValidationError


class DesignFormatError(ValueError):
    """Malformed design file; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


def format_float(x: float) -> str:
    return f"{x:.17g}"


def _check_value(text, line, col):
    try:
        value = float(text)
    except ValueError:
        raise DesignFormatError(f"column {col}: cannot parse {text.strip()!r} as a number", line)
    if not math.isfinite(value) or not 0.0 <= value < 1.0:
        raise DesignFormatError(f"column {col}: value {value!r} is outside [0, 1)", line)
    return value


def parse_csv(text: str) -> SampleSet:
    rows = []
    width = None
    in_header = True
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if in_header:
                continue
            raise DesignFormatError("comment lines are only allowed before the data", lineno)
        in_header = False
        fields = stripped.split(",")
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise DesignFormatError(f"expected {width} columns, found {len(fields)}", lineno)
        rows.append([_check_value(f, lineno, c) for c, f in enumerate(fields)])
    if not rows:
        raise DesignFormatError("no samples found")
    return SampleSet(np.array(rows, dtype=np.float64))


def parse_json(text: str) -> SampleSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DesignFormatError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict) or "samples" not in doc:
        raise DesignFormatError('expected an object with a "samples" array')
    samples = doc["samples"]
    if not isinstance(samples, list) or not samples:
        raise DesignFormatError('"samples" must be a non-empty array')
    width = None
    rows = []
    for i, row in enumerate(samples):
        if not isinstance(row, list):
            raise DesignFormatError(f"sample {i} is not an array")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DesignFormatError(f"sample {i} has {len(row)} coordinates, expected {width}")
        for c, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise DesignFormatError(f"sample {i}, column {c}: {v!r} is not a number")
        rows.append([float(v) for v in row])
    try:
        design = SampleSet(np.array(rows, dtype=np.float64))
    except ValidationError as exc:
        raise DesignFormatError(str(exc)) from None
    for key, actual in (("n", design.n), ("p", design.p)):
        if key in doc and doc[key] != actual:
            raise DesignFormatError(f'"{key}" is {doc[key]!r} but the samples give {actual}')
    return design


def read_design(path) -> SampleSet:
    """Load a design; ``.json`` files are parsed as JSON, anything else as CSV."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return parse_json(text)
    return parse_csv(text)


def dump_csv(design: SampleSet, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [",".join(format_float(x) for x in row) for row in design.data.tolist()]
    return "\n".join(lines) + "\n"


def dump_json(design: SampleSet, meta=None) -> str:
    doc = {
        "p": design.p,
        "n": design.n,
        "samples": design.data.tolist(),
        "meta": dict(meta or {}),
    }
    # json emits repr() floats, the shortest exact round-trip form
    return json.dumps(doc, indent=1) + "\n"


def write_design(design: SampleSet, path, meta=None) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        text = dump_json(design, meta)
    else:
        comments = [f"{k}: {v}" for k, v in (meta or {}).items()]
        text = dump_csv(design, comments)
    path.write_text(text)
