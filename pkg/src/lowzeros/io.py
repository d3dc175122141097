"""CSV and JSON output with a parameter header, and the matching CSV reader."""

from __future__ import annotations

import csv
import io as _io
import json
import math
import numbers
from typing import Any, Iterable, TextIO


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int,)) and not isinstance(v, bool):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return f"{v:.6e}"
    if isinstance(v, numbers.Integral):
        return str(int(v))
    if isinstance(v, numbers.Real):
        return _fmt(float(v))
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "item") and not isinstance(v, (str, bytes)):
        try:
            return _jsonable(v.item())
        except (TypeError, ValueError):
            pass
    if hasattr(v, "value") and not isinstance(v, (int, float, str, bool)):
        return v.value
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


def write_csv(rows: list[dict], params: dict, stream: TextIO) -> None:
    """Comment lines ``# key=value`` for every parameter, a header row, then the rows."""
    for k, v in params.items():
        stream.write(f"# {k}={v}\n")
    if not rows:
        return
    cols = list(rows[0].keys())
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_fmt(r.get(c, "")) for c in cols])


def write_json(rows: list[dict], params: dict, stream: TextIO) -> None:
    json.dump({"parameters": _jsonable(params), "rows": _jsonable(rows)}, stream, indent=2)
    stream.write("\n")


def write_text(rows: list[dict], params: dict, stream: TextIO) -> None:
    for k, v in params.items():
        stream.write(f"# {k}={v}\n")
    for r in rows:
        stream.write("  ".join(f"{k}={_fmt(v)}" for k, v in r.items()) + "\n")


WRITERS = {"csv": write_csv, "json": write_json, "text": write_text}


def _parse(v: str) -> Any:
    if v in ("true", "false"):
        return v == "true"
    try:
        return int(v)
    except ValueError:
        pass
    try:
        return float(v)
    except ValueError:
        return v


def read_csv(source: str | TextIO) -> tuple[dict, list[dict]]:
    """Parse output of :func:`write_csv`; returns (parameters, rows)."""
    text = source.read() if hasattr(source, "read") else str(source)
    params: dict[str, str] = {}
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, val = line[1:].strip().partition("=")
            params[key] = val
        elif line.strip():
            body.append(line)
    if not body:
        return params, []
    reader = csv.DictReader(_io.StringIO("\n".join(body)))
    rows = [{k: _parse(v) for k, v in r.items()} for r in reader]
    return params, rows


def parse_range(text: str) -> list[float]:
    """``lo:hi:step`` (endpoints inclusive within 1e-12), a comma list, or a single value."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must be lo:hi:step, got {text!r}")
        lo, hi, step = (float(p) for p in parts)
        if step <= 0 or hi < lo:
            raise ValueError(f"bad range {text!r}")
        n = int(math.floor((hi - lo) / step + 1e-12))
        vals = [lo + k * step for k in range(n + 1)]
        if hi - vals[-1] > 1e-12 * max(1.0, abs(hi)):
            pass
        elif vals[-1] != hi:
            vals[-1] = hi
        return vals
    return [float(x) for x in text.split(",") if x.strip()]


def iter_rows(objs: Iterable[Any]) -> list[dict]:
    return [o.as_dict() if hasattr(o, "as_dict") else dict(o) for o in objs]
