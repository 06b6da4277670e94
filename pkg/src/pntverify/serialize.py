"""Flat CSV/JSON writers with 17-significant-digit floats."""
from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction


def fmt_float(v: float) -> str:
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return "%.17g" % v


def _json_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return json.dumps(f"{v.numerator}/{v.denominator}")
    if isinstance(v, float):
        return fmt_float(v) if math.isfinite(v) else "null"
    if v is None:
        return "null"
    return json.dumps(str(v))


def dumps_object(obj: dict) -> str:
    return "{" + ",".join(f"{json.dumps(k)}:{_json_value(v)}" for k, v in obj.items()) + "}"


def dumps_array(rows: list[dict]) -> str:
    if not rows:
        return "[]"
    return "[\n" + ",\n".join(dumps_object(r) for r in rows) + "\n]"


def dumps_csv(columns: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt_float(r[c]) if isinstance(r[c], float) else r[c] for c in columns])
    return buf.getvalue()
