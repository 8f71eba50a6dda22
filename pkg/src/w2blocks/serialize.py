"""Rendering of library objects as JSON, CSV, plain text or DOT.

Every renderer is deterministic: keys keep insertion order, which the library
builds from fixed enumeration orders, and JSON is emitted compactly.
"""
from __future__ import annotations

import csv
import io
import json

from .alvis_curtis import ACMatrix
from .decomp import QuiverGraph
from .errors import InvalidArgument
from .matrix import LabeledMatrix

FORMATS = ("json", "csv", "text", "dot")


def to_plain(obj):
    """JSON-ready view of ``obj``: containers recurse, library types use ``to_json``."""
    if hasattr(obj, "to_json"):
        return to_plain(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(x) for x in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(to_plain(obj), separators=(",", ":"), ensure_ascii=False)


def _text(obj) -> str:
    if isinstance(obj, ACMatrix):
        return f"{obj.B} -> {obj.Bprime}\n{obj.matrix.to_text()}"
    if isinstance(obj, LabeledMatrix):
        return obj.to_text()
    if isinstance(obj, QuiverGraph):
        return "\n".join(f"{a} -- {b}" for a, b in obj.edges)
    plain = to_plain(obj)
    if isinstance(plain, list):
        return "\n".join(dumps(x) for x in plain)
    if isinstance(plain, dict):
        return "\n".join(f"{k}: {dumps(v)}" for k, v in plain.items())
    return dumps(plain)


def _csv(obj) -> str:
    if isinstance(obj, ACMatrix):
        obj = obj.matrix
    if isinstance(obj, LabeledMatrix):
        return obj.to_csv()
    if isinstance(obj, QuiverGraph):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["source", "target"])
        w.writerows([str(a), str(b)] for a, b in obj.edges)
        return buf.getvalue()
    plain = to_plain(obj)
    if isinstance(plain, list) and all(isinstance(x, list) for x in plain):
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(plain)
        return buf.getvalue()
    raise InvalidArgument("csv output is available for matrices, quivers and partition lists")


def render(obj, fmt: str = "json") -> str:
    """String form of ``obj`` in ``fmt``; always ends with a newline."""
    if fmt == "json":
        out = dumps(obj)
    elif fmt == "text":
        out = _text(obj)
    elif fmt == "csv":
        out = _csv(obj)
    elif fmt == "dot":
        if not isinstance(obj, QuiverGraph):
            raise InvalidArgument("dot output is only available for ext-quiver")
        out = obj.to_dot()
    else:
        raise InvalidArgument(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return out if out.endswith("\n") else out + "\n"
