"""Graph files (``p sg`` text format) and JSON result reports.

Graph file::

    c optional comment
    p sg <n> <m>
    e <u> <v> <+|->        (m lines, 1-based vertex ids)
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from collections.abc import Iterable

from .errors import GraphFileError, SignedGraphError
from .graph import NEGATIVE, POSITIVE, SignedGraph, build_graph

_SIGNS = {"+": POSITIVE, "-": NEGATIVE, "−": NEGATIVE}


def parse_graph(text: str) -> SignedGraph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFileError("second header line", lineno)
            if len(parts) != 4 or parts[1] != "sg":
                raise GraphFileError(f"malformed header {line!r}, expected 'p sg <n> <m>'", lineno)
            n, m = _nonneg(parts[2], lineno), _nonneg(parts[3], lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFileError("edge line before header", lineno)
            if len(parts) != 4:
                raise GraphFileError(f"malformed edge line {line!r}", lineno)
            u, v = _nonneg(parts[1], lineno), _nonneg(parts[2], lineno)
            if parts[3] not in _SIGNS:
                raise GraphFileError(f"sign must be '+' or '-', got {parts[3]!r}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFileError(f"vertex id out of range 1..{n}", lineno)
            edges.append((u - 1, v - 1, _SIGNS[parts[3]], lineno))
        else:
            raise GraphFileError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFileError("missing 'p sg <n> <m>' header")
    if len(edges) != m:
        raise GraphFileError(f"header declares {m} edges, found {len(edges)}")
    seen: dict[tuple[int, int], int] = {}
    for u, v, _, lineno in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFileError(f"duplicate edge {u + 1} {v + 1} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        if u == v:
            raise GraphFileError(f"self-loop at vertex {u + 1}", lineno)
    try:
        return build_graph(n, [(u, v, s) for u, v, s, _ in edges])
    except SignedGraphError as exc:
        raise GraphFileError(str(exc)) from exc


def _nonneg(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFileError(f"expected an integer, got {token!r}", lineno) from None
    if value < 0:
        raise GraphFileError(f"expected a non-negative integer, got {value}", lineno)
    return value


def serialize_graph(g: SignedGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p sg {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1} {'+' if s > 0 else '-'}" for u, v, s in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> tuple[SignedGraph, str]:
    """Parse a graph file; also return the sha256 of its bytes."""
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise GraphFileError(f"not UTF-8 text: {exc}") from None
    return parse_graph(text), hashlib.sha256(data).hexdigest()


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the same directory so failures leave nothing behind."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".signedcc-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def one_based_edges(edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    return [[u + 1, v + 1] for u, v in edges]
