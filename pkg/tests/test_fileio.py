import hashlib
import json
import os

import pytest
from hypothesis import given, settings

from graphs import g3, signed_graphs
from signedcc.errors import GraphFileError
from signedcc.fileio import dump_report, parse_graph, read_graph, serialize_graph, write_atomic


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=9))
def test_round_trip(g):
    text = serialize_graph(g, ["hello"])
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text), ["hello"]) == text


def test_parse_accepts_comments_blank_lines_and_unicode_minus():
    g = parse_graph("c a\n\np sg 3 2\nc b\ne 2 1 +\ne 3 2 −\n")
    assert g.signs == {(0, 1): 1, (1, 2): -1}


def test_edge_order_is_irrelevant():
    a = parse_graph("p sg 3 2\ne 1 2 +\ne 2 3 -\n")
    b = parse_graph("p sg 3 2\ne 3 2 -\ne 2 1 +\n")
    assert a == b


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("p sg 3\n", 1, "malformed header"),
        ("p graph 3 1\n", 1, "malformed header"),
        ("e 1 2 +\np sg 2 1\n", 1, "before header"),
        ("p sg 3 1\ne 1 2 *\n", 2, "sign"),
        ("p sg 3 1\ne 1 4 +\n", 2, "out of range"),
        ("p sg 3 1\ne 0 1 +\n", 2, "out of range"),
        ("p sg 3 2\ne 1 2 +\ne 2 1 -\n", 3, "duplicate"),
        ("p sg 3 1\ne 2 2 +\n", 2, "self-loop"),
        ("p sg 3 1\ne 1 x +\n", 2, "integer"),
        ("p sg 3 1\np sg 3 1\n", 2, "second header"),
        ("p sg 3 1\nq 1 2\n", 2, "unknown line"),
        ("p sg -3 0\n", 1, "non-negative"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(GraphFileError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}: ")
    assert fragment in str(info.value)


def test_count_and_header_errors():
    with pytest.raises(GraphFileError, match="declares 2 edges, found 1"):
        parse_graph("p sg 3 2\ne 1 2 +\n")
    with pytest.raises(GraphFileError, match="missing"):
        parse_graph("c only a comment\n")


def test_read_graph_checksum(tmp_path):
    path = tmp_path / "g.sg"
    data = serialize_graph(g3()).encode()
    path.write_bytes(data)
    g, digest = read_graph(str(path))
    assert g == g3() and digest == hashlib.sha256(data).hexdigest()
    path.write_bytes(b"\xff\xfe")
    with pytest.raises(GraphFileError, match="UTF-8"):
        read_graph(str(path))


def test_dump_report_is_stable():
    text = dump_report({"b": 1, "a": [1, 2]})
    assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    assert json.loads(text) == {"a": [1, 2], "b": 1}


def test_write_atomic_leaves_nothing_on_failure(tmp_path, monkeypatch):
    target = tmp_path / "out.json"
    write_atomic(str(target), "ok\n")
    assert target.read_text() == "ok\n"

    def boom(src, dst):
        raise OSError("disk full")

    monkeypatch.setattr(os, "replace", boom)
    with pytest.raises(OSError):
        write_atomic(str(target), "new\n")
    assert target.read_text() == "ok\n"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["out.json"]
