import io

import networkx as nx
import pytest

from conftest import from_nx, random_graph, to_nx
from domlab import families as fam
from domlab.graph import graph_from_edges
from domlab.graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6, write_graph6


def test_reference_string_round_trips():
    g = parse_graph6("D?{")
    assert g.n == 5
    # networkx's reader is an independent graph6 implementation
    assert g == from_nx(nx.from_graph6_bytes(b"D?{"))
    assert emit_graph6(g) == "D?{"


def test_k2():
    assert emit_graph6(fam.complete(2)) == "A_"


def test_header_is_ignored():
    assert parse_graph6(">>graph6<<A_") == fam.complete(2)


@pytest.mark.parametrize("n", [0, 1, 2, 7, 62, 63, 64, 100])
def test_order_prefixes(n):
    g = fam.path(n) if n else graph_from_edges(0, [])
    text = emit_graph6(g)
    assert text.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert parse_graph6(text) == g


def test_thousand_random_round_trips(rng):
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 30))
        text = emit_graph6(g)
        assert parse_graph6(text) == g
        assert text.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@pytest.mark.parametrize(
    "line, offset",
    [
        ("D?", 2),  # short
        ("A_?", 2),  # trailing byte
        ("A`", 1),  # padding bit set
        ("A ", 1),  # invalid character
        ("", 0),
    ],
)
def test_malformed_lines_report_offset(line, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(line)
    assert info.value.offset == offset


def test_reader_reports_line_numbers():
    lines = io.StringIO(">>graph6<<A_\n\nD?{\nA`\n")
    it = read_graph6(lines)
    assert next(it)[0] == 1
    assert next(it)[0] == 3
    with pytest.raises(Graph6Error, match="line 4"):
        next(it)


def test_writer_emits_one_line_per_graph():
    out = io.StringIO()
    write_graph6([fam.complete(2), fam.cycle(5)], out)
    assert out.getvalue().splitlines() == ["A_", emit_graph6(fam.cycle(5))]
