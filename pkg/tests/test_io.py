import json

import pytest

from probeint import (
    build_graph,
    is_interval_bigraph,
    is_interval_graph,
    recognize_qxl,
    verify_bigraph_rep,
    verify_interval_rep,
    verify_probe_rep,
)
from probeint.bigraphs import BigraphIntervals
from probeint.io import (
    ParseError,
    emit_certificate,
    matrix_to_text,
    parse_certificate,
    parse_input,
    parse_matrix,
    serialize_graph,
)

NET_JSON = """
{"vertices": ["a","b","c","d","e","f"],
 "edges": [["a","b"],["b","c"],["b","d"],["c","d"],["c","e"],["d","f"]],
 "nonprobes": ["e","f"]}
"""


def test_parse_json_graph():
    g = parse_input(NET_JSON, "auto")
    assert g.n == 6
    assert sorted(g.nonprobes) == [4, 5]


def test_parse_edgelist_with_headers():
    text = "#vertices: a b z\n#nonprobes: z\na b\nb c\n"
    g = parse_input(text, "auto")
    assert g.vertex_names == ("a", "b", "z", "c")
    assert g.nonprobes == frozenset({2})


def test_parse_edgelist_single_isolated_vertex():
    g = parse_input("#vertices: a\n", "edgelist")
    assert g.n == 1
    assert not g.edges


def test_parse_edgelist_malformed_line():
    with pytest.raises(ParseError, match="line 1"):
        parse_input("a\n", "edgelist")


def test_parse_matrix_round_trip(bigraph_a):
    text = matrix_to_text(bigraph_a)
    again = parse_matrix(text)
    assert again == bigraph_a
    assert matrix_to_text(again) == text


def test_parse_matrix_bad_symbol():
    with pytest.raises(ParseError, match="line 2"):
        parse_matrix("x y\nr 1 Q\n")


def test_parse_matrix_width_mismatch():
    with pytest.raises(ParseError, match="line 3"):
        parse_matrix("x y\nr 1 0\ns 1\n")


def test_auto_detects_matrix_vs_edgelist():
    matrix_text = "x\nr 1\n"
    assert parse_input(matrix_text, "auto").shape == (1, 1)
    edge_text = "a b\nc d\n"
    assert parse_input(edge_text, "auto").n == 4


def test_nonprobe_independence_error_names_edge():
    with pytest.raises(ValueError, match="nonprobes not independent: edge e-f"):
        parse_input(
            '{"edges": [["e","f"]], "nonprobes": ["e","f"]}', "json"
        )


def test_serialize_deterministic():
    g = parse_input(NET_JSON, "json")
    assert serialize_graph(g) == serialize_graph(g)
    again = parse_input(serialize_graph(g), "json")
    assert serialize_graph(again) == serialize_graph(g)


def test_interval_certificate_round_trip():
    g = build_graph([("a", "b"), ("b", "c")])
    cert = is_interval_graph(g)
    blob = emit_certificate(cert, "json")
    data = parse_certificate(blob)
    assert data["verdict"] == "yes"
    assert verify_interval_rep(g, data["intervals"])
    assert emit_certificate(cert, "json") == blob  # byte-identical


def test_probe_certificate_round_trip(c4_probe):
    cert = recognize_qxl(c4_probe)
    data = parse_certificate(emit_certificate(cert, "json"))
    assert data["route"] == "qxl"
    assert data["nonprobes"] == ["b", "d"]
    assert verify_probe_rep(c4_probe, data["intervals"])


def test_bigraph_certificate_round_trip(bigraph_a):
    cert = is_interval_bigraph(bigraph_a)
    data = parse_certificate(emit_certificate(cert, "json"))
    iv = BigraphIntervals(rows=data["row_intervals"], cols=data["col_intervals"])
    assert verify_bigraph_rep(bigraph_a, iv)


def test_no_certificate_serializes_witness(net):
    cert = recognize_qxl(net)
    data = json.loads(emit_certificate(cert, "json"))
    assert data["verdict"] == "no"
    assert data["witness"]["type"] == "exhausted"


def test_odd_cycle_witness_serializes_positions():
    from probeint import augmented_adjacency, ferrers_dim_le_2

    c4 = build_graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    cert = ferrers_dim_le_2(augmented_adjacency(c4))
    data = json.loads(emit_certificate(cert, "json"))
    assert data["verdict"] == "no"
    assert data["witness"]["type"] == "odd-cycle"
    assert len(data["witness"]["positions"]) % 2 == 1
    assert all(len(p) == 2 for p in data["witness"]["positions"])


def test_dot_output_golden(c4_probe):
    cert = recognize_qxl(c4_probe)
    dot = emit_certificate(cert, "dot", graph=c4_probe)
    lines = dot.splitlines()
    assert lines[0] == "graph {"
    assert lines[-1] == "}"
    assert any('"b"' in line and "style=dashed" in line for line in lines)
    assert any('"a"' in line and "style=dashed" not in line for line in lines)
    assert '  "a" -- "b";' in lines
    intervals = cert.intervals
    la, ra = intervals["a"]
    assert f'[{la},{ra}]' in dot
    # emission is deterministic
    assert emit_certificate(cert, "dot", graph=c4_probe) == dot


def test_dot_requires_graph(c4_probe):
    cert = recognize_qxl(c4_probe)
    with pytest.raises(ValueError, match="graph"):
        emit_certificate(cert, "dot")


def test_text_output_mentions_verdict(net):
    cert = recognize_qxl(net)
    text = emit_certificate(cert, "text")
    assert "verdict: no" in text
    assert "exhaustive" in text
