import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersurf.constructions import GENERATORS, torus_T9
from hypersurf.hypergraph import ThreeGraph
from hypersurf.io import ParseError, complex_host, format_3g, format_3gc, format_graph, format_json, parse_3g, parse_3gc, parse_graph
from hypersurf.toolkit import EdgeColouring

from .strategies import graphs, three_graphs

PARAMS = {"n": 12, "chi": 0, "c": 5, "k": 2}


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_generator_round_trip(name):
    fn, keys = GENERATORS[name]
    made = fn(*(PARAMS[k] for k in keys))
    H = made if isinstance(made, ThreeGraph) else complex_host(made)
    text = format_3g(H, ["generator: " + name])
    back = parse_3g(text)
    assert back.n == H.n and back.edges == H.edges
    assert format_3g(back, ["generator: " + name]) == text
    assert parse_3g(format_json(H)).edges == H.edges


@settings(max_examples=50)
@given(three_graphs(min_n=3, max_n=8))
def test_3g_round_trip(H):
    assert parse_3g(format_3g(H)).edges == H.edges


@settings(max_examples=50)
@given(graphs(max_n=10))
def test_graph_round_trip(G):
    back = parse_graph(format_graph(G))
    assert back.n == G.n and back.sorted_edges() == G.sorted_edges()


@settings(max_examples=30)
@given(st.data())
def test_3gc_round_trip(data):
    H = data.draw(three_graphs(min_n=3, max_n=7))
    cols = data.draw(st.lists(st.sampled_from("RGU"), min_size=H.m, max_size=H.m))
    c = EdgeColouring(H, dict(zip(H.sorted_edges(), cols)))
    H2, c2 = parse_3gc(format_3gc(c, ["note"]))
    assert H2.edges == H.edges and c2.colour_of == c.colour_of


def test_comments_and_blank_lines():
    H = parse_3g("# header\n\n4 2  # n m\n0 1 2\n\n1 2 3 # tail\n")
    assert H.sorted_edges() == [(0, 1, 2), (1, 2, 3)]


def test_vertex_order_normalised():
    assert parse_3g("3 1\n2 0 1\n").sorted_edges() == [(0, 1, 2)]


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("4\n0 1 2\n", 1),
        ("4 1\n0 1\n", 2),
        ("4 2\n0 1 2\n0 1 x\n", 3),
        ("4 1\n# c\n0 1 4\n", 3),
        ("4 1\n0 1 1\n", 2),
        ("4 2\n0 1 2\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_3g(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


def test_duplicate_and_bad_colour():
    with pytest.raises(ParseError):
        parse_3g("4 2\n0 1 2\n2 1 0\n")
    with pytest.raises(ParseError) as exc:
        parse_3gc("4 1\n0 1 2 B\n")
    assert exc.value.line == 2


def test_bad_json():
    with pytest.raises(ParseError):
        parse_3g('{"n": 4}')


def test_complex_host():
    H = complex_host(torus_T9())
    assert H.n == 9 and H.m == 18
