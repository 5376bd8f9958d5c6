import random

import pytest
from hypothesis import given, settings, strategies as st

from xjoin.graph import (
    Graph,
    GraphFormatError,
    closed_neighborhood,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    empty_graph,
    externally_related,
    is_clique,
    is_connected,
    is_independent,
    open_neighborhood,
    pair_externally_related,
    parse_edge_list,
    parse_graph6,
    path_graph,
    random_graph,
)

from conftest import small_graphs


def reference_graph6_decode(s):
    """Straight bit-string decoding, written independently of parse_graph6 (short form only)."""
    n = ord(s[0]) - 63
    bits = "".join(format(ord(ch) - 63, "06b") for ch in s[1:])
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    return n, sorted(edges)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


# -- edge list -------------------------------------------------------------

@pytest.mark.parametrize("text, expected", [
    ("n 2\n0 1", complete_graph(2)),
    ("n 3\n0 1\n1 2\n0 2", complete_graph(3)),
    ("n 4\n0 1\n1 2\n2 3\n3 0", cycle_graph(4)),
])
def test_parse_edge_list_examples(text, expected):
    assert parse_edge_list(text) == expected


def test_parse_edge_list_tolerates_duplicates_comments_and_orientation():
    text = "# a square\n\nn 4   # four vertices\n0 1\n1 0\n1 2\n2 3\n3 0\n0 3\n"
    g = parse_edge_list(text)
    assert g == cycle_graph(4)
    assert g.num_edges() == 4


@pytest.mark.parametrize("text, line", [
    ("n 3\n0 1\n1 1\n", 3),
    ("n 3\n0 3\n", 2),
    ("n 3\n0 1 2\n", 2),
    ("n 3\n0 x\n", 2),
    ("0 1\n", 1),
    ("# only\nm 3\n", 2),
])
def test_parse_edge_list_errors_name_the_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_edge_list_missing_header():
    with pytest.raises(GraphFormatError):
        parse_edge_list("# nothing here\n")


def test_edge_list_round_trip(rng):
    for _ in range(50):
        g = random_graph(rng.randint(0, 15), 0.4, rng)
        assert parse_edge_list(emit_edge_list(g)) == g


# -- graph6 ----------------------------------------------------------------

@pytest.mark.parametrize("code, expected", [
    ("A_", complete_graph(2)),
    ("Bw", complete_graph(3)),
    ("D??", empty_graph(5)),
])
def test_parse_graph6_hand_decoded(code, expected):
    n, edges = reference_graph6_decode(code)
    assert (n, edges) == (expected.n, expected.edges())
    assert parse_graph6(code) == expected


def test_emit_graph6_examples():
    assert emit_graph6(complete_graph(2)) == "A_"
    assert emit_graph6(empty_graph(1)) == "@"
    assert emit_graph6(empty_graph(0)) == "?"


def test_graph6_header_and_trailing_newline():
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize("bad", ["", "A", "A__", "B w", "A\x7f", "~~??????"])
def test_parse_graph6_rejects(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_long_form_round_trip():
    g = cycle_graph(100)
    code = emit_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g


def test_graph6_too_large_for_long_form():
    class Huge:
        n = 258048
    with pytest.raises(ValueError):
        emit_graph6(Huge())


def test_graph6_agrees_with_reference_decoder(rng):
    for _ in range(200):
        g = random_graph(rng.randint(1, 20), rng.random(), rng)
        assert reference_graph6_decode(emit_graph6(g)) == (g.n, g.edges())


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


# -- construction invariants -------------------------------------------------

@pytest.mark.parametrize("adjacency", [
    ((0,),),            # self-loop
    ((1,), ()),         # asymmetric
    ((2, 1), (0,), (0,)),  # unsorted
    ((5,),),            # out of range
])
def test_graph_rejects_invalid_adjacency(adjacency):
    with pytest.raises(ValueError):
        Graph(len(adjacency), adjacency)


def test_from_edges_rejects_self_loop():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_adjacency_is_symmetric_sorted_loop_free(g):
    for v, nbrs in enumerate(g.adjacency):
        assert v not in nbrs
        assert list(nbrs) == sorted(set(nbrs))
        assert all(v in g.adjacency[u] for u in nbrs)


# -- neighbourhoods and predicates ------------------------------------------

def test_open_neighborhood_examples():
    assert open_neighborhood(cycle_graph(4), 0) == (1, 3)
    assert open_neighborhood(complete_graph(1), 0) == ()
    assert open_neighborhood(complete_graph(4), 2) == (0, 1, 3)


def test_closed_neighborhood_examples():
    assert closed_neighborhood(cycle_graph(4), 0) == (0, 1, 3)
    assert closed_neighborhood(complete_graph(1), 0) == (0,)
    assert closed_neighborhood(path_graph(3), 1) == (0, 1, 2)


def test_neighborhood_index_errors():
    with pytest.raises(IndexError):
        open_neighborhood(cycle_graph(4), 4)
    with pytest.raises(IndexError):
        closed_neighborhood(cycle_graph(4), -1)


def test_clique_and_independent_examples():
    assert is_clique(complete_graph(4), [0, 1, 2])
    assert not is_clique(cycle_graph(4), [0, 1, 2])
    assert is_clique(cycle_graph(6), [5])
    assert is_independent(complete_bipartite_graph(2, 3), [2, 3, 4])
    assert not is_independent(complete_graph(3), [0, 1])
    assert is_independent(cycle_graph(6), [])


def test_externally_related_examples():
    k33 = complete_bipartite_graph(3, 3)
    for g in (k33, path_graph(3), cycle_graph(5)):
        assert externally_related(g, [])
        assert externally_related(g, [1])
        assert externally_related(g, range(g.n))
    assert externally_related(k33, [0, 1])
    assert not externally_related(path_graph(3), [0, 1])


def test_pair_externally_related_examples():
    assert pair_externally_related(cycle_graph(4), 0, 2)
    assert not pair_externally_related(cycle_graph(4), 0, 1)
    k3 = complete_graph(3)
    assert all(pair_externally_related(k3, x, y) for x in range(3) for y in range(3) if x != y)
    with pytest.raises(ValueError):
        pair_externally_related(k3, 1, 1)


def test_pair_lemma_small_exhaustive():
    for g in small_graphs(5):
        for x in range(g.n):
            for y in range(x + 1, g.n):
                assert pair_externally_related(g, x, y) == externally_related(g, [x, y])


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.data())
def test_clique_and_independent_only_overlap_on_tiny_sets(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    assert (is_clique(g, s) and is_independent(g, s)) == (len(s) <= 1)


def test_is_connected():
    assert is_connected(cycle_graph(5))
    assert not is_connected(empty_graph(2))
    assert is_connected(empty_graph(1))


def test_emit_dot():
    dot = emit_dot(path_graph(3))
    assert dot.startswith("graph G {")
    assert "  0 -- 1;" in dot and "  1 -- 2;" in dot
    assert 'label="x"' in emit_dot(complete_graph(1), labels=["x"])


def test_random_graph_is_seed_deterministic():
    a = random_graph(9, 0.5, random.Random(3))
    b = random_graph(9, 0.5, random.Random(3))
    assert a == b
