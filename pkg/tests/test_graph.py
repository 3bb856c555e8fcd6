import random

import pytest
from hypothesis import given, settings, strategies as st

from critgraph.graph import (
    MAX_VERTICES,
    CapacityError,
    Graph,
    Graph6Error,
    GraphError,
    all_labeled_graphs,
    from_graph6,
    iter_bits,
    read_graph6_lines,
    to_graph6,
    to_mask,
)
from conftest import diamond


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def test_add_vertex():
    assert Graph.complete(3).add_vertex({0, 1, 2}) == Graph.complete(4)
    two = Graph(1).add_vertex(0)
    assert two.n == 2 and two.num_edges() == 0
    assert Graph.path(5).add_vertex({4}) == Graph.path(6)


def test_add_vertex_capacity():
    with pytest.raises(CapacityError):
        Graph.empty(MAX_VERTICES).add_vertex(0)


def test_delete():
    assert Graph.complete(4).delete_vertex(3) == Graph.complete(3)
    assert Graph.complete(4).delete_edge(0, 1) == Graph.from_edges(
        4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    for v in range(5):
        assert Graph.cycle(5).delete_vertex(v).num_edges() == 3
        assert max(Graph.cycle(5).delete_vertex(v).degrees()) == 2


def test_induced():
    assert Graph.complete(4).induced({0, 1, 2}) == Graph.complete(3)
    assert diamond().induced({0, 2, 3}) == Graph.from_edges(3, [(0, 1), (0, 2)])


def test_induced_identity(fx):
    g = fx["F18"]
    assert g.induced(g.vertex_mask) == g


def test_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphError):
        Graph(1, [1])
    with pytest.raises(CapacityError):
        Graph(MAX_VERTICES + 1)


def test_graph6_known():
    assert to_graph6(Graph.complete(4)) == "C~"
    assert to_graph6(Graph.empty(5)) == "D??"
    assert from_graph6("C~") == Graph.complete(4)


def test_graph6_errors():
    with pytest.raises(Graph6Error):
        from_graph6("C")
    with pytest.raises(Graph6Error):
        from_graph6("C~~")
    with pytest.raises(Graph6Error) as err:
        from_graph6("C\x07")
    assert err.value.offset == 1


def test_graph6_round_trip_random():
    rng = random.Random(7)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        assert from_graph6(to_graph6(g)) == g


@given(graphs())
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_read_lines_skips_blank():
    assert list(read_graph6_lines(["C~\n", "\n", "D??\n"])) == [Graph.complete(4), Graph.empty(5)]


@given(graphs(), st.randoms())
def test_relabel_preserves_degrees(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    h = g.relabel(order)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert h.num_edges() == g.num_edges()


@given(graphs(max_n=8))
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.num_edges() + g.complement().num_edges() == g.n * (g.n - 1) // 2


def test_bits():
    assert list(iter_bits(0b10110)) == [1, 2, 4]
    assert to_mask([1, 2, 4]) == 0b10110


def test_all_labeled_graphs_count():
    assert sum(1 for _ in all_labeled_graphs(4)) == 64
