from itertools import product

import pytest
from hypothesis import assume, given, settings

from critgraph import corpus
from critgraph.canon import canonical_graph
from critgraph.coloring import (
    HullError,
    HullOracle,
    chromatic_number,
    count_colorings_up_to_permutation,
    find_similar_edges,
    find_similar_triangles,
    find_similar_vertices,
    is_k_colorable,
    is_k_critical,
    is_k_vertex_critical,
    is_proper,
    k_hull,
    solve,
)
from critgraph.detect import PATH
from critgraph.graph import Graph, all_labeled_graphs
from conftest import diamond, wheel
from test_graph import graphs


def brute_colorings(g, k):
    for c in product(range(k), repeat=g.n):
        if all(c[u] != c[v] for u, v in g.edges()):
            yield c


def brute_hull(g, k):
    cols = list(brute_colorings(g, k))
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if all(c[u] != c[v] for c in cols)]
    return Graph.from_edges(g.n, edges)


def two_triangles():
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


def test_colorable_examples(fx):
    assert not is_k_colorable(Graph.complete(4), 3)
    res = is_k_colorable(Graph.cycle(5), 3)
    assert res and is_proper(Graph.cycle(5), res.witness)
    assert set(res.witness) <= {1, 2, 3}
    assert not is_k_colorable(fx["F18"], 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_solver_matches_brute_force(n):
    for g in all_labeled_graphs(n):
        for k in (1, 2, 3):
            assert (solve(g.adj, g.vertex_mask, k) is not None) == corpus.brute_colorable(g, k)


def test_chromatic_numbers(fx):
    assert chromatic_number(Graph.complete(5)) == 5
    assert chromatic_number(Graph.cycle(7)) == 3
    for _, g in fx:
        assert chromatic_number(g) == 4


def test_hull_examples():
    assert k_hull(Graph.complete(3), 3) == Graph.complete(3)
    assert k_hull(Graph.path(4), 2) == Graph.path(4).add_edge(0, 3)
    assert k_hull(diamond(), 3) == diamond()
    with pytest.raises(HullError):
        k_hull(Graph.complete(4), 3)


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_hull_matches_brute_force(g):
    assume(corpus.brute_colorable(g, 3))
    assert k_hull(g, 3) == brute_hull(g, 3)


@given(graphs(max_n=10))
def test_hull_properties(g):
    assume(solve(g.adj, g.vertex_mask, 3) is not None)
    h = k_hull(g, 3)
    assert all(h.has_edge(u, v) for u, v in g.edges())
    assert solve(h.adj, h.vertex_mask, 3) is not None
    assert k_hull(h, 3) == h


@given(graphs(max_n=8))
def test_can_avoid(g):
    assume(solve(g.adj, g.vertex_mask, 3) is not None)
    o = HullOracle(g.adj, g.vertex_mask, 3)
    for v in range(g.n):
        for s in (0, g.adj[v], g.vertex_mask & ~(1 << v), 0b1011 & g.vertex_mask & ~(1 << v)):
            want = any(all(c[w] != c[v] for w in range(g.n) if s >> w & 1)
                       for c in brute_colorings(g, 3))
            assert o.can_avoid(v, s) == want


def test_criticality_examples(fx):
    assert is_k_critical(Graph.complete(4), 4)
    assert is_k_critical(Graph.cycle(5), 3)
    assert not is_k_critical(Graph.cycle(4), 3)
    assert is_k_critical(fx["F2"], 4)
    assert canonical_graph(fx["F2"]) == canonical_graph(wheel(5))
    assert is_k_critical(wheel(5), 4)
    assert not is_k_critical(wheel(6), 4)


def test_class_relative_criticality(fx):
    # F12 minus an edge stays 4-chromatic but gains an induced P6
    g = fx["F12"]
    assert not is_k_critical(g, 4)
    assert is_k_critical(g, 4, [PATH(6)])
    assert not is_k_critical(Graph.complete(5), 4, [PATH(6)])


@pytest.mark.parametrize("n", range(1, 6))
def test_criticality_matches_brute_force(n):
    for g in all_labeled_graphs(n):
        for k in (2, 3, 4):
            assert is_k_critical(g, k) == corpus.brute_is_critical(g, k)
            assert is_k_vertex_critical(g, k) == corpus.brute_is_vertex_critical(g, k)


def test_similar_vertices():
    assert find_similar_vertices(Graph.cycle(4), 3) == (0, 2)
    assert find_similar_vertices(Graph.complete(4), 3) is None
    assert find_similar_vertices(Graph.path(3), 3) == (0, 2)


def test_similar_edges():
    assert find_similar_edges(Graph.cycle(6), 3) == (0, 1, 4, 3)
    assert find_similar_edges(Graph.complete(4), 3) is None
    assert find_similar_edges(two_triangles(), 3) is None


def test_similar_triangles():
    assert find_similar_triangles(two_triangles(), 3) == (0, 1, 2, 3, 4, 5)
    assert find_similar_triangles(Graph.complete(4), 3) is None
    assert find_similar_triangles(Graph.cycle(5), 3) is None


def brute_similar_vertices(g, k):
    for u in range(g.n):
        h = g.delete_vertex(u)
        if not corpus.brute_colorable(h, k):
            continue
        hull = brute_hull(h, k)
        idx = [w for w in range(g.n) if w != u]
        for v in range(g.n):
            if v == u or g.has_edge(u, v):
                continue
            if all(hull.has_edge(idx.index(v), idx.index(w)) for w in g.neighbors(u)):
                return u, v
    return None


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_similar_vertices_brute_force(g):
    assume(corpus.brute_colorable(g, 3))
    assert find_similar_vertices(g, 3) == brute_similar_vertices(g, 3)


def test_count_colorings():
    assert count_colorings_up_to_permutation(Graph.complete(3), 3) == 1
    assert count_colorings_up_to_permutation(Graph.path(3), 2) == 1
    assert count_colorings_up_to_permutation(corpus.pokrovskiy(3).delete_vertex(0), 3) == 1
    assert count_colorings_up_to_permutation(Graph.cycle(5), 3) == 5


@given(graphs(max_n=7))
def test_count_matches_brute_force(g):
    perms = 6
    brute = sum(1 for _ in brute_colorings(g, 3))
    distinct = {tuple(sorted(tuple(v for v in range(g.n) if c[v] == i) for i in range(3)))
                for c in brute_colorings(g, 3)}
    assert count_colorings_up_to_permutation(g, 3) == len(distinct)
    assert brute <= perms * len(distinct)
