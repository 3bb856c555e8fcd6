import random
from itertools import product

import pytest

from critgraph import tripod as T
from critgraph.canon import canonical_graph
from critgraph.coloring import colorable
from critgraph.detect import PATH, contains_induced
from critgraph.graph import Graph, iter_bits, to_graph6
from conftest import diamond, wheel


def brute_colorings(g, k=3):
    for c in product(range(k), repeat=g.n):
        if all(c[u] != c[v] for u, v in g.edges()):
            yield c


def test_grow_examples():
    tr = T.grow_maximal_tripod(Graph.complete(4), (0, 1, 2))
    assert tr.classes == (1, 2, 4)
    assert T.is_maximal(tr)
    tr = T.grow_maximal_tripod(diamond(), (0, 1, 2))
    assert tr.classes == (1, 2, 0b1100)
    assert tr.order == (0, 1, 2, 3)
    with pytest.raises(T.TripodError):
        T.grow_maximal_tripod(Graph.cycle(5), (0, 1, 2))


def test_neighbor_min():
    tr = T.grow_maximal_tripod(diamond(), (0, 1, 2))
    assert T.neighbor_min(tr, 0, 2) == 1
    assert T.neighbor_min(tr, 3, 1) == 0
    assert T.neighbor_min(tr, 2, 3) is None
    assert tr.t(3) == 1 and tr.t(0) == 0


def test_contract_examples():
    k4 = Graph.complete(4)
    tr = T.grow_maximal_tripod(k4, (0, 1, 2))
    with pytest.raises(T.TripodError, match="vertex 3"):
        T.contract_tripod(k4, tr)
    assert T.contract_tripod(k4, tr, strict=False) == k4
    tr = T.grow_maximal_tripod(diamond(), (0, 1, 2))
    assert T.contract_tripod(diamond(), tr) == Graph.complete(3)


def test_contract_rejects_non_maximal():
    tr = T.Tripod(diamond(), (1, 2, 4), (0, 1, 2))
    assert tr.is_valid()
    with pytest.raises(T.TripodError):
        T.contract_tripod(diamond(), tr)


def test_tripod_extension_examples(fx):
    assert T.is_tripod_extension(fx["F2"])
    assert T.is_tripod_extension(wheel(5))
    assert not T.is_tripod_extension(fx["F3"])
    assert T.is_tripod_extension(Graph.complete(4))
    x, tr = T.find_tripod_extension(fx["F2"])
    assert tr.is_valid() and tr.vertex_mask == fx["F2"].vertex_mask & ~(1 << x)


def tripods_in_fixtures(fx):
    for i, g in fx.items():
        hit = T.find_tripod_extension(g)
        if hit is not None:
            yield i, g, hit


def test_tripod_rigidity(fx):
    # every 3-coloring of a tripod is constant on each class
    for i, g, (x, tr) in tripods_in_fixtures(fx):
        if g.n > 10:
            continue
        h = g.induced(tr.vertex_mask)
        idx = list(iter_bits(tr.vertex_mask))
        for c in brute_colorings(h):
            for cls in tr.classes:
                assert len({c[idx.index(v)] for v in iter_bits(cls)}) == 1


def test_traversal_confluence(fx):
    rng = random.Random(11)
    for i, g, (x, tr) in tripods_in_fixtures(fx):
        base = T.traverse(tr, x)
        assert base[:3] == list(tr.root())
        for _ in range(10):
            other = T.traverse(tr, x, choose=rng.choice)
            assert set(other) == set(base)


def test_traversal_covers_tripod_of_critical_extension(fx):
    # in a 4-critical extension every tripod vertex is reached from the apex
    for i, g, (x, tr) in tripods_in_fixtures(fx):
        assert set(T.traverse(tr, x)) == set(iter_bits(tr.vertex_mask))


def test_thmG_examples(fx):
    assert T.check_thmG_assumptions(Graph.complete(4))
    assert T.check_thmG_assumptions(fx["F2"])
    # a vertex whose neighbor dominates another: K4 minus an edge
    assert not T.check_thmG_assumptions(diamond())


def random_instances(rng, count):
    made = 0
    while made < count:
        n = rng.randint(5, 11)
        p = rng.uniform(0.3, 0.7)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if contains_induced(g, PATH(6)):
            continue
        tris = list(T.triangles(g))
        if not tris:
            continue
        tr = T.grow_maximal_tripod(g, rng.choice(tris))
        outside = g.vertex_mask & ~tr.vertex_mask
        if any(all(g.adj[v] & c for c in tr.classes) for v in iter_bits(outside)):
            continue
        made += 1
        yield g, tr


def test_contraction_safety_sample():
    rng = random.Random(5)
    for g, tr in random_instances(rng, 50):
        h = T.contract_tripod(g, tr)
        assert not contains_induced(h, PATH(6))
        assert colorable(h, 3) == colorable(g, 3)


def start(family_size, pick=None):
    states = [s for s in T.start_states() if s.g.n == family_size]
    return states if pick is None else states[pick]


def test_start_states():
    sizes = [s.g.n for s in T.start_states()]
    assert sizes.count(5) == 4 and sizes.count(6) == 64 and sizes.count(7) == 2048
    prof = T.TripodProfile(6, 10)
    # the first family is feasible unless b1 sees both a2 and a3, which closes a K4
    for s in start(5):
        k4 = s.g.has_edge(4, 2) and s.g.has_edge(4, 3)
        assert T.feasible(s, prof) != k4


def test_feasible_rejects_path():
    s = start(5, 0)
    g = s.g
    # hang a path of length 5 off b1 through new vertices
    h = g
    last = 4
    for _ in range(5):
        h = h.add_vertex(1 << last)
        last = h.n - 1
    assert contains_induced(h, PATH(6))
    classes = (s.classes[0] | 1 << 5 | 1 << 7 | 1 << 9, s.classes[1] | 1 << 6, s.classes[2] | 1 << 8)
    bad = T.GenState(h, classes, s.ord + (5, 6, 7, 8, 9), s.act)
    assert not T.feasible(bad, T.TripodProfile(6, 12))


def test_feasible_rejects_two_apex_neighbors_in_a1():
    s = start(5, 0)
    g = s.g.add_vertex((1 << 0) | (1 << 2) | (1 << 3))  # new A1 vertex seen by x
    classes = (s.classes[0] | 1 << 5, s.classes[1], s.classes[2])
    bad = T.GenState(g, classes, s.ord + (5,), s.act)
    assert not T.feasible(bad, T.TripodProfile(6, 10))


def test_deactivation_only():
    # b1 already sees a2 and a3: its only child deactivates it
    for s in start(7):
        b1 = 4
        if s.g.has_edge(b1, 2) and s.g.has_edge(b1, 3) and s.act == 1 << b1 | 1 << 5 | 1 << 6:
            gen = T._Gen(T.TripodProfile(6, 10), T._Sink(T.TripodProfile(6, 10)))
            kids = list(gen._children(s, b1))
            assert len(kids) == 1
            assert kids[0].act == s.act & ~(1 << b1) and kids[0].g == s.g
            return
    raise AssertionError("no such start state")


def test_generator_finds_wheel():
    rep = T.tripod_gen(T.TripodProfile(6, 6))
    assert rep.found == [to_graph6(canonical_graph(wheel(5)))]


def test_generator_p7_small():
    rep = T.tripod_gen(T.TripodProfile(7, 8))
    assert rep.found_per_order == {6: 1, 7: 1, 8: 4}


def test_strict_and_loose_agree():
    a = T.tripod_gen(T.TripodProfile(6, 8, strict=True))
    b = T.tripod_gen(T.TripodProfile(6, 8, strict=False))
    assert a.found == b.found
    assert sum(a.nonprunable_per_order.values()) <= sum(b.nonprunable_per_order.values())
