"""Fixture graphs F1-F24, the Pokrovskiy family and a brute-force oracle.

The oracle is intentionally independent of the fast modules: isomorphism
rejection goes through networkx (Weisfeiler-Lehman buckets plus VF2), and its
predicates use exhaustive color assignment and subset checks.
"""

from __future__ import annotations

import os
import re
from importlib import resources
from itertools import combinations, product
from typing import Callable, Iterator

from .graph import Graph, GraphError

FIXTURE_ENV = "CRITGRAPH_FIXTURES"

# orders of F1..F24
FIXTURE_ORDERS = {
    1: 4, 2: 6, 3: 7, 4: 7, 5: 8, 6: 8, 7: 8, 8: 9, 9: 9, 10: 9, 11: 9, 12: 10,
    13: 10, 14: 10, 15: 10, 16: 10, 17: 10, 18: 11, 19: 11, 20: 12, 21: 13,
    22: 13, 23: 13, 24: 16,
}
# 4-critical P6-free graphs per order
CRITICAL_P6_COUNTS = {4: 1, 6: 1, 7: 2, 8: 3, 9: 4, 10: 6, 11: 2, 12: 1, 13: 3, 16: 1}
VERTEX_CRITICAL_P6_COUNTS = {4: 1, 5: 0, 6: 1, 7: 7, 8: 6, 9: 16, 10: 34}
CRITICAL_P7_COUNTS = {4: 1, 5: 0, 6: 1, 7: 2, 8: 5, 9: 21, 10: 99}
P7_TRIPOD_EXTENSION_COUNTS = {6: 1, 7: 1, 8: 4}
DIAMOND_FREE = frozenset({1, 11, 14, 16, 18, 24})
TRIPOD_EXTENSIONS = frozenset({1, 2, 4, 6, 7, 9, 10, 17, 21, 22, 23})


class FixtureError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class IntegrityError(FixtureError):
    pass


_LINE = re.compile(r"^Graph\s+F(\d+)\s*:\s*\{(.*)\}\s*$")


def parse_adjacency_list(body: str, line: int | None = None) -> tuple[Graph, list[str]]:
    """Parse ``v : n1 n2 ...; v : ...``.  Returns the graph and repair notes.

    A vertex listed twice must repeat the same neighbors.  A vertex that is
    referenced but never listed gets its neighborhood by symmetric closure;
    such repairs are reported in the notes.  Asymmetry between two listed
    vertices is an integrity error.
    """
    rows: dict[int, set[int]] = {}
    notes = []
    for part in body.split(";"):
        part = part.strip()
        if not part:
            continue
        head, sep, tail = part.partition(":")
        if not sep:
            raise FixtureError(f"missing ':' in entry {part!r}", line)
        try:
            v = int(head)
            nbrs = {int(tok) for tok in tail.split()}
        except ValueError:
            raise FixtureError(f"non-integer vertex in entry {part!r}", line) from None
        if v in rows:
            if rows[v] != nbrs:
                raise IntegrityError(f"vertex {v} listed twice with different neighbors", line)
            notes.append(f"vertex {v} listed twice")
            continue
        rows[v] = nbrs
    if not rows:
        raise FixtureError("empty adjacency list", line)
    n = 1 + max(max(rows), max((u for s in rows.values() for u in s), default=0))
    for v in range(n):
        if v not in rows:
            notes.append(f"vertex {v} not listed; neighbors inferred")
    edges = set()
    for v, nbrs in rows.items():
        for u in nbrs:
            if u == v:
                raise IntegrityError(f"loop at vertex {v}", line)
            if u in rows and v not in rows[u]:
                raise IntegrityError(f"asymmetric adjacency between {v} and {u}", line)
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges)), notes


class FixtureSet:
    def __init__(self, graphs: dict[int, Graph], notes: dict[int, list[str]]):
        self.graphs = graphs
        self.notes = notes

    def __getitem__(self, key) -> Graph:
        if isinstance(key, str):
            key = int(key.lstrip("Ff"))
        return self.graphs[key]

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[tuple[str, Graph]]:
        for i in sorted(self.graphs):
            yield f"F{i}", self.graphs[i]

    def items(self):
        return sorted(self.graphs.items())


def fixture_text(path: str | None = None) -> str:
    path = path or os.environ.get(FIXTURE_ENV)
    if path:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    return resources.files("critgraph").joinpath("data/fixtures.txt").read_text("utf-8")


def load_fixtures(path: str | None = None) -> FixtureSet:
    graphs: dict[int, Graph] = {}
    notes: dict[int, list[str]] = {}
    for lineno, line in enumerate(fixture_text(path).splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            raise FixtureError("expected 'Graph F<k>: {...}'", lineno)
        idx = int(m.group(1))
        if idx in graphs:
            raise FixtureError(f"F{idx} defined twice", lineno)
        g, fixes = parse_adjacency_list(m.group(2), lineno)
        if fixes:
            # the only known defect is F1, whose repaired form must be K4
            if idx != 1 or g != Graph.complete(4):
                raise IntegrityError(f"F{idx} needs repair: {'; '.join(fixes)}", lineno)
        graphs[idx] = g
        notes[idx] = fixes
    return FixtureSet(graphs, notes)


# Pokrovskiy family ----------------------------------------------------------------

MAX_R = 10


def pokrovskiy(r: int) -> Graph:
    """G_r on v_0..v_3r: v_i ~ v_(i+-1) and v_(i+3j+2) for j < r, indices mod 3r+1."""
    if not 1 <= r <= MAX_R:
        raise ValueError(f"r must be in 1..{MAX_R}")
    n = 3 * r + 1
    edges = set()
    for i in range(n):
        for d in [1] + [3 * j + 2 for j in range(r)]:
            u, v = i, (i + d) % n
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


# brute-force predicates --------------------------------------------------------------


def brute_colorable(g: Graph, k: int) -> bool:
    if g.n == 0:
        return True
    if k <= 0:
        return False
    edges = list(g.edges())
    # vertex 0 fixed to color 0; the rest exhaustively
    for rest in product(range(k), repeat=g.n - 1):
        c = (0,) + rest
        if all(c[u] != c[v] for u, v in edges):
            return True
    return False


def _edge_set(g: Graph, vs) -> set[tuple[int, int]]:
    return {(a, b) for a, b in combinations(vs, 2) if g.has_edge(a, b)}


def brute_contains_path(g: Graph, t: int) -> bool:
    for vs in combinations(range(g.n), t):
        es = _edge_set(g, vs)
        if len(es) != t - 1:
            continue
        deg = {v: 0 for v in vs}
        for a, b in es:
            deg[a] += 1
            deg[b] += 1
        if t == 1 or (max(deg.values()) <= 2 and _connected(vs, es)):
            return True
    return False


def brute_contains_cycle(g: Graph, t: int) -> bool:
    for vs in combinations(range(g.n), t):
        es = _edge_set(g, vs)
        if len(es) != t:
            continue
        deg = {v: 0 for v in vs}
        for a, b in es:
            deg[a] += 1
            deg[b] += 1
        if all(d == 2 for d in deg.values()) and _connected(vs, es):
            return True
    return False


def brute_contains_diamond(g: Graph) -> bool:
    return any(len(_edge_set(g, vs)) == 5 for vs in combinations(range(g.n), 4))


def brute_contains_k4(g: Graph) -> bool:
    return any(len(_edge_set(g, vs)) == 6 for vs in combinations(range(g.n), 4))


def _connected(vs, es) -> bool:
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        a = stack.pop()
        for x, y in es:
            for p, q in ((x, y), (y, x)):
                if p == a and q not in seen:
                    seen.add(q)
                    stack.append(q)
    return len(seen) == len(vs)


def brute_is_critical(g: Graph, k: int) -> bool:
    if k == 1:
        return g.n == 1
    if brute_colorable(g, k - 1) or not brute_colorable(g, k):
        return False
    if any(g.degree(v) == 0 for v in range(g.n)):
        return False
    return all(brute_colorable(g.delete_edge(u, v), k - 1) for u, v in g.edges())


def brute_is_vertex_critical(g: Graph, k: int) -> bool:
    if k == 1:
        return g.n == 1
    if brute_colorable(g, k - 1) or not brute_colorable(g, k):
        return False
    return all(brute_colorable(g.delete_vertex(v), k - 1) for v in range(g.n))


# oracle ------------------------------------------------------------------------------

MAX_ORACLE_ORDER = 8


def _to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def all_unlabeled_graphs(max_n: int) -> dict[int, list[Graph]]:
    """Isomorphism class representatives for every order ``0..max_n``."""
    import networkx as nx

    if max_n > MAX_ORACLE_ORDER:
        raise ValueError(f"oracle enumeration is limited to {MAX_ORACLE_ORDER} vertices")
    levels = {0: [Graph.empty(0)]}
    for n in range(1, max_n + 1):
        buckets: dict[tuple, list] = {}
        reps = []
        for parent in levels[n - 1]:
            for mask in range(1 << (n - 1)):
                g = parent.add_vertex(mask)
                h = _to_nx(g)
                key = (tuple(sorted(g.degrees())), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                reps.append(g)
        levels[n] = reps
    return levels


def oracle_enumerate(max_n: int, keep: Callable[[Graph], bool] | None = None,
                     min_n: int = 1) -> list[Graph]:
    """All unlabeled graphs with ``min_n..max_n`` vertices accepted by ``keep``."""
    levels = all_unlabeled_graphs(max_n)
    out = []
    for n in range(min_n, max_n + 1):
        for g in levels[n]:
            if keep is None or keep(g):
                out.append(g)
    return out
