"""Canonical labeling by color refinement plus individualization.

The canonical graph is the relabeling with the smallest tuple of adjacency
rows among all leaves of the search tree.  Leaves that tie with the current
best reveal automorphisms, which prune later siblings in the same orbit.
Twins (equal open or closed neighborhoods) are swapped by an automorphism
that fixes everything else, so only one vertex per twin class is explored.
"""

from __future__ import annotations

import threading

from .graph import Graph, iter_bits, to_graph6


def _refine(adj, cells):
    while True:
        out = []
        changed = False
        for cell in cells:
            if not cell & (cell - 1):
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                a = adj[v]
                sig = tuple([(a & c).bit_count() for c in cells])
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _leaf_key(adj, cells):
    order = [c.bit_length() - 1 for c in cells]
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        r = adj[v]
        while r:
            low = r & -r
            row |= 1 << pos[low.bit_length() - 1]
            r ^= low
        rows.append(row)
    return tuple(rows), order


class _Search:
    __slots__ = ("adj", "n", "best_key", "best_order", "autos")

    def __init__(self, adj):
        self.adj = adj
        self.n = len(adj)
        self.best_key = None
        self.best_order = None
        self.autos: list[list[int]] = []

    def run(self, cells, prefix):
        if len(cells) == self.n:
            key, order = _leaf_key(self.adj, cells)
            if self.best_key is None or key < self.best_key:
                self.best_key, self.best_order = key, order
            elif key == self.best_key:
                gamma = [0] * self.n
                for a, b in zip(self.best_order, order):
                    gamma[a] = b
                self.autos.append(gamma)
            return
        idx = 0
        while not cells[idx] & (cells[idx] - 1):
            idx += 1
        cell = cells[idx]
        adj = self.adj
        tried: list[int] = []
        for v in iter_bits(cell):
            if tried and self._equivalent(v, tried, prefix):
                continue
            tried.append(v)
            sub = cells[:idx] + [1 << v, cell ^ (1 << v)] + cells[idx + 1:]
            self.run(_refine(adj, sub), prefix + (v,))

    def _equivalent(self, v, tried, prefix):
        adj = self.adj
        av = adj[v]
        cv = av | (1 << v)
        for u in tried:
            if adj[u] == av or adj[u] | (1 << u) == cv:
                return True
        gens = [g for g in self.autos if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        seen = {v}
        stack = [v]
        targets = set(tried)
        while stack:
            w = stack.pop()
            for g in gens:
                x = g[w]
                if x in targets:
                    return True
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return False


def canonical_labeling(g: Graph) -> list[int]:
    """``order`` such that ``g.relabel(order)`` is the canonical graph."""
    if g.n == 0:
        return []
    s = _Search(g.adj)
    s.run(_refine(g.adj, [g.vertex_mask]), ())
    return s.best_order


def canonical_graph(g: Graph) -> Graph:
    if g.n == 0:
        return g
    s = _Search(g.adj)
    s.run(_refine(g.adj, [g.vertex_mask]), ())
    return Graph(g.n, s.best_key, check=False)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant key: graph6 bytes of the canonical relabeling."""
    return to_graph6(canonical_graph(g)).encode("ascii")


class SeenSet:
    """Set of canonical keys with an atomic insert-if-absent."""

    def __init__(self):
        self._keys: set = set()
        self._lock = threading.Lock()

    def insert_key(self, key) -> bool:
        with self._lock:
            if key in self._keys:
                return False
            self._keys.add(key)
            return True

    def insert(self, g: Graph) -> bool:
        return self.insert_key(canonical_form(g))

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in self._keys

    def __len__(self) -> int:
        return len(self._keys)


def insert_if_new(seen: SeenSet, g: Graph) -> bool:
    return seen.insert(g)
