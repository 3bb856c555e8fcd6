"""Exact k-coloring, k-hulls, criticality and the similarity relations.

The solver works on raw adjacency bitmasks restricted to an ``active`` mask so
that vertex deletions never need to materialize a new graph.  Vertices of
degree < k are peeled first (they can always be colored last); the remaining
core is searched DSATUR-style, trying at most one unused color per branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, iter_bits


class HullError(ValueError):
    """The k-hull is undefined because the graph is not k-colorable."""


@dataclass(frozen=True)
class ColoringResult:
    colorable: bool
    witness: tuple[int, ...] | None = None  # colors 1..k, indexed by vertex

    def __bool__(self) -> bool:
        return self.colorable


# solver -------------------------------------------------------------------------


def _dsatur(adj, uncolored, k, cls, used, colors):
    if not uncolored:
        return True
    best = -1
    best_av = 0
    best_cnt = k + 2
    best_deg = -1
    extra = 1 if used < k else 0
    for v in iter_bits(uncolored):
        a = adj[v]
        av = 0
        for c in range(used):
            if not a & cls[c]:
                av |= 1 << c
        cnt = av.bit_count() + extra
        if cnt == 0:
            return False
        if cnt < best_cnt:
            best, best_av, best_cnt, best_deg = v, av, cnt, -1
            if cnt == 1:
                break
        elif cnt == best_cnt:
            if best_deg < 0:
                best_deg = (adj[best] & uncolored).bit_count()
            d = (a & uncolored).bit_count()
            if d > best_deg:
                best, best_av, best_deg = v, av, d
    v = best
    bit = 1 << v
    rest = uncolored ^ bit
    av = best_av
    while av:
        low = av & -av
        c = low.bit_length() - 1
        cls[c] |= bit
        colors[v] = c
        if _dsatur(adj, rest, k, cls, used, colors):
            return True
        cls[c] ^= bit
        av ^= low
    if used < k:
        cls[used] |= bit
        colors[v] = used
        if _dsatur(adj, rest, k, cls, used + 1, colors):
            return True
        cls[used] ^= bit
    colors[v] = -1
    return False


def solve(adj, active: int, k: int) -> list[int] | None:
    """A proper coloring (colors ``0..k-1``, ``-1`` off ``active``) or ``None``."""
    n = len(adj)
    colors = [-1] * n
    if k <= 0:
        return colors if not active else None
    peeled = []
    core = active
    changed = True
    while changed:
        changed = False
        for v in iter_bits(core):
            if (adj[v] & core).bit_count() < k:
                core ^= 1 << v
                peeled.append(v)
                changed = True
    if core and not _dsatur(adj, core, k, [0] * k, 0, colors):
        return None
    for v in reversed(peeled):
        used = 0
        for u in iter_bits(adj[v] & active):
            if colors[u] >= 0:
                used |= 1 << colors[u]
        free = ~used
        colors[v] = (free & -free).bit_length() - 1
    return colors


def _merged(adj, u, v):
    """Adjacency with ``v``'s edges copied onto ``u`` (caller drops ``v``)."""
    out = list(adj)
    out[u] |= adj[v]
    for w in iter_bits(adj[v]):
        out[w] |= 1 << u
    return out


def _with_edges(adj, v, s):
    out = list(adj)
    out[v] |= s
    bit = 1 << v
    for w in iter_bits(s):
        out[w] |= bit
    return out


def is_k_colorable(g: Graph, k: int) -> ColoringResult:
    if k < 1:
        raise ValueError("k must be at least 1")
    colors = solve(g.adj, g.vertex_mask, k)
    if colors is None:
        return ColoringResult(False)
    return ColoringResult(True, tuple(c + 1 for c in colors))


def colorable(g: Graph, k: int) -> bool:
    return solve(g.adj, g.vertex_mask, k) is not None


def chromatic_number(g: Graph) -> int:
    k = 0
    while solve(g.adj, g.vertex_mask, k) is None:
        k += 1
    return k


def is_proper(g: Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges())


# hull -------------------------------------------------------------------------------


class HullOracle:
    """Lazy k-hull of the subgraph induced on ``active``.

    Every coloring found while answering a query is harvested: any two vertices
    it puts in one class are recorded as non-adjacent in the hull.
    """

    __slots__ = ("adj", "active", "k", "same", "hull", "classes", "_avoid", "_fails")

    def __init__(self, adj, active: int, k: int):
        self.adj = adj
        self.active = active
        self.k = k
        self.same = [0] * len(adj)
        self.classes: list[set[int]] = [set() for _ in adj]
        self.hull = [adj[v] & active for v in range(len(adj))]
        self._avoid: dict[tuple[int, int], bool] = {}
        # sets s with can_avoid(v, s) false; every superset fails as well
        self._fails: list[list[int]] = [[] for _ in adj]
        colors = solve(adj, active, k)
        if colors is None:
            raise HullError(f"graph is not {k}-colorable; hull undefined")
        self._harvest(colors)

    def _harvest(self, colors):
        classes = {}
        for v in iter_bits(self.active):
            classes[colors[v]] = classes.get(colors[v], 0) | (1 << v)
        for m in classes.values():
            for v in iter_bits(m):
                self.same[v] |= m
                self.classes[v].add(m)

    def is_edge(self, u: int, v: int) -> bool:
        """True iff no k-coloring gives ``u`` and ``v`` the same color."""
        if u == v:
            return False
        if self.hull[u] >> v & 1:
            return True
        if self.same[u] >> v & 1:
            return False
        colors = solve(_merged(self.adj, u, v), self.active & ~(1 << v), self.k)
        if colors is None:
            self.hull[u] |= 1 << v
            self.hull[v] |= 1 << u
            return True
        colors[v] = colors[u]
        self._harvest(colors)
        return False

    def neighbors(self, v: int) -> int:
        for w in iter_bits(self.active & ~self.hull[v] & ~self.same[v] & ~(1 << v)):
            self.is_edge(v, w)
        return self.hull[v]

    def covers(self, v: int, s: int) -> bool:
        """True iff every vertex of ``s`` is a hull neighbor of ``v``."""
        for w in iter_bits(s & ~self.hull[v]):
            if not self.is_edge(v, w):
                return False
        return True

    def can_avoid(self, v: int, s: int) -> bool:
        """True iff some k-coloring gives ``v`` a color used by no vertex of ``s``.

        This is the statement that a new vertex adjacent to ``s`` can share
        ``v``'s color, i.e. is not joined to ``v`` in the hull of the extension.
        """
        s &= self.active
        if s >> v & 1:
            return False
        for m in self.classes[v]:
            if not m & s:
                return True
        key = (v, s)
        hit = self._avoid.get(key)
        if hit is not None:
            return hit
        for f in self._fails[v]:
            if f & s == f:
                return False
        colors = solve(_with_edges(self.adj, v, s), self.active, self.k)
        ok = colors is not None
        if ok:
            self._harvest(colors)
        else:
            self._fails[v].append(s)
        self._avoid[key] = ok
        return ok

    def graph(self) -> Graph:
        n = len(self.adj)
        for v in iter_bits(self.active):
            self.neighbors(v)
        return Graph(n, [self.hull[v] if self.active >> v & 1 else 0 for v in range(n)],
                     check=False)


def k_hull(g: Graph, k: int) -> Graph:
    return HullOracle(g.adj, g.vertex_mask, k).graph()


# criticality ------------------------------------------------------------------------


def is_k_critical(g: Graph, k: int, forbidden=()) -> bool:
    """k-criticality, optionally relative to a class of forbidden induced subgraphs.

    With ``forbidden`` empty this is the plain notion: k-chromatic and every
    proper subgraph is (k-1)-colorable.  Otherwise ``g`` must avoid the
    patterns and only proper subgraphs that also avoid them need to be
    (k-1)-colorable.  All supported patterns are connected, so isolated
    vertices never matter and spanning subgraphs suffice.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return g.n == 1
    adj = g.adj
    full = g.vertex_mask
    if any(row == 0 for row in adj):
        return False
    if solve(adj, full, k - 1) is not None or solve(adj, full, k) is None:
        return False
    if forbidden and _witness(g, forbidden) is not None:
        return False
    if forbidden:
        # vertex deletions first: cheap, and they settle most non-critical graphs
        for v in range(g.n):
            if solve(adj, full & ~(1 << v), k - 1) is None:
                return False
    visited: set = set()
    for u, v in g.edges():
        # g - uv is (k-1)-colorable iff u and v can be identified in it
        a = list(adj)
        a[u] &= ~(1 << v)
        a[v] &= ~(1 << u)
        if solve(_merged(a, u, v), full & ~(1 << v), k - 1) is not None:
            continue
        if not forbidden:
            return False
        if _free_obstruction_below(Graph(g.n, a, check=False), k, forbidden, visited):
            return False
    return True


def _witness(g: Graph, forbidden):
    from .detect import find_induced, pattern_graph

    for p in forbidden:
        w = find_induced(g, p)
        if w is not None:
            pg = pattern_graph(p)
            return [(w[a], w[b]) for a, b in pg.edges()]
    return None


def _free_obstruction_below(h: Graph, k: int, forbidden, visited) -> bool:
    """True iff some spanning subgraph of ``h`` (``h`` included) avoids every
    pattern and is not (k-1)-colorable.  ``h`` itself is not (k-1)-colorable.

    Any such subgraph must lose an edge of each induced pattern copy of ``h``,
    so branching over the edges of one copy is exhaustive.
    """
    from .canon import canonical_graph

    key = canonical_graph(h).adj
    if key in visited:
        return False
    visited.add(key)
    edges = _witness(h, forbidden)
    if edges is None:
        return True
    for u, v in edges:
        h2 = h.delete_edge(u, v)
        if solve(h2.adj, h2.vertex_mask, k - 1) is not None:
            continue
        if _free_obstruction_below(h2, k, forbidden, visited):
            return True
    return False


def is_k_vertex_critical(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return g.n == 1
    adj = g.adj
    full = g.vertex_mask
    if solve(adj, full, k - 1) is not None or solve(adj, full, k) is None:
        return False
    return all(solve(adj, full & ~(1 << v), k - 1) is not None for v in range(g.n))


# similarity -------------------------------------------------------------------------


def _triangles(g: Graph):
    adj = g.adj
    for u in range(g.n):
        for v in iter_bits(adj[u] & ~((2 << u) - 1)):
            for w in iter_bits(adj[u] & adj[v] & ~((2 << v) - 1)):
                yield u, v, w


def find_similar_vertices(g: Graph, k: int) -> tuple[int, int] | None:
    """First ``(u, v)`` with ``N(u)`` inside the hull neighborhood of ``v`` in ``g - u``."""
    adj = g.adj
    full = g.vertex_mask
    for u in range(g.n):
        oracle = None
        for v in iter_bits(full & ~adj[u] & ~(1 << u)):
            if oracle is None:
                oracle = HullOracle(adj, full & ~(1 << u), k)
            if oracle.covers(v, adj[u]):
                return u, v
    return None


def find_similar_edges(g: Graph, k: int) -> tuple[int, int, int, int] | None:
    adj = g.adj
    full = g.vertex_mask
    for u in range(g.n):
        for v in iter_bits(adj[u]):
            U = (1 << u) | (1 << v)
            nu = adj[u] & ~U
            nv = adj[v] & ~U
            oracle = HullOracle(adj, full & ~U, k)
            for u2 in iter_bits(full & ~U):
                if not oracle.covers(u2, nu):
                    continue
                for v2 in iter_bits(adj[u2] & ~U):
                    if oracle.covers(v2, nv):
                        return u, v, u2, v2
    return None


def find_similar_triangles(g: Graph, k: int) -> tuple[int, ...] | None:
    adj = g.adj
    full = g.vertex_mask
    tris = list(_triangles(g))
    for u, v, w in tris:
        U = (1 << u) | (1 << v) | (1 << w)
        oracle = None
        need = (adj[u] & ~U, adj[v] & ~U, adj[w] & ~U)
        cands = []
        for t in tris:
            if not (1 << t[0] | 1 << t[1] | 1 << t[2]) & U:
                cands.extend(permutations(t))
        for t in sorted(cands):
            if oracle is None:
                oracle = HullOracle(adj, full & ~U, k)
            if all(oracle.covers(t[i], need[i]) for i in range(3)):
                return (u, v, w) + t
    return None


# counting ---------------------------------------------------------------------------

MAX_COUNT_ORDER = 20


def count_colorings_up_to_permutation(g: Graph, k: int) -> int:
    """Number of partitions of V(g) into at most ``k`` stable sets.

    Colorings are enumerated with colors introduced in first-use order, so
    each class of permutation-equivalent colorings is counted once.
    """
    if g.n > MAX_COUNT_ORDER:
        raise ValueError(f"counting is limited to {MAX_COUNT_ORDER} vertices")
    adj = g.adj
    n = g.n
    cls = [0] * k

    def rec(v, used):
        if v == n:
            return 1
        total = 0
        a = adj[v]
        for c in range(min(used + 1, k)):
            if a & cls[c]:
                continue
            cls[c] |= 1 << v
            total += rec(v + 1, max(used, c + 1))
            cls[c] ^= 1 << v
        return total

    return rec(0, 0)
