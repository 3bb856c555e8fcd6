"""Tripods, their contraction, and a generator for 1-vertex extensions.

A tripod is a triple ``(A1, A2, A3)`` of disjoint stable sets grown from a
root triangle: each later vertex joins the class it has no neighbor in and
must already see the other two classes.  In every 3-coloring each class is
monochromatic, so a vertex with neighbors in all three classes makes the
graph 4-chromatic; such a graph restricted to tripod plus that vertex is a
1-vertex extension of a tripod.

The generator grows candidate extensions the way the tripod would be
traversed from the apex ``x``, pruning tuples that cannot lie on the
traversal of a 4-critical extension.  Class indices in the public API are
1, 2, 3.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from . import detect
from .canon import SeenSet, canonical_graph
from .coloring import is_k_critical, solve
from .graph import Graph, iter_bits, to_graph6

log = logging.getLogger(__name__)


class TripodError(ValueError):
    pass


# tripods -------------------------------------------------------------------------------


@dataclass(frozen=True)
class Tripod:
    host: Graph
    classes: tuple[int, int, int]
    order: tuple[int, ...]

    @property
    def vertex_mask(self) -> int:
        return self.classes[0] | self.classes[1] | self.classes[2]

    def class_of(self, v: int) -> int | None:
        for i, c in enumerate(self.classes):
            if c >> v & 1:
                return i + 1
        return None

    def t(self, v: int) -> int:
        return max(0, self.order.index(v) - 2)

    def root(self) -> tuple[int, int, int]:
        return self.order[0], self.order[1], self.order[2]

    def is_valid(self) -> bool:
        adj = self.host.adj
        a, b, c = self.classes
        if a & b or a & c or b & c:
            return False
        if any(adj[v] & cls for cls in self.classes for v in iter_bits(cls)):
            return False
        if len(self.order) != len(set(self.order)) or sum(1 << v for v in self.order) != a | b | c:
            return False
        placed = [0, 0, 0]
        for idx, v in enumerate(self.order):
            i = self.class_of(v) - 1
            if idx < 3:
                if i != idx:
                    return False
            elif not all(adj[v] & placed[j] for j in range(3) if j != i):
                return False
            placed[i] |= 1 << v
        r = self.root()
        return self.host.has_edge(r[0], r[1]) and self.host.has_edge(r[0], r[2]) \
            and self.host.has_edge(r[1], r[2])


def neighbor_min(tr: Tripod, u: int, j: int) -> int | None:
    """The neighbor of ``u`` in ``A_j`` that comes first in the tripod order."""
    cls = tr.classes[j - 1]
    nb = tr.host.adj[u] & cls
    for v in tr.order:
        if nb >> v & 1:
            return v
    return None


def _addable_class(adj, v: int, classes) -> int | None:
    """0-based class ``v`` can join, or None."""
    seen = [bool(adj[v] & c) for c in classes]
    if sum(seen) == 2:
        return seen.index(False)
    return None


def _check_root(g: Graph, root) -> tuple[int, int, int]:
    if len(root) != 3 or len(set(root)) != 3:
        raise TripodError("root must be three distinct vertices")
    a, b, c = root
    if not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        raise TripodError(f"root {tuple(root)} is not a triangle")
    return a, b, c


def grow_maximal_tripod(g: Graph, root, within: int | None = None) -> Tripod:
    """Add the smallest addable vertex until none is left.

    ``within`` restricts growth to a vertex subset.
    """
    a, b, c = _check_root(g, root)
    avail = g.vertex_mask if within is None else within
    classes = [1 << a, 1 << b, 1 << c]
    order = [a, b, c]
    adj = g.adj
    while True:
        placed = classes[0] | classes[1] | classes[2]
        for v in iter_bits(avail & ~placed):
            i = _addable_class(adj, v, classes)
            if i is not None:
                classes[i] |= 1 << v
                order.append(v)
                break
        else:
            return Tripod(g, tuple(classes), tuple(order))


def is_maximal(tr: Tripod, within: int | None = None) -> bool:
    avail = tr.host.vertex_mask if within is None else within
    return all(_addable_class(tr.host.adj, v, tr.classes) is None
               for v in iter_bits(avail & ~tr.vertex_mask))


def contract_tripod(g: Graph, tr: Tripod, strict: bool = True) -> Graph:
    """Identify each class to one vertex.

    Vertices 0, 1, 2 of the result are the merged classes A1, A2, A3; the
    remaining vertices follow in increasing order.  With ``strict`` the
    tripod must be maximal and no outside vertex may see all three classes.
    """
    adj = g.adj
    outside = g.vertex_mask & ~tr.vertex_mask
    if strict:
        if not is_maximal(tr):
            raise TripodError("tripod is not maximal")
        for v in iter_bits(outside):
            if all(adj[v] & c for c in tr.classes):
                raise TripodError(f"vertex {v} has neighbors in all three classes")
    rest = list(iter_bits(outside))
    pos = {v: i + 3 for i, v in enumerate(rest)}
    edges = [(0, 1), (0, 2), (1, 2)]
    for i, cls in enumerate(tr.classes):
        nb = 0
        for v in iter_bits(cls):
            nb |= adj[v]
        for w in iter_bits(nb & outside):
            edges.append((i, pos[w]))
    for v in rest:
        for w in iter_bits(adj[v] & outside):
            if v < w:
                edges.append((pos[v], pos[w]))
    return Graph.from_edges(3 + len(rest), sorted(set(edges)))


def triangles(g: Graph, within: int | None = None) -> Iterator[tuple[int, int, int]]:
    avail = g.vertex_mask if within is None else within
    adj = g.adj
    for u in iter_bits(avail):
        for v in iter_bits(adj[u] & avail & ~((2 << u) - 1)):
            for w in iter_bits(adj[u] & adj[v] & avail & ~((2 << v) - 1)):
                yield u, v, w


def _cover_search(g: Graph, root, avail: int) -> Tripod | None:
    """A tripod from ``root`` covering ``avail``, trying every insertion order.

    Two vertices compete only when they are adjacent and addable to the same
    class, which cannot happen when the graph on ``avail`` is 3-colorable, so
    then the greedy growth decides.
    """
    if solve(g.adj, avail, 3) is not None:
        tr = grow_maximal_tripod(g, root, avail)
        return tr if tr.vertex_mask == avail else None
    adj = g.adj
    a, b, c = root
    failed: set[tuple[int, int, int]] = set()

    def rec(classes, order):
        placed = classes[0] | classes[1] | classes[2]
        if placed == avail:
            return Tripod(g, tuple(classes), tuple(order))
        key = tuple(classes)
        if key in failed:
            return None
        for v in iter_bits(avail & ~placed):
            i = _addable_class(adj, v, classes)
            if i is None:
                continue
            nxt = list(classes)
            nxt[i] |= 1 << v
            found = rec(nxt, order + [v])
            if found is not None:
                return found
        failed.add(key)
        return None

    return rec([1 << a, 1 << b, 1 << c], [a, b, c])


def find_tripod_extension(g: Graph) -> tuple[int, Tripod] | None:
    """An apex ``x`` and a tripod covering the rest, with ``x`` seeing all classes."""
    full = g.vertex_mask
    for x in range(g.n):
        rest = full & ~(1 << x)
        for root in triangles(g, rest):
            tr = _cover_search(g, root, rest)
            if tr is not None and all(g.adj[x] & c for c in tr.classes):
                return x, tr
    return None


def is_tripod_extension(g: Graph) -> bool:
    return find_tripod_extension(g) is not None


def traverse(tr: Tripod, x: int, choose: Callable[[list[int]], int] | None = None) -> list[int]:
    """Label the tripod from the apex ``x``; returns the vertices in the order
    they became inactive.

    ``b_i`` is the neighbor of ``x`` in ``A_i`` that is last in the tripod
    order.  The root starts inactive; any other ``b_i`` starts active.
    Picking an active ``u`` activates its first neighbors in the other two
    classes.  ``choose`` picks among the active vertices (default: the one
    last in the tripod order).
    """
    pos = {v: i for i, v in enumerate(tr.order)}
    adj = tr.host.adj
    labeled: dict[int, bool] = {}  # vertex -> active
    for v in tr.root():
        labeled[v] = False
    done = list(tr.root())
    for cls in tr.classes:
        nb = adj[x] & cls
        if not nb:
            raise TripodError("apex has no neighbor in some class")
        b = max(iter_bits(nb), key=pos.__getitem__)
        labeled.setdefault(b, True)
    while True:
        active = [v for v, a in labeled.items() if a]
        if not active:
            return done
        u = choose(active) if choose is not None else max(active, key=pos.__getitem__)
        i = tr.class_of(u)
        for j in (1, 2, 3):
            if j != i:
                w = neighbor_min(tr, u, j)
                if w is not None and w not in labeled:
                    labeled[w] = True
        labeled[u] = False
        done.append(u)


# assumption checker ------------------------------------------------------------------


def _bipartitions(adj, nbhd: int) -> Iterator[tuple[int, int]]:
    """Every split of ``nbhd`` into two stable sets."""
    comps = []
    left = nbhd
    while left:
        s = left & -left
        side = [s, 0]
        frontier = [(s.bit_length() - 1, 0)]
        seen = s
        while frontier:
            v, c = frontier.pop()
            for w in iter_bits(adj[v] & nbhd):
                if side[c] >> w & 1:
                    return
                if not seen >> w & 1:
                    seen |= 1 << w
                    side[1 - c] |= 1 << w
                    frontier.append((w, 1 - c))
        comps.append((side[0], side[1]))
        left &= ~seen
    if not comps:
        yield 0, 0
        return
    first, rest = comps[0], comps[1:]
    for flips in range(1 << len(rest)):
        x, y = first
        for idx, (p, q) in enumerate(rest):
            if flips >> idx & 1:
                p, q = q, p
            x |= p
            y |= q
        yield x, y


def _separated(adj, side: int, far: int) -> bool:
    """Every two vertices of ``side`` differ on ``far``."""
    vs = list(iter_bits(side))
    return all((adj[a] ^ adj[b]) & far for a, b in combinations(vs, 2))


def _good_bipartition(adj, v: int, x: int, y: int, full: int) -> bool:
    closed = adj[v] | (1 << v)
    far = full & ~closed
    for a in iter_bits(x):
        for b in iter_bits(y & ~adj[a]):
            if not (adj[a] & far or adj[b] & far):
                return False
    return _separated(adj, x, far) and _separated(adj, y, far)


def check_thmG_assumptions(h: Graph) -> bool:
    """Every neighborhood is a triangle, an induced C5, or bipartite with a
    well-attached stable split; and no vertex has two nonadjacent neighbors
    one of which dominates the other."""
    adj = h.adj
    full = h.vertex_mask
    for a in range(h.n):
        for u, w in combinations(list(iter_bits(adj[a])), 2):
            if adj[u] >> w & 1:
                continue
            if adj[u] & ~adj[w] == 0 or adj[w] & ~adj[u] == 0:
                return False
    for v in range(h.n):
        nb = adj[v]
        size = nb.bit_count()
        inner = [adj[w] & nb for w in iter_bits(nb)]
        if size == 3 and all(m.bit_count() == 2 for m in inner):
            continue
        if size == 5 and all(m.bit_count() == 2 for m in inner):
            continue  # the only 2-regular graph on five vertices is C5
        if not any(_good_bipartition(adj, v, x, y, full) for x, y in _bipartitions(adj, nb)):
            return False
    return True


# generator ---------------------------------------------------------------------------

APEX = 0
ROOT = (1, 2, 3)  # a1, a2, a3


@dataclass(frozen=True)
class GenState:
    """A partial extension: graph with apex ``x`` = 0 and root a1, a2, a3 =
    1, 2, 3; ``ord`` lists the non-apex vertices, ``act`` is the active mask."""

    g: Graph
    classes: tuple[int, int, int]
    ord: tuple[int, ...]
    act: int

    def class_index(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if c >> v & 1:
                return i
        raise TripodError(f"vertex {v} is in no class")


@dataclass
class TripodProfile:
    t: int = 6
    max_n: int = 10
    lookahead: bool = False
    lookahead_from: int = 12
    strict: bool = True

    def __post_init__(self):
        if self.t not in (6, 7):
            raise ValueError("forbidden path order must be 6 or 7")
        if not 5 <= self.max_n <= 32:
            raise ValueError("max_n must be in 5..32")


@dataclass
class TripodReport:
    found: list[str] = field(default_factory=list)
    other_critical: list[str] = field(default_factory=list)
    nonprunable_per_order: dict[int, int] = field(default_factory=dict)
    max_n: int = 0
    elapsed: float = 0.0

    @property
    def found_per_order(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for line in self.found:
            n = ord(line[0]) - 63
            counts[n] = counts.get(n, 0) + 1
        return dict(sorted(counts.items()))

    @property
    def largest_nonprunable(self) -> int:
        return max(self.nonprunable_per_order, default=0)


class _Sink:
    def __init__(self, profile: TripodProfile):
        self.profile = profile
        self.path = detect.PATH(profile.t)
        self.report = TripodReport(max_n=profile.max_n)
        self.seen = SeenSet()

    def count(self, n: int) -> None:
        d = self.report.nonprunable_per_order
        d[n] = d.get(n, 0) + 1

    def offer(self, g: Graph) -> None:
        """``g`` is path-free and not 3-colorable."""
        cg = canonical_graph(g)
        if not self.seen.insert_key(cg.adj):
            return
        if not is_k_critical(cg, 4, [self.path]):
            return
        if is_tripod_extension(cg):
            self.report.found.append(to_graph6(cg))
        else:
            self.report.other_critical.append(to_graph6(cg))


def _edges_mask(pairs) -> dict[int, int]:
    adj: dict[int, int] = {}
    for a, b in pairs:
        adj[a] = adj.get(a, 0) | (1 << b)
        adj[b] = adj.get(b, 0) | (1 << a)
    return adj


def start_states() -> Iterator[GenState]:
    """All start tuples with at least two distinct ``b_i``."""
    x, a1, a2, a3 = APEX, *ROOT
    b1, b2, b3 = 4, 5, 6
    families = [
        (5, [(x, b1), (x, a2), (x, a3)], [(b1, a2), (b1, a3)],
         (a3, a2, a1, b1), (1 << a1 | 1 << b1, 1 << a2, 1 << a3), 1 << b1),
        (6, [(x, b1), (x, b2), (x, a3)],
         [(x, a2), (b1, b2), (b1, a2), (b1, a3), (b2, a1), (b2, a3)],
         (a3, a2, a1, b2, b1), (1 << a1 | 1 << b1, 1 << a2 | 1 << b2, 1 << a3),
         1 << b1 | 1 << b2),
        (7, [(x, b1), (x, b2), (x, b3)],
         [(x, a2), (x, a3), (b1, b2), (b1, b3), (b2, b3), (b1, a2), (b1, a3), (b2, a1),
          (b2, a3), (b3, a1), (b3, a2)],
         (a3, a2, a1, b3, b2, b1), (1 << a1 | 1 << b1, 1 << a2 | 1 << b2, 1 << a3 | 1 << b3),
         1 << b1 | 1 << b2 | 1 << b3),
    ]
    root_edges = [(a1, a2), (a1, a3), (a2, a3)]
    for n, must, may, order, classes, act in families:
        for pick in range(1 << len(may)):
            chosen = root_edges + must + [e for i, e in enumerate(may) if pick >> i & 1]
            g = Graph.from_edges(n, chosen)
            yield GenState(g, classes, order, act)


def _min_positions(adj, classes, pos, verts) -> dict[int, list]:
    """For each vertex, the smallest order position of a neighbor in each class."""
    out = {}
    for v in verts:
        row = []
        for c in classes:
            nb = adj[v] & c
            row.append(min((pos[w] for w in iter_bits(nb)), default=None))
        out[v] = row
    return out


def _order_ok(s: GenState) -> bool:
    """No inactive ``u`` before ``v`` whose first cross neighbors come later than
    both of ``v``'s."""
    adj = s.g.adj
    pos = {v: i for i, v in enumerate(s.ord)}
    mins = _min_positions(adj, s.classes, pos, s.ord)
    keys = []
    for v in s.ord:
        i = s.class_index(v)
        row = [mins[v][j] for j in range(3) if j != i]
        keys.append(None if None in row else max(row))
    best_after = None  # smallest key among later vertices
    for idx in range(len(s.ord) - 1, -1, -1):
        u = s.ord[idx]
        if best_after is not None and not s.act >> u & 1:
            i = s.class_index(u)
            row = [mins[u][j] for j in range(3) if j != i]
            if None not in row and max(row) >= 3 and best_after < max(row):
                return False
        k = keys[idx]
        if k is not None and (best_after is None or k < best_after):
            best_after = k
    return True


def _minimal_ok(s: GenState) -> bool:
    """Deleting any vertex must leave no vertex that sees all three classes of
    the tripod grown from the vertices before it."""
    adj = s.g.adj
    full = s.g.vertex_mask
    before = 0
    for u in s.ord:
        b = [c & before for c in s.classes]
        before |= 1 << u
        if sum(1 for c in b if c) < 2:
            continue
        rest = full & ~(b[0] | b[1] | b[2]) & ~(1 << u)
        changed = True
        while changed:
            changed = False
            for v in iter_bits(rest):
                hit = [bool(adj[v] & c) for c in b]
                cnt = hit[0] + hit[1] + hit[2]
                if cnt == 3:
                    return False
                if cnt == 2:
                    i = hit.index(False)
                    b[i] |= 1 << v
                    rest &= ~(1 << v)
                    changed = True
    return True


def _apex_ok(adj, classes) -> bool:
    nx = adj[APEX]
    if (nx & classes[0]).bit_count() >= 2:
        return False
    return not ((nx & classes[1]).bit_count() >= 2 and (nx & classes[2]).bit_count() >= 2)


def feasible(s: GenState, profile: TripodProfile, sink: _Sink | None = None) -> bool:
    """False when the tuple can be pruned.  Graphs that are path-free but not
    3-colorable are offered to ``sink``."""
    g = s.g
    if detect.find_induced(g, detect.PATH(profile.t)) is not None:
        return False
    if solve(g.adj, g.vertex_mask, 3) is None:
        if sink is not None:
            sink.offer(g)
        return False
    return _apex_ok(g.adj, s.classes) and _order_ok(s) and _minimal_ok(s)


def _submasks(m: int, must: int = 0) -> Iterator[int]:
    free = m & ~must
    sub = free
    while True:
        yield sub | must
        if sub == 0:
            return
        sub = (sub - 1) & free


class _Gen:
    def __init__(self, profile: TripodProfile, sink: _Sink):
        self.profile = profile
        self.sink = sink
        self.t = profile.t

    # children ----------------------------------------------------------------------

    def _place(self, adj: list[int], classes: list[int], v: int, nbrs: int, cls: int) -> bool:
        """Attach ``v`` with ``nbrs`` in class ``cls`` (in place); False if the
        result contains the path or breaks the apex rule."""
        adj.append(nbrs)
        for w in iter_bits(nbrs):
            adj[w] |= 1 << v
        classes[cls] |= 1 << v
        if not _apex_ok(adj, classes):
            return False
        return not detect.has_path_through(adj, v, self.t, (1 << len(adj)) - 1)

    def _children(self, s: GenState, u: int) -> Iterator[GenState]:
        g = s.g
        adj = g.adj
        n = g.n
        cap = self.profile.max_n
        pos = {v: i for i, v in enumerate(s.ord)}
        i = s.class_index(u)
        j, k = [c for c in range(3) if c != i]
        first = {}
        for c in (j, k):
            nb = adj[u] & s.classes[c]
            first[c] = min(iter_bits(nb), key=pos.__getitem__) if nb else None
        inactive = g.vertex_mask & ~s.act & ~1
        mins = _min_positions(adj, s.classes, pos, list(iter_bits(inactive)))
        pu = pos[u]
        # the new vertices stand for first neighbors of u, so they see u
        anchor = 1 << u if self.profile.strict else 0

        def cand(c_new, slot):
            """Vertices the new vertex of class ``c_new`` at ``slot`` may see."""
            others = g.vertex_mask & ~s.classes[c_new] & ~1
            m = (s.act & others) | 1
            for w in iter_bits(inactive & others):
                mp = mins[w][c_new]
                if mp is not None and mp < slot:
                    m |= 1 << w
            return m

        # two new vertices
        if n + 2 <= cap:
            lim_j = pu if first[j] is None else min(pu, pos[first[j]])
            lim_k = pu if first[k] is None else min(pu, pos[first[k]])
            for sj in range(3, lim_j + 1):
                for sk in range(3, lim_k + 1):
                    orders = [True, False] if sj == sk else [sj < sk]
                    cj, ck = cand(j, sj), cand(k, sk)
                    for j_first in orders:
                        if j_first:
                            ordn = s.ord[:sj] + (n,) + s.ord[sj:sk] + (n + 1,) + s.ord[sk:]
                        else:
                            ordn = s.ord[:sk] + (n + 1,) + s.ord[sk:sj] + (n,) + s.ord[sj:]
                        act = (s.act & ~(1 << u)) | (1 << n) | (1 << (n + 1))
                        yield from self._attach_two(s, j, k, cj, ck, ordn, act, anchor)
        # one new vertex
        if n + 1 <= cap:
            for r in (j, k):
                ur = first[r]
                if ur is None or pos[ur] >= pu:
                    continue
                sc = k if r == j else j
                lim = pu
                if self.profile.strict and first[sc] is not None:
                    lim = min(lim, pos[first[sc]])
                for slot in range(3, lim + 1):
                    ordn = s.ord[:slot] + (n,) + s.ord[slot:]
                    act = (s.act & ~(1 << u)) | (1 << n)
                    yield from self._attach_one(s, sc, cand(sc, slot), ordn, act, anchor)
        # nothing new
        if first[j] is not None and first[k] is not None and pos[first[j]] < pu \
                and pos[first[k]] < pu:
            yield GenState(g, s.classes, s.ord, s.act & ~(1 << u))

    # At the cap only graphs that may be critical matter: every vertex needs
    # degree >= 3, and 3-colorable children are dropped since they would never
    # grow again.

    def _deficit(self, adj, n: int) -> tuple[int, int]:
        """Vertices below degree 3 by exactly one, and by more."""
        one = more = 0
        for v in range(n):
            d = adj[v].bit_count()
            if d == 2:
                one |= 1 << v
            elif d < 2:
                more |= 1 << v
        return one, more

    def _attach_one(self, s, c, cmask, ordn, act, anchor=0):
        n = s.g.n
        at_cap = n + 1 == self.profile.max_n
        must = 0
        if at_cap:
            one, more = self._deficit(s.g.adj, n)
            if more or one & ~cmask:
                return
            must = one
        for sv in _submasks(cmask, must | anchor):
            if at_cap and sv.bit_count() < 3:
                continue
            adj = list(s.g.adj)
            classes = list(s.classes)
            if not self._place(adj, classes, n, sv, c):
                continue
            yield from self._finish(adj, classes, ordn, act, at_cap)

    def _attach_two(self, s, j, k, cj, ck, ordn, act, anchor=0):
        n = s.g.n
        at_cap = n + 2 == self.profile.max_n
        one = two = 0
        if at_cap:
            one, more = self._deficit(s.g.adj, n)
            two = 0
            for v in iter_bits(more):
                if s.g.adj[v].bit_count() < 1:
                    return
                two |= 1 << v
            if two & ~(cj & ck) or one & ~(cj | ck):
                return
        bj = 1 << n
        for sj in _submasks(cj, two | anchor):
            if at_cap and sj.bit_count() < 2:
                continue
            adj1 = list(s.g.adj)
            cls1 = list(s.classes)
            if not self._place(adj1, cls1, n, sj, j):
                continue
            if solve(adj1, (bj << 1) - 1, 3) is None:
                continue  # every child has a proper non-3-colorable part
            must_k = two | (one & ~sj) | anchor
            if must_k & ~ck:
                continue
            for sk in _submasks(ck | bj, must_k):
                if at_cap and (sk.bit_count() < 3 or (sj.bit_count() < 3 and not sk & bj)):
                    continue
                adj = list(adj1)
                classes = list(cls1)
                if not self._place(adj, classes, n + 1, sk, k):
                    continue
                yield from self._finish(adj, classes, ordn, act, at_cap)

    def _finish(self, adj, classes, ordn, act, at_cap=False):
        g = Graph(len(adj), tuple(adj), check=False)
        if solve(g.adj, g.vertex_mask, 3) is None:
            self.sink.offer(g)
            return
        if not at_cap:
            yield GenState(g, tuple(classes), ordn, act)

    # driver ------------------------------------------------------------------------

    def expand(self, s: GenState, checked: bool = False) -> None:
        if checked:
            if not (_order_ok(s) and _minimal_ok(s)):
                return
        elif not feasible(s, self.profile, self.sink):
            return
        self.sink.count(s.g.n)
        if not s.act:
            return
        u = self._pick(s)
        for child in self._children(s, u):
            self.expand(child, checked=True)

    def _pick(self, s: GenState) -> int:
        active = [v for v in s.ord if s.act >> v & 1]
        if not self.profile.lookahead or s.g.n <= self.profile.lookahead_from \
                or len(active) == 1:
            return active[-1]
        best = None
        for u in reversed(active):
            cnt = sum(1 for c in self._children(s, u) if _order_ok(c) and _minimal_ok(c))
            if best is None or cnt < best[0]:
                best = (cnt, u)
        return best[1]


def tripod_gen(profile: TripodProfile, progress: Callable[[int, int], None] | None = None
               ) -> TripodReport:
    """Run the generator from every start tuple.

    ``progress(done, found)`` is called after each start tuple.
    """
    start = time.perf_counter()
    sink = _Sink(profile)
    gen = _Gen(profile, sink)
    for idx, s in enumerate(start_states()):
        if s.g.n <= profile.max_n:
            gen.expand(s)
        if progress is not None:
            progress(idx + 1, len(sink.report.found))
    rep = sink.report
    rep.found.sort(key=lambda x: (len(x), ord(x[0]), x))
    rep.other_critical.sort(key=lambda x: (len(x), ord(x[0]), x))
    rep.nonprunable_per_order = dict(sorted(rep.nonprunable_per_order.items()))
    rep.elapsed = time.perf_counter() - start
    return rep
