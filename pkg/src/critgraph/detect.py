"""Induced-subgraph detection for paths, cycles and a few fixed small patterns.

Besides whole-graph checks this module answers the incremental question
asked by the generators: given a pattern-free graph ``g`` and a new vertex
attached to a neighbor set ``S``, does the extension contain the pattern?
:func:`extension_obstructions` compiles that question into ``(W, T)`` mask
pairs; the extension contains the pattern iff ``S & W == T`` for some pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits

MAX_ORDER = 8


@dataclass(frozen=True)
class Pattern:
    kind: str  # "path", "cycle", "diamond" or "k4"
    order: int

    def __post_init__(self):
        if self.kind not in ("path", "cycle", "diamond", "k4"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "path" and not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"path order must be in 1..{MAX_ORDER}")
        if self.kind == "cycle" and not 3 <= self.order <= MAX_ORDER:
            raise ValueError(f"cycle order must be in 3..{MAX_ORDER}")

    @property
    def name(self) -> str:
        if self.kind == "path":
            return f"P{self.order}"
        if self.kind == "cycle":
            return "triangle" if self.order == 3 else f"C{self.order}"
        return self.kind

    def __str__(self) -> str:
        return self.name


def PATH(t: int) -> Pattern:
    return Pattern("path", t)


def CYCLE(t: int) -> Pattern:
    return Pattern("cycle", t)


DIAMOND = Pattern("diamond", 4)
K4 = Pattern("k4", 4)
TRIANGLE = CYCLE(3)
C4 = CYCLE(4)
C5 = CYCLE(5)


def parse_pattern(text: str) -> Pattern:
    t = text.strip().lower()
    if t == "diamond":
        return DIAMOND
    if t == "k4":
        return K4
    if t in ("k3", "triangle", "c3"):
        return TRIANGLE
    if t[:1] in ("p", "c") and t[1:].isdigit():
        return PATH(int(t[1:])) if t[0] == "p" else CYCLE(int(t[1:]))
    raise ValueError(f"unrecognised pattern {text!r}")


def pattern_graph(p: Pattern) -> Graph:
    """The pattern as a graph, vertex order matching :func:`find_induced` witnesses."""
    if p.kind == "path":
        return Graph.path(p.order)
    if p.kind == "cycle":
        return Graph.cycle(p.order)
    if p.kind == "k4":
        return Graph.complete(4)
    # diamond: 0,1 are the adjacent degree-3 vertices, 2,3 the non-adjacent pair
    return Graph.complete(4).delete_edge(2, 3)


# whole-graph search -------------------------------------------------------------
#
# Path and cycle searches grow a sequence one vertex at a time.  `blocked` is the
# union of closed neighborhoods of every sequence vertex except the current end,
# so a candidate is any neighbor of the end outside `blocked`: this rejects chords
# in O(1) per step.


def _path_from(adj, last, blocked, need, avail, path):
    if need == 0:
        return list(path)
    cand = adj[last] & avail & ~blocked
    nb = blocked | adj[last] | (1 << last)
    while cand:
        low = cand & -cand
        w = low.bit_length() - 1
        path.append(w)
        found = _path_from(adj, w, nb, need - 1, avail, path)
        if found:
            return found
        path.pop()
        cand ^= low
    return None


def _find_path(adj, t, avail):
    for s in iter_bits(avail):
        found = _path_from(adj, s, 0, t - 1, avail, [s])
        if found:
            return found
    return None


def _cycle_from(adj, s, closed_s, last, blocked, size, t, avail, path):
    # path = c_0 (= s, the smallest cycle vertex) .. c_{size-1} = last;
    # blocked = closed nbhds of c_1 .. c_{size-2}
    if size == t - 1:
        cand = adj[last] & adj[s] & avail & ~blocked
        if cand:
            return path + [(cand & -cand).bit_length() - 1]
        return None
    if size == 1:
        cand = adj[s] & avail
        nb = 0
    else:
        cand = adj[last] & avail & ~blocked & ~closed_s
        nb = blocked | adj[last] | (1 << last)
    while cand:
        low = cand & -cand
        w = low.bit_length() - 1
        path.append(w)
        found = _cycle_from(adj, s, closed_s, w, nb, size + 1, t, avail, path)
        if found:
            return found
        path.pop()
        cand ^= low
    return None


def _find_cycle(adj, t, avail):
    for s in iter_bits(avail):
        above = avail & ~((2 << s) - 1)
        found = _cycle_from(adj, s, adj[s] | (1 << s), s, 0, 1, t, above, [s])
        if found:
            return found
    return None


def _find_diamond(adj, avail):
    for u in iter_bits(avail):
        for v in iter_bits(adj[u] & avail & ~((2 << u) - 1)):
            common = adj[u] & adj[v] & avail
            for c in iter_bits(common):
                rest = common & ~adj[c] & ~(1 << c)
                if rest:
                    return [u, v, c, (rest & -rest).bit_length() - 1]
    return None


def _find_k4(adj, avail):
    for u in iter_bits(avail):
        for v in iter_bits(adj[u] & avail & ~((2 << u) - 1)):
            common = adj[u] & adj[v] & avail & ~((2 << v) - 1)
            for c in iter_bits(common):
                rest = common & adj[c]
                if rest:
                    return [u, v, c, (rest & -rest).bit_length() - 1]
    return None


def find_induced(g: Graph, p: Pattern, within: int | None = None) -> list[int] | None:
    """A witness embedding (pattern vertex ``i`` -> ``result[i]``), or ``None``."""
    avail = g.vertex_mask if within is None else within & g.vertex_mask
    adj = g.adj
    if p.kind == "path":
        return _find_path(adj, p.order, avail)
    if p.kind == "cycle":
        return _find_cycle(adj, p.order, avail)
    if p.kind == "diamond":
        return _find_diamond(adj, avail)
    return _find_k4(adj, avail)


def contains_induced(g: Graph, p: Pattern) -> bool:
    return find_induced(g, p) is not None


def contains_any(g: Graph, patterns) -> bool:
    return any(find_induced(g, p) is not None for p in patterns)


# paths through a given vertex -----------------------------------------------------


def _arm(adj, last, blocked, remaining, avail):
    if remaining == 0:
        return True
    cand = adj[last] & avail & ~blocked
    nb = blocked | adj[last] | (1 << last)
    while cand:
        low = cand & -cand
        if _arm(adj, low.bit_length() - 1, nb, remaining - 1, avail):
            return True
        cand ^= low
    return False


def _left_arm(adj, x, last, blocked, lclosed, remaining, avail):
    # left arm x, l1 .. la with la = last; blocked = closed nbhds of x .. l(a-1);
    # lclosed = closed nbhds of l1 .. la (x excluded)
    if remaining == 0:
        return True
    if last != x and _arm(adj, x, lclosed, remaining, avail):
        return True
    if last == x:
        cand = adj[x] & avail
        nb = 0
    else:
        cand = adj[last] & avail & ~blocked
        nb = blocked
    nb |= adj[last] | (1 << last)
    while cand:
        low = cand & -cand
        w = low.bit_length() - 1
        if _left_arm(adj, x, w, nb, lclosed | adj[w] | low, remaining - 1, avail):
            return True
        cand ^= low
    return False


def has_path_through(adj, x: int, t: int, avail: int) -> bool:
    """True iff the graph restricted to ``avail`` has an induced ``P_t`` using ``x``."""
    if not avail >> x & 1:
        return False
    return _left_arm(adj, x, x, 0, 0, t - 1, avail)


# extension obstructions -------------------------------------------------------------


def induced_paths(g: Graph, max_order: int) -> list[tuple[int, int, int]]:
    """Every induced path with at most ``max_order`` vertices, once each.

    Returned as ``(mask, end_a, end_b)`` (``end_a == end_b`` for single vertices).
    """
    out: list[tuple[int, int, int]] = []
    if max_order < 1:
        return out
    for s in range(g.n):
        _paths_from(g.adj, s, out, max_order)
    return out


def _paths_from(adj, s, out, max_order):
    # records each path once, from its smaller end s
    out.append((1 << s, s, s))
    stack = [(s, 0, 1 << s, 1)]
    while stack:
        last, blocked, mask, size = stack.pop()
        if size == max_order:
            continue
        cand = adj[last] & ~blocked & ~mask
        nb = blocked | adj[last] | (1 << last)
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            if w > s:
                out.append((mask | low, s, w))
            stack.append((w, nb, mask | low, size + 1))
            cand ^= low


def _closed(adj, mask):
    c = mask
    for v in iter_bits(mask):
        c |= adj[v]
    return c


def extension_obstructions(g: Graph, p: Pattern) -> set[tuple[int, int]]:
    """Pairs ``(W, T)`` such that ``g`` plus a vertex on ``S`` induces ``p`` through
    the new vertex iff ``S & W == T`` for one of the pairs."""
    adj = g.adj
    obs: set[tuple[int, int]] = set()
    if p.kind == "path":
        t = p.order
        if t == 1:
            obs.add((0, 0))
            return obs
        paths = induced_paths(g, t - 1)
        by_size: dict[int, list[tuple[int, int, int]]] = {}
        for rec in paths:
            by_size.setdefault(rec[0].bit_count(), []).append(rec)
        # new vertex at an end
        for mask, a, b in by_size.get(t - 1, ()):
            obs.add((mask, 1 << a))
            obs.add((mask, 1 << b))
        # new vertex in the interior: two anticomplete paths
        for sa in range(1, t - 1):
            sb = t - 1 - sa
            if sa > sb:
                break
            left = by_size.get(sa, ())
            right = by_size.get(sb, ())
            for i, (m1, a1, b1) in enumerate(left):
                reach = _closed(adj, m1)
                ends1 = (a1,) if a1 == b1 else (a1, b1)
                for j, (m2, a2, b2) in enumerate(right):
                    if sa == sb and j <= i:
                        continue
                    if reach & m2:
                        continue
                    w = m1 | m2
                    for e1 in ends1:
                        obs.add((w, (1 << e1) | (1 << a2)))
                        if b2 != a2:
                            obs.add((w, (1 << e1) | (1 << b2)))
        return obs
    if p.kind == "cycle":
        t = p.order
        if t == 3:
            for u, v in g.edges():
                m = (1 << u) | (1 << v)
                obs.add((m, m))
            return obs
        for mask, a, b in induced_paths(g, t - 1):
            if mask.bit_count() == t - 1:
                obs.add((mask, (1 << a) | (1 << b)))
        return obs
    triangles = []
    for u, v in g.edges():
        for w in iter_bits(adj[u] & adj[v] & ~((2 << v) - 1)):
            triangles.append((u, v, w))
    if p.kind == "k4":
        for u, v, w in triangles:
            m = (1 << u) | (1 << v) | (1 << w)
            obs.add((m, m))
        return obs
    # diamond
    for u, v, w in triangles:
        m = (1 << u) | (1 << v) | (1 << w)
        obs.add((m, m ^ (1 << u)))
        obs.add((m, m ^ (1 << v)))
        obs.add((m, m ^ (1 << w)))
    for mask, a, b in induced_paths(g, 3):
        if mask.bit_count() == 3:
            obs.add((mask, mask))
    return obs
