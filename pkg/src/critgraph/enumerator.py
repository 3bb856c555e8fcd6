"""Generation of k-critical graphs in a class defined by forbidden induced subgraphs.

A graph that is (k-1)-colorable is grown by one vertex at a time.  The new
vertex's neighborhood is restricted by one applicable rule:

1. similar vertices ``(u, v)``: ``u`` is a neighbor, and the new vertex can
   share ``v``'s color in some (k-1)-coloring of the extension minus ``u``;
2. a vertex ``u`` of degree at most ``k - 2``: ``u`` is a neighbor;
3. similar edges, 4. similar triangles: the analogous disjunctions;
5. otherwise every nonempty neighborhood (critical graphs are connected).

Each rule alone is complete, so any applicable one may be used.  By default
the rule among 1-3 with the fewest children is chosen; ``selection="first"``
takes them in the order listed.

Neighborhoods that would create a forbidden pattern are never produced:
each pattern is compiled into obstruction pairs ``(W, T)`` and the
neighborhood is built bit by bit, rejecting ``S & W == T`` as soon as ``W``
is decided.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import detect
from .canon import SeenSet, canonical_graph
from .coloring import (
    HullOracle,
    find_similar_edges,
    find_similar_triangles,
    find_similar_vertices,
    is_k_critical,
    is_k_vertex_critical,
    solve,
)
from .detect import Pattern, contains_any, extension_obstructions
from .graph import MAX_VERTICES, Graph, iter_bits, to_graph6

log = logging.getLogger(__name__)

CRITICAL = "critical"
VERTEX_CRITICAL = "vertex-critical"
FEWEST = "fewest-children"
FIRST = "first"


@dataclass
class EnumProfile:
    k: int = 4
    forbidden: list[Pattern] = field(default_factory=lambda: [detect.PATH(6)])
    max_n: int | None = None
    mode: str = CRITICAL
    seeds: list[Graph] | None = None
    selection: str = FEWEST

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.max_n is not None and not 1 <= self.max_n <= MAX_VERTICES:
            raise ValueError(f"max_n must be in 1..{MAX_VERTICES}")
        if self.mode not in (CRITICAL, VERTEX_CRITICAL):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.selection not in (FEWEST, FIRST):
            raise ValueError(f"unknown selection {self.selection!r}")
        if not any(p.kind == "path" for p in self.forbidden):
            raise ValueError("the forbidden list must contain a path")

    def accepts(self, g: Graph) -> bool:
        """The recording test: criticality in the class, or vertex-criticality."""
        if self.mode == CRITICAL:
            return is_k_critical(g, self.k, self.forbidden)
        return is_k_vertex_critical(g, self.k)


@dataclass
class RunReport:
    found: list[str] = field(default_factory=list)
    generated_per_order: dict[int, int] = field(default_factory=dict)
    max_n: int | None = None
    elapsed: float = 0.0

    @property
    def exhaustive(self) -> bool:
        return self.max_n is None

    @property
    def found_per_order(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for line in self.found:
            n = ord(line[0]) - 63
            counts[n] = counts.get(n, 0) + 1
        return dict(sorted(counts.items()))

    def record(self, g: Graph) -> None:
        self.found.append(to_graph6(g))

    def finish(self) -> None:
        self.found = sorted(set(self.found), key=lambda s: (len(s), ord(s[0]), s))
        self.generated_per_order = dict(sorted(self.generated_per_order.items()))


# seeds ---------------------------------------------------------------------------------


def default_seeds(k: int, forbidden: list[Pattern], max_n: int | None) -> list[Graph]:
    """K_k plus every odd hole and odd antihole that a k-critical graph in the
    class can contain.  A k-critical graph other than K_k has clique number
    below k, so it is imperfect and contains one of these by the strong perfect
    graph theorem; antiholes with clique number >= k are excluded."""
    t = min(p.order for p in forbidden if p.kind == "path")
    cap = max_n if max_n is not None else MAX_VERTICES
    seeds = [Graph.complete(k)]
    m = 5
    while m <= min(cap, t):
        seeds.append(Graph.cycle(m))
        m += 2
    m = 7
    while m <= cap and (m - 1) // 2 <= k - 1:
        seeds.append(Graph.cycle(m).complement())
        m += 2
    return [g for g in seeds if g.n <= cap and not contains_any(g, forbidden)]


# expansion rules -----------------------------------------------------------------------


def compile_obstructions(g: Graph, forbidden: Iterable[Pattern]):
    """Obstruction pairs grouped by the highest vertex of ``W``.

    Returns ``None`` when every extension contains a pattern.
    """
    groups: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for p in forbidden:
        for w, t in extension_obstructions(g, p):
            if w == 0:
                return None
            groups[w.bit_length() - 1].append((w, t))
    return groups


def free_neighborhoods(n: int, groups, must: int = 0, mustnot: int = 0,
                       cond: Callable[[int, int], bool] | None = None,
                       keys: int = 0) -> list[int]:
    """All ``S`` with ``must ⊆ S``, ``S ∩ mustnot = ∅``, no ``S & W == T`` and
    ``cond(S, -1)``.

    ``cond(s, decided)`` may only turn false as ``s`` grows or as bits of
    ``keys`` are decided against; it is checked at those points so dead
    branches are cut early.
    """
    out: list[int] = []
    if groups is None:
        return out

    def rec(i, s):
        if i == n:
            if cond is None or cond(s, -1):
                out.append(s)
            return
        bit = 1 << i
        grp = groups[i]
        decided = (bit << 1) - 1
        if not must & bit:
            for w, t in grp:
                if s & w == t:
                    break
            else:
                if cond is None or not keys & bit or cond(s, decided):
                    rec(i + 1, s)
        if not mustnot & bit:
            s2 = s | bit
            for w, t in grp:
                if s2 & w == t:
                    break
            else:
                if cond is None or cond(s2, decided):
                    rec(i + 1, s2)

    rec(0, 0)
    return out


@dataclass
class Rule:
    """The expansion rule chosen for one graph.

    ``cond(s, decided)`` must hold for the final neighborhood (``decided`` is
    -1 then); with bits outside ``decided`` still open it is a necessary
    condition for every completion of ``s``.
    """

    name: str
    tuple: tuple = ()
    must: int = 0
    mustnot: int = 0
    cond: Callable[[int, int], bool] | None = None
    keys: int = 0

    def accepts(self, s: int) -> bool:
        if s & self.must != self.must or s & self.mustnot:
            return False
        return self.cond is None or self.cond(s, -1)


def choose_rule(g: Graph, k: int) -> Rule:
    """The first applicable rule for a (k-1)-colorable graph ``g``."""
    adj = g.adj
    full = g.vertex_mask
    h = k - 1
    sim = find_similar_vertices(g, h)
    if sim is not None:
        u, v = sim
        oracle = HullOracle(adj, full & ~(1 << u), h)
        ubit = 1 << u
        return Rule("similar-vertices", sim, must=ubit, mustnot=1 << v,
                    cond=lambda s, d: oracle.can_avoid(v, s & ~ubit))
    for u in range(g.n):
        if g.degree(u) <= k - 2:
            return Rule("low-degree", (u,), must=1 << u)
    sim = find_similar_edges(g, h)
    if sim is not None:
        u, v, u2, v2 = sim
        U = (1 << u) | (1 << v)
        oracle = HullOracle(adj, full & ~U, h)
        return Rule("similar-edges", sim, keys=U,
                    cond=_disjunction(oracle, ((u, u2), (v, v2)), U))
    sim = find_similar_triangles(g, h)
    if sim is not None:
        first, second = sim[:3], sim[3:]
        U = (1 << first[0]) | (1 << first[1]) | (1 << first[2])
        oracle = HullOracle(adj, full & ~U, h)
        return Rule("similar-triangles", sim, keys=U,
                    cond=_disjunction(oracle, tuple(zip(first, second)), U))
    # a critical graph is connected, so some new vertex has a neighbor here
    return Rule("all", cond=lambda s, d: s != 0 or d != -1)


def _disjunction(oracle: HullOracle, pairs, U: int):
    """Some ``a`` of ``pairs`` is a neighbor and the new vertex can share the
    color of its partner ``b`` in the hull of the extension minus ``U``."""

    def cond(s, decided):
        rest = s & ~U
        for a, b in pairs:
            bit = 1 << a
            if (s & bit or not decided & bit) and oracle.can_avoid(b, rest):
                return True
        return False

    return cond


def candidate_rules(g: Graph, k: int) -> Iterator[Rule]:
    """Every similar-vertex pair, low-degree vertex and similar-edge tuple of ``g``."""
    adj = g.adj
    full = g.vertex_mask
    h = k - 1
    for u in range(g.n):
        ubit = 1 << u
        oracle = None
        for v in iter_bits(full & ~adj[u] & ~ubit):
            if oracle is None:
                oracle = HullOracle(adj, full & ~ubit, h)
            if oracle.covers(v, adj[u]):
                yield Rule("similar-vertices", (u, v), must=ubit, mustnot=1 << v,
                           cond=lambda s, d, o=oracle, v=v, ub=ubit: o.can_avoid(v, s & ~ub))
    for u in range(g.n):
        if g.degree(u) <= k - 2:
            yield Rule("low-degree", (u,), must=1 << u)
    for u in range(g.n):
        for v in iter_bits(adj[u]):
            U = (1 << u) | (1 << v)
            oracle = HullOracle(adj, full & ~U, h)
            for u2 in iter_bits(full & ~U):
                if not oracle.covers(u2, adj[u] & ~U):
                    continue
                for v2 in iter_bits(adj[u2] & ~U):
                    if oracle.covers(v2, adj[v] & ~U):
                        yield Rule("similar-edges", (u, v, u2, v2), keys=U,
                                   cond=_disjunction(oracle, ((u, u2), (v, v2)), U))


def expansions(g: Graph, profile: EnumProfile, rule: Rule | None = None) -> list[int]:
    """Neighborhood masks of the children of a (k-1)-colorable graph.

    With the ``fewest-children`` selection every similar pair, low-degree
    vertex and similar-edge tuple is tried and the smallest child set kept;
    triangles and the catch-all rule are used only when none exists.
    """
    groups = compile_obstructions(g, profile.forbidden)
    if groups is None:
        return []

    def apply(r):
        return free_neighborhoods(g.n, groups, r.must, r.mustnot, r.cond, r.keys)

    if rule is not None or profile.selection == FIRST:
        return apply(rule if rule is not None else choose_rule(g, profile.k))
    best = None
    for r in candidate_rules(g, profile.k):
        kids = apply(r)
        if best is None or len(kids) < len(best):
            best = kids
            if not kids:
                break
    if best is not None:
        return best
    return apply(choose_rule(g, profile.k))


# driver ----------------------------------------------------------------------------------


def construct_step(g: Graph, profile: EnumProfile, seen: SeenSet, out: RunReport,
                   trusted: bool = False) -> list[Graph]:
    """One call of the construction on ``g``; returns the children to construct.

    ``trusted`` skips the pattern check for children produced by
    :func:`expansions`, which are pattern-free by construction.
    """
    if not trusted and contains_any(g, profile.forbidden):
        return []
    cg = canonical_graph(g)
    if not seen.insert_key(cg.adj):
        return []
    out.generated_per_order[cg.n] = out.generated_per_order.get(cg.n, 0) + 1
    return _process(cg, profile, out)


def _process(g: Graph, profile: EnumProfile, out: RunReport) -> list[Graph]:
    accepted, kids = _work(g, profile)
    if accepted:
        out.record(g)
    return kids


def _work(g: Graph, profile: EnumProfile) -> tuple[bool, list[Graph]]:
    if solve(g.adj, g.vertex_mask, profile.k - 1) is None:
        return profile.accepts(g), []
    if profile.max_n is not None and g.n >= profile.max_n:
        return False, []
    return False, [g.add_vertex(s) for s in expansions(g, profile)]


_PROFILE: EnumProfile | None = None


def _init_worker(profile: EnumProfile) -> None:
    global _PROFILE
    _PROFILE = profile


def _pool_work(g: Graph) -> tuple[bool, list[Graph]]:
    return _work(g, _PROFILE)


def run(profile: EnumProfile, progress: Callable[[int, int], None] | None = None,
        workers: int = 1) -> RunReport:
    """Construct from every seed, level by level, until nothing new appears.

    Deduplication happens in this process; with ``workers > 1`` the coloring
    test and the expansion of each new graph run in a process pool.  The
    result does not depend on the worker count.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    start = time.perf_counter()
    report = RunReport(max_n=profile.max_n)
    seeds = profile.seeds
    if seeds is None:
        seeds = default_seeds(profile.k, profile.forbidden, profile.max_n)
    seen = SeenSet()
    levels: dict[int, list[tuple[Graph, bool]]] = {}
    for s in seeds:
        levels.setdefault(s.n, []).append((s, False))
    pool = None
    if workers > 1:
        import multiprocessing

        pool = multiprocessing.Pool(workers, _init_worker, (profile,))
    try:
        while levels:
            n = min(levels)
            fresh = []
            for g, trusted in levels.pop(n):
                if not trusted and contains_any(g, profile.forbidden):
                    continue
                cg = canonical_graph(g)
                if seen.insert_key(cg.adj):
                    fresh.append(cg)
            report.generated_per_order[n] = len(fresh)
            if pool is None:
                results = (_work(g, profile) for g in fresh)
            else:
                results = pool.imap(_pool_work, fresh, chunksize=8)
            nxt = []
            for g, (accepted, kids) in zip(fresh, results):
                if accepted:
                    report.record(g)
                nxt.extend(kids)
            if nxt:
                levels.setdefault(n + 1, []).extend((c, True) for c in nxt)
            if progress is not None:
                progress(n, len(fresh))
            log.debug("order %d: %d accepted", n, len(fresh))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    report.generated_per_order = {n: c for n, c in report.generated_per_order.items() if c}
    report.finish()
    report.elapsed = time.perf_counter() - start
    return report
