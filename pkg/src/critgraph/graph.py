"""Small simple undirected graphs with one bitmask per adjacency row."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32


class GraphError(ValueError):
    pass


class CapacityError(GraphError):
    pass


class Graph:
    """Immutable graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None, *, check: bool = True):
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"graph order {n} outside 0..{MAX_VERTICES}")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if check:
            if len(adj) != n:
                raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"vertex {v} has neighbor index >= {n}")
                if row >> v & 1:
                    raise GraphError(f"loop at vertex {v}")
                r = row
                while r:
                    low = r & -r
                    u = low.bit_length() - 1
                    if not adj[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {v} and {u}")
                    r ^= low
        self.n = n
        self.adj = adj
        self._hash = None

    # construction helpers

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n > MAX_VERTICES:
            raise CapacityError(f"graph order {n} exceeds {MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)], check=False)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n, check=False)

    # basic queries

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield u, v
                row >>= 1
                v += 1

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, [full ^ row ^ (1 << v) for v, row in enumerate(self.adj)], check=False)

    # mutation (all return new graphs)

    def add_vertex(self, nbrs: int | Iterable[int] = 0) -> "Graph":
        """Return a copy with one new vertex ``n`` adjacent exactly to ``nbrs``."""
        if self.n >= MAX_VERTICES:
            raise CapacityError(f"cannot grow beyond {MAX_VERTICES} vertices")
        mask = nbrs if isinstance(nbrs, int) else to_mask(nbrs)
        if mask & ~self.vertex_mask or mask < 0:
            raise GraphError("neighborhood contains vertices outside the graph")
        x = self.n
        bit = 1 << x
        adj = [row | bit if mask >> v & 1 else row for v, row in enumerate(self.adj)]
        adj.append(mask)
        return Graph(x + 1, adj, check=False)

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced(self.vertex_mask & ~(1 << v))

    def delete_vertices(self, mask: int) -> "Graph":
        return self.induced(self.vertex_mask & ~mask)

    def delete_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if not self.adj[u] >> v & 1:
            raise GraphError(f"{u}-{v} is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj, check=False)

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj, check=False)

    def induced(self, s: int | Iterable[int]) -> "Graph":
        """Subgraph induced on ``s``; vertices keep their relative order."""
        mask = s if isinstance(s, int) else to_mask(s)
        if mask & ~self.vertex_mask or mask < 0:
            raise GraphError("vertex set not contained in the graph")
        if mask == self.vertex_mask:
            return self
        keep = list(iter_bits(mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            r = self.adj[v] & mask
            while r:
                low = r & -r
                row |= 1 << pos[low.bit_length() - 1]
                r ^= low
            adj.append(row)
        return Graph(len(keep), adj, check=False)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is the old vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = []
        for v in order:
            row = 0
            r = self.adj[v]
            while r:
                low = r & -r
                row |= 1 << pos[low.bit_length() - 1]
                r ^= low
            adj.append(row)
        return Graph(self.n, adj, check=False)

    def merge(self, u: int, v: int) -> "Graph":
        """Identify ``v`` into ``u`` (``u`` keeps the union neighborhood)."""
        if self.adj[u] >> v & 1:
            raise GraphError("cannot merge adjacent vertices")
        adj = list(self.adj)
        adj[u] |= adj[v]
        r = adj[v]
        while r:
            low = r & -r
            w = low.bit_length() - 1
            adj[w] |= 1 << u
            r ^= low
        return Graph(self.n, adj, check=False).delete_vertex(v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # dunder

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise GraphError(f"negative vertex index {v}")
        m |= 1 << v
    return m


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, adj, check=False)


# graph6 ---------------------------------------------------------------------


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int, line: int | None = None):
        where = f"line {line}, byte {offset}" if line is not None else f"byte {offset}"
        super().__init__(f"{message} ({where})")
        self.message = message
        self.offset = offset
        self.line = line


def to_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        raise Graph6Error("graph6 header not accepted; strip it first", 0)
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", i)
    if s[0] == "~":
        # multi-byte order field; decoded only to report capacity
        if len(s) >= 4 and s[1] != "~":
            n = 0
            for ch in s[1:4]:
                n = (n << 6) | (ord(ch) - 63)
            raise CapacityError(f"graph6 order {n} exceeds {MAX_VERTICES} vertices")
        raise CapacityError(f"graph6 order exceeds {MAX_VERTICES} vertices")
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 order {n} exceeds {MAX_VERTICES} vertices")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(s) - 1}",
                          min(len(s), 1 + need))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    tail = n * (n - 1) // 2
    if tail % 6:
        last = ord(s[-1]) - 63
        if last & ((1 << (6 - tail % 6)) - 1):
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph(n, adj, check=False)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield from_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(exc.message, exc.offset, lineno) from None
