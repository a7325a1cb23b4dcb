"""Immutable simple graphs on at most 64 vertices, with graph6 serialization.

Vertices are the integers 0..n-1 and every neighbor set is a single int
bitmask, so membership tests, intersections and popcounts are one machine
word wide. Graphs are values: all operations build new graphs.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 64


class GraphError(ValueError):
    """Base class for all errors raised by this package."""


class OutOfRangeError(GraphError):
    """A vertex id or vertex count is outside the allowed range."""


class MalformedInputError(GraphError):
    """Structurally invalid input (self-loop, duplicate edge, bad format)."""


class SizeLimitError(GraphError):
    """Input exceeds the documented size envelope of an algorithm."""


class Graph6Error(MalformedInputError):
    """graph6 parse failure, carrying the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        """Normalized edge with u < v; rejects self-loops."""
        if a == b:
            raise MalformedInputError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable simple undirected graph with bitmask adjacency."""

    __slots__ = ("n", "adj", "_hash")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: tuple[int, ...]):
        # Internal constructor; adjacency is trusted. Use graph_from_edges
        # or parse_graph6 to build validated graphs.
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            w = v + 1
            while m:
                if m & 1:
                    out.append(Edge(v, w))
                m >>= 1
                w += 1
        return out

    def vertices(self) -> range:
        return range(self.n)

    def is_connected(self) -> bool:
        """True for the empty graph and every connected graph."""
        if self.n <= 1:
            return True
        full = (1 << self.n) - 1
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~reach
            reach |= frontier
        return reach == full

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={emit_graph6(self)!r})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on vertices 0..n-1 with exactly these edges.

    Self-loops and duplicate pairs are rejected loudly rather than cleaned
    up; endpoints must lie below n.
    """
    if n < 0 or n > MAX_VERTICES:
        raise OutOfRangeError(f"vertex count {n} not in 0..{MAX_VERTICES}")
    adj = [0] * n
    seen: set[Edge] = set()
    for a, b in edges:
        if not (0 <= a < n) or not (0 <= b < n):
            raise OutOfRangeError(f"edge endpoint ({a},{b}) out of range for n={n}")
        e = Edge.of(a, b)
        if e in seen:
            raise MalformedInputError(f"duplicate edge ({e.u},{e.v})")
        seen.add(e)
        adj[e.u] |= 1 << e.v
        adj[e.v] |= 1 << e.u
    return Graph(n, tuple(adj))


def graph_from_adj(adj: Iterable[int]) -> Graph:
    """Build a graph from raw adjacency bitmasks, validating symmetry."""
    masks = tuple(adj)
    n = len(masks)
    if n > MAX_VERTICES:
        raise OutOfRangeError(f"vertex count {n} exceeds {MAX_VERTICES}")
    for v, a in enumerate(masks):
        if a >> n:
            raise OutOfRangeError(f"neighbor id of vertex {v} out of range")
        if (a >> v) & 1:
            raise MalformedInputError(f"self-loop at vertex {v}")
    for v, a in enumerate(masks):
        for w in bits(a):
            if not (masks[w] >> v) & 1:
                raise MalformedInputError(f"asymmetric adjacency between {v} and {w}")
    return Graph(n, masks)


# --- graph6 ----------------------------------------------------------------
#
# Header-less graph6: N(n) followed by the upper triangle of the adjacency
# matrix in column-major order (x_{0,1}; x_{0,2}, x_{1,2}; x_{0,3}, ...),
# packed big-endian into 6-bit groups, each offset by 63.


def emit_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray()
    if n <= 62:
        out.append(63 + n)
    else:
        out += bytes((126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)))
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def parse_graph6(line: str) -> Graph:
    """Parse one header-less graph6 string into a Graph.

    The parser is strict: every byte must be in the graph6 alphabet, the
    bit section must be exactly the right length, and padding bits must be
    zero. Errors carry the offending byte offset.
    """
    data = line.encode("ascii", errors="replace")
    if data.startswith(b">>graph6<<"):
        raise Graph6Error("unexpected graph6 header", 0)
    if not data:
        raise Graph6Error("empty graph6 string", 0)

    def val(i: int) -> int:
        c = data[i]
        if not (63 <= c <= 126):
            raise Graph6Error(f"invalid graph6 character {chr(c)!r}", i)
        return c - 63

    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("vertex count beyond supported range", 1)
        if len(data) < 4:
            raise Graph6Error("truncated vertex count", len(data))
        n = (val(1) << 12) | (val(2) << 6) | val(3)
        pos = 4
    else:
        n = val(0)
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error("truncated bit section", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing data after bit section", pos + nbytes)

    adj = [0] * n
    bit = 0
    v, u = 1, 0
    for i in range(pos, pos + nbytes):
        group = val(i)
        for k in range(5, -1, -1):
            b = (group >> k) & 1
            if bit < nbits:
                if b:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                u += 1
                if u == v:
                    v += 1
                    u = 0
            elif b:
                raise Graph6Error("nonzero padding bit", i)
            bit += 1
    return Graph(n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertex set.

    Returns (H, mapping) where mapping[i] is the original id of H's vertex
    i; originals are taken in ascending order.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise OutOfRangeError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for w in bits(g.adj[v]):
            j = index.get(w)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(vs), tuple(adj)), tuple(vs)
