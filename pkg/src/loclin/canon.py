"""Canonical labeling and isomorphism testing.

Method: equitable degree/neighborhood refinement, then backtracking over
the orbits of the remaining non-singleton cells, keeping the
lexicographically least upper-triangle bit string over the
refinement-consistent labelings. The canonical bytes are exactly the
graph6 encoding of the relabeled graph, so equal bytes mean isomorphic and
the bytes double as a portable key.

Disconnected graphs are canonicalized per component and composed in sorted
component order; the backtracking search only ever runs on connected
graphs, where refinement discretizes quickly.

Automorphisms discovered while searching serve two purposes: orbit-based
branch pruning (candidates equivalent under the stabilizer of the current
prefix are tried once), and the exported vertex orbits that isomorph-free
generation uses to recognize equivalent vertex deletions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, parse_graph6


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical byte key plus the relabeling that produced it.

    order[i] is the original vertex sitting at canonical position i. Two
    graphs are isomorphic iff their keys compare equal.
    """

    key: bytes
    order: tuple[int, ...]


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _refine(adj: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    """Equitable refinement with an isomorphism-invariant cell order.

    Each round recolors vertices by (old color, sorted multiset of neighbor
    colors) and renumbers colors by sorted signature, so the resulting cell
    order depends only on the isomorphism type.
    """
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[w] for w in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _g6_header(n: int) -> bytearray:
    out = bytearray()
    if n <= 62:
        out.append(63 + n)
    else:
        out += bytes((126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)))
    return out


def _key_bytes(adj: tuple[int, ...], n: int, order: list[int]) -> bytes:
    """graph6 bytes of the graph relabeled so order[i] sits at position i."""
    out = _g6_header(n)
    acc = 0
    nbits = 0
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            acc = (acc << 1) | ((aj >> order[i]) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def _normalize(colors: list[int]) -> list[int]:
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [rank[c] for c in colors]


def _swappable(adj: tuple[int, ...], v: int, u: int) -> bool:
    """True if exchanging u and v is evidently an automorphism (twins)."""
    if adj[u] == adj[v]:
        return True
    swap = (1 << u) | (1 << v)
    return adj[u] ^ swap == adj[v] and bool((adj[u] >> v) & 1)


def _transposition(n: int, u: int, v: int) -> tuple[int, ...]:
    perm = list(range(n))
    perm[u], perm[v] = v, u
    return tuple(perm)


def _canon_connected(
    adj: tuple[int, ...], n: int
) -> tuple[bytes, list[int], _UnionFind]:
    """Backtracking canonical search for a connected graph."""
    uf = _UnionFind(n)
    degs = sorted({a.bit_count() for a in adj})
    drank = {d: i for i, d in enumerate(degs)}
    colors0 = _refine(adj, n, [drank[a.bit_count()] for a in adj])

    best_key: bytes | None = None
    best_order: list[int] | None = None
    generators: list[tuple[int, ...]] = []

    def record_automorphism(perm: tuple[int, ...]) -> None:
        generators.append(perm)
        for a in range(n):
            if perm[a] != a:
                uf.union(a, perm[a])

    def leaf(colors: list[int]) -> None:
        nonlocal best_key, best_order
        order = sorted(range(n), key=colors.__getitem__)
        key = _key_bytes(adj, n, order)
        if best_key is None or key < best_key:
            best_key = key
            best_order = order
        elif key == best_key:
            perm = [0] * n
            for a, b in zip(best_order, order):
                perm[a] = b
            record_automorphism(tuple(perm))

    def descend(colors: list[int], prefix: list[int]) -> None:
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target_color = min((c for c, k in counts.items() if k > 1), default=-1)
        if target_color < 0:
            leaf(colors)
            return
        cell = [v for v in range(n) if colors[v] == target_color]
        # Orbit pruning: candidates equivalent under automorphisms fixing
        # the individualized prefix pointwise lead to equal-key subtrees.
        stab = _UnionFind(n)
        gen_seen = 0

        def absorb() -> None:
            nonlocal gen_seen
            while gen_seen < len(generators):
                perm = generators[gen_seen]
                gen_seen += 1
                if all(perm[p] == p for p in prefix):
                    for a in range(n):
                        if perm[a] != a:
                            stab.union(a, perm[a])

        absorb()
        tried: list[int] = []
        for v in cell:
            twin = next((u for u in tried if _swappable(adj, v, u)), None)
            if twin is not None:
                record_automorphism(_transposition(n, twin, v))
                stab.union(twin, v)
                continue
            if any(stab.find(u) == stab.find(v) for u in tried):
                continue
            tried.append(v)
            branched = [2 * c for c in colors]
            branched[v] -= 1
            prefix.append(v)
            descend(_refine(adj, n, _normalize(branched)), prefix)
            prefix.pop()
            absorb()

    descend(colors0, [])
    assert best_key is not None and best_order is not None
    return best_key, best_order, uf


def _components(adj: tuple[int, ...], n: int) -> list[int]:
    """Connected components as vertex bitmasks, unordered."""
    seen = 0
    comps = []
    for v in range(n):
        if (seen >> v) & 1:
            continue
        reach = 1 << v
        frontier = reach
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= adj[w]
            frontier = nxt & ~reach
            reach |= frontier
        comps.append(reach)
        seen |= reach
    return comps


def _canonicalize(
    adj: tuple[int, ...], n: int
) -> tuple[bytes, tuple[int, ...], _UnionFind]:
    """Canonical key, relabeling, and automorphism orbits for any graph."""
    if n == 0:
        return bytes(_g6_header(0)), (), _UnionFind(0)
    comps = _components(adj, n)
    if len(comps) == 1:
        key, order, uf = _canon_connected(adj, n)
        return key, tuple(order), uf

    pieces = []
    for comp in comps:
        verts = list(bits(comp))
        index = {v: i for i, v in enumerate(verts)}
        k = len(verts)
        sub = tuple(
            sum(1 << index[w] for w in bits(adj[v]) if w in index) for v in verts
        )
        key, order, sub_uf = _canon_connected(sub, k)
        pieces.append((k, key, [verts[i] for i in order], sub_uf, verts))

    pieces.sort(key=lambda p: (p[0], p[1]))
    order: list[int] = []
    for _, _, comp_order, _, _ in pieces:
        order.extend(comp_order)
    key = _key_bytes(adj, n, order)

    uf = _UnionFind(n)
    for k, _, _, sub_uf, verts in pieces:
        for i in range(k):
            uf.union(verts[sub_uf.find(i)], verts[i])
    # Isomorphic components: align vertices through their canonical orders.
    for i, (ki, keyi, orderi, _, _) in enumerate(pieces):
        for kj, keyj, orderj, _, _ in pieces[i + 1 :]:
            if ki == kj and keyi == keyj:
                for a, b in zip(orderi, orderj):
                    uf.union(a, b)
    return key, tuple(order), uf


def canonical_form(g: Graph) -> CanonicalForm:
    key, order, _ = _canonicalize(g.adj, g.n)
    return CanonicalForm(key=key, order=order)


def canonical_key(g: Graph) -> bytes:
    return _canonicalize(g.adj, g.n)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return parse_graph6(canonical_key(g).decode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_key(g) == canonical_key(h)
