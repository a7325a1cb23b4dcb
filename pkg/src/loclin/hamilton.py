"""Exact Hamilton cycle/path decisions with verifiable certificates.

The production solver is depth-first backtracking with two prunes: the
unvisited region must stay reachable, and no vertex may drop below the
number of usable neighbors it still needs. It is exact (absence means the
search completed), and a subset dynamic program over (vertex set,
endpoint) states provides an independent oracle to check it against.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import Graph, SizeLimitError, bits

ORACLE_MAX_VERTICES = 24
CYCLE_EXTENDABLE_MAX_VERTICES = 16


@dataclass(frozen=True)
class Certificate:
    """A Hamilton cycle or path as an explicit vertex sequence."""

    kind: str  # "cycle" or "path"
    seq: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "seq": list(self.seq)}

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        return cls(kind=data["kind"], seq=tuple(data["seq"]))


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """Check a certificate against the graph, trusting nothing else."""
    seq = cert.seq
    if sorted(seq) != list(range(g.n)):
        return False
    if any(not g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)):
        return False
    if cert.kind == "cycle":
        return g.n >= 3 and g.has_edge(seq[-1], seq[0])
    if cert.kind == "path":
        return True
    return False


def _reaches_all(adj: tuple[int, ...], start_mask: int, targets: int) -> bool:
    """True iff BFS from start_mask (within start|targets) covers targets."""
    reach = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & targets & ~reach
        reach |= frontier
    return targets & ~reach == 0


def find_hamilton_cycle(g: Graph) -> Optional[Certificate]:
    """A Hamilton cycle certificate, or None after exhaustive search."""
    n = g.n
    if n < 3:
        return None
    adj = g.adj
    if any(a.bit_count() < 2 for a in adj) or not g.is_connected():
        return None
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (adj[v].bit_count(), v))
    sbit = 1 << start
    by_degree = lambda w: (adj[w].bit_count(), w)
    nbrs = [tuple(sorted(bits(a), key=by_degree)) for a in adj]

    path = [start]

    def extend(u: int, visited: int) -> bool:
        if visited == full:
            return bool((adj[u] >> start) & 1)
        rest = full & ~visited
        if not (adj[start] & rest):
            return False
        if not _reaches_all(adj, 1 << u, rest):
            return False
        usable = rest | (1 << u) | sbit
        m = rest
        while m:
            b = m & -m
            m ^= b
            if (adj[b.bit_length() - 1] & usable).bit_count() < 2:
                return False
        for w in nbrs[u]:
            wb = 1 << w
            if visited & wb:
                continue
            path.append(w)
            if extend(w, visited | wb):
                return True
            path.pop()
        return False

    if extend(start, sbit):
        return Certificate("cycle", tuple(path))
    return None


def _extend_path(
    adj: tuple[int, ...],
    nbrs: list[tuple[int, ...]],
    full: int,
    path: list[int],
    u: int,
    visited: int,
) -> bool:
    if visited == full:
        return True
    rest = full & ~visited
    if not _reaches_all(adj, 1 << u, rest):
        return False
    usable = rest | (1 << u)
    short = 0
    m = rest
    while m:
        b = m & -m
        m ^= b
        avail = (adj[b.bit_length() - 1] & usable).bit_count()
        if avail == 0:
            return False
        if avail == 1:
            short += 1
            if short > 1:
                return False
    for w in nbrs[u]:
        wb = 1 << w
        if visited & wb:
            continue
        path.append(w)
        if _extend_path(adj, nbrs, full, path, w, visited | wb):
            return True
        path.pop()
    return False


def find_hamilton_path(g: Graph) -> Optional[Certificate]:
    """A Hamilton path certificate, or None after exhaustive search."""
    n = g.n
    if n == 0:
        return Certificate("path", ())
    if n == 1:
        return Certificate("path", (0,))
    if not g.is_connected():
        return None
    adj = g.adj
    full = (1 << n) - 1
    by_degree = lambda w: (adj[w].bit_count(), w)
    nbrs = [tuple(sorted(bits(a), key=by_degree)) for a in adj]
    for start in sorted(range(n), key=by_degree):
        path = [start]
        if _extend_path(adj, nbrs, full, path, start, 1 << start):
            return Certificate("path", tuple(path))
    return None


def find_hamilton_path_ending_at(g: Graph, end: int) -> Optional[Certificate]:
    """A Hamilton path with its last vertex equal to end, or None."""
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return Certificate("path", (0,)) if end == 0 else None
    if not g.is_connected():
        return None
    adj = g.adj
    full = (1 << n) - 1
    by_degree = lambda w: (adj[w].bit_count(), w)
    nbrs = [tuple(sorted(bits(a), key=by_degree)) for a in adj]
    path = [end]
    if _extend_path(adj, nbrs, full, path, end, 1 << end):
        return Certificate("path", tuple(reversed(path)))
    return None


# --- subset dynamic programming oracle ---------------------------------------


@functools.lru_cache(maxsize=8)
def _popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint32))


@functools.lru_cache(maxsize=8)
def _layer_indices(n: int) -> list[np.ndarray]:
    """For each popcount c, the subsets of [n] containing vertex 0."""
    pc = _popcounts(n)
    sets = np.arange(1 << n, dtype=np.uint32)
    odd = sets[(sets & 1) == 1]
    pc_odd = pc[odd]
    return [odd[pc_odd == c] for c in range(n + 1)]


def _anchored_path_dp(adj: tuple[int, ...], n: int) -> np.ndarray:
    """dp[S] = endpoint mask of paths covering S that start at vertex 0.

    Only entries with bit 0 set in S are meaningful.
    """
    if n > 20:
        # Unbuffered per-layer recomputation keeps memory linear in 2^n.
        pc = np.bitwise_count(np.arange(1 << n, dtype=np.uint32))
        sets = np.arange(1 << n, dtype=np.uint32)
        odd = sets[(sets & 1) == 1]
        pc_odd = pc[odd]
        layers = [odd[pc_odd == c] for c in range(n + 1)]
    else:
        layers = _layer_indices(n)
    dp = np.zeros(1 << n, dtype=np.uint32)
    dp[1] = 1
    for c in range(2, n + 1):
        layer = layers[c]
        for w in range(1, n):
            wbit = np.uint32(1 << w)
            with_w = layer[(layer & wbit) != 0]
            if with_w.size == 0:
                continue
            prev = dp[with_w ^ wbit]
            hits = with_w[(prev & np.uint32(adj[w])) != 0]
            dp[hits] |= wbit
    return dp


def hamiltonicity_oracle(g: Graph) -> bool:
    """Exact hamiltonicity by subset DP; independent of the backtracker."""
    n = g.n
    if n > ORACLE_MAX_VERTICES:
        raise SizeLimitError(
            f"hamiltonicity oracle limited to {ORACLE_MAX_VERTICES} vertices, got {n}"
        )
    if n < 3:
        return False
    if any(a.bit_count() < 2 for a in g.adj) or not g.is_connected():
        return False
    dp = _anchored_path_dp(g.adj, n)
    return bool(dp[(1 << n) - 1] & np.uint32(g.adj[0]))


def is_fully_cycle_extendable(g: Graph) -> bool:
    """Every vertex lies on a triangle, and every cycle on a proper vertex
    subset extends to a cycle on one more vertex."""
    n = g.n
    if n > CYCLE_EXTENDABLE_MAX_VERTICES:
        raise SizeLimitError(
            f"cycle extendability limited to {CYCLE_EXTENDABLE_MAX_VERTICES}"
            f" vertices, got {n}"
        )
    if n < 3:
        return False
    adj = g.adj
    for v in range(n):
        if not any(adj[w] & adj[v] for w in bits(adj[v])):
            return False

    # cyclable[S] = some cycle visits exactly S; computed per anchor
    # a = min(S) with a path DP on the vertices >= a.
    cyclable = np.zeros(1 << n, dtype=bool)
    for a in range(n - 2):
        k = n - a
        sub = tuple((adj[a + i] >> a) for i in range(k))
        dp = _anchored_path_dp(sub, k)
        sizes = np.bitwise_count(np.arange(1 << k, dtype=np.uint32))
        closes = (dp & np.uint32(sub[0])) != 0
        good = np.nonzero(closes & (sizes >= 3))[0]
        cyclable[good.astype(np.int64) << a] = True

    full = (1 << n) - 1
    extendable = np.zeros(1 << n, dtype=bool)
    sets = np.arange(1 << n, dtype=np.int64)
    for w in range(n):
        wbit = 1 << w
        without = sets[(sets & wbit) == 0]
        extendable[without] |= cyclable[without | wbit]
    bad = cyclable & ~extendable
    bad[full] = False
    return not bad.any()
