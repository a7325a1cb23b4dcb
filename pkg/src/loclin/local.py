"""Local properties of graphs: path neighborhoods, triangle structure,
and the invariant suite satisfied by connected locally linear graphs.

Conventions (these matter for the degenerate cases):
  - induced subgraphs on 0 or 1 vertices count as paths, so K1, K2 and K3
    are all locally linear;
  - a 2-vertex neighborhood is a path iff the two vertices are adjacent;
  - a "1-edge" is an edge lying in exactly one triangle, a "2-edge" one
    lying in exactly two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .graph import Edge, Graph, SizeLimitError, bits, induced_subgraph
from . import hamilton


@dataclass(frozen=True)
class NeighborhoodPath:
    """Ordering of N(center) witnessing that it induces a path."""

    center: int
    order: tuple[int, ...]


def neighborhood_path(g: Graph, v: int) -> Optional[NeighborhoodPath]:
    """An ordering of N(v) forming an induced path, or None.

    Neighborhoods with at most one vertex yield the trivial ordering.
    """
    nb = g.adj[v]
    t = nb.bit_count()
    if t <= 1:
        return NeighborhoodPath(v, tuple(bits(nb)))
    members = list(bits(nb))
    within = {w: g.adj[w] & nb for w in members}
    endpoints = []
    for w in members:
        d = within[w].bit_count()
        if d > 2:
            return None
        if d <= 1:
            if d == 0:
                return None
            endpoints.append(w)
    if len(endpoints) != 2:
        return None
    # Walk from the smaller endpoint; reaching all of N(v) in t steps
    # certifies connectivity, hence a single path.
    cur = min(endpoints)
    seen = 1 << cur
    order = [cur]
    while True:
        nxt = within[cur] & ~seen
        if not nxt:
            break
        cur = (nxt & -nxt).bit_length() - 1
        seen |= 1 << cur
        order.append(cur)
    if len(order) != t:
        return None
    return NeighborhoodPath(v, tuple(order))


def is_locally_linear(g: Graph) -> tuple[bool, Optional[int]]:
    """(True, None) if every neighborhood induces a path, else the first
    violating vertex."""
    for v in range(g.n):
        if neighborhood_path(g, v) is None:
            return False, v
    return True, None


def is_locally_traceable(g: Graph) -> bool:
    for v in range(g.n):
        h, _ = induced_subgraph(g, bits(g.adj[v]))
        if hamilton.find_hamilton_path(h) is None:
            return False
    return True


def is_locally_hamiltonian(g: Graph) -> bool:
    for v in range(g.n):
        h, _ = induced_subgraph(g, bits(g.adj[v]))
        if hamilton.find_hamilton_cycle(h) is None:
            return False
    return True


def edge_triangle_classes(g: Graph) -> dict[Edge, int]:
    """Triangle count per edge: t(uv) = |N(u) ∩ N(v)|."""
    return {e: (g.adj[e.u] & g.adj[e.v]).bit_count() for e in g.edges()}


def triangle_count(g: Graph) -> int:
    total = sum((g.adj[e.u] & g.adj[e.v]).bit_count() for e in g.edges())
    assert total % 3 == 0
    return total // 3


def independence_number(g: Graph) -> int:
    """Maximum independent set size by branch and bound (n <= 32)."""
    if g.n > 32:
        raise SizeLimitError(f"independence_number limited to 32 vertices, got {g.n}")
    adj = g.adj
    best = 0

    def grow(mask: int, size: int) -> None:
        nonlocal best
        if size + mask.bit_count() <= best:
            return
        if not mask:
            best = max(best, size)
            return
        # Peel off isolated-in-mask vertices, then branch on a densest one.
        pivot = -1
        pivot_deg = -1
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = (adj[v] & mask).bit_count()
            if d == 0:
                mask ^= b
                size += 1
                if size + mask.bit_count() <= best:
                    return
            elif d > pivot_deg:
                pivot_deg = d
                pivot = v
        if not mask:
            best = max(best, size)
            return
        grow(mask & ~(adj[pivot] | (1 << pivot)), size + 1)
        grow(mask & ~(1 << pivot), size)

    grow((1 << g.n) - 1, 0)
    return best


def is_two_connected(g: Graph) -> tuple[bool, Optional[int]]:
    """(True, None) for 2-connected graphs; else (False, witness).

    The witness is an articulation vertex, or None when the graph is
    already disconnected or too small.
    """
    if g.n < 3 or not g.is_connected():
        return False, None
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest = full & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        reach = 1 << start
        frontier = reach
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & rest & ~reach
            reach |= frontier
        if reach != rest:
            return False, v
    return True, None


# --- invariant suite ---------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    counterexample: Any = None

    def to_json(self) -> dict:
        return {"pass": self.passed, "counterexample": self.counterexample}


@dataclass(frozen=True)
class InvariantReport:
    """Pass/fail ledger of the locally-linear invariant suite on one graph."""

    precondition_ok: bool
    precondition_detail: Optional[str]
    checks: dict[str, CheckResult]

    def all_pass(self) -> bool:
        return self.precondition_ok and all(c.passed for c in self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "precondition": {
                "pass": self.precondition_ok,
                "counterexample": self.precondition_detail,
            }
        }
        for name, check in self.checks.items():
            out[name] = check.to_json()
        return out


def check_local_linear_invariants(g: Graph) -> InvariantReport:
    """Run the six structural checks for connected locally linear graphs.

    Precondition (connected, locally linear, n >= 3) failures are reported
    distinctly; the checks are still evaluated so callers can inspect what
    breaks.
    """
    ok, bad_vertex = is_locally_linear(g)
    if g.n < 3:
        pre, detail = False, f"order {g.n} < 3"
    elif not g.is_connected():
        pre, detail = False, "not connected"
    elif not ok:
        pre, detail = False, f"not locally linear at vertex {bad_vertex}"
    else:
        pre, detail = True, None

    checks: dict[str, CheckResult] = {}
    te = edge_triangle_classes(g)

    bad_edge = next((e for e, t in te.items() if t not in (1, 2)), None)
    checks["edge_in_one_or_two_triangles"] = CheckResult(
        bad_edge is None, None if bad_edge is None else tuple(bad_edge)
    )

    ones_at = [0] * g.n
    for e, t in te.items():
        if t == 1:
            ones_at[e.u] += 1
            ones_at[e.v] += 1
    bad_v = next((v for v in range(g.n) if ones_at[v] != 2), None)
    checks["two_single_triangle_edges_per_vertex"] = CheckResult(bad_v is None, bad_v)

    t_total = sum(te.values())
    identity_ok = t_total % 3 == 0 and 3 * (t_total // 3) == 2 * g.m - g.n
    checks["triangle_count_identity"] = CheckResult(
        identity_ok,
        None if identity_ok else {"3t": t_total, "n": g.n, "m": g.m},
    )

    bad_v = next((v for v in range(g.n) if g.degree(v) < 2), None)
    checks["min_degree_at_least_two"] = CheckResult(bad_v is None, bad_v)

    two_conn, cut = is_two_connected(g)
    checks["two_connected"] = CheckResult(two_conn, cut)

    bad_v = None
    for v in range(g.n):
        t = g.degree(v)
        h, _ = induced_subgraph(g, bits(g.adj[v]))
        if independence_number(h) > (t + 1) // 2:
            bad_v = v
            break
    checks["neighborhood_independence_bound"] = CheckResult(bad_v is None, bad_v)

    return InvariantReport(pre, detail, checks)


def dominated_vertex_has_consecutive_pair(g: Graph) -> tuple[bool, Optional[tuple]]:
    """For every u with a path neighborhood and every non-neighbor v whose
    whole neighborhood lies in N(u), some consecutive pair of u's path is
    inside N(v). Returns (holds, first violating (u, v))."""
    for u in range(g.n):
        np_ = neighborhood_path(g, u)
        if np_ is None or len(np_.order) < 2:
            continue
        closed = g.adj[u] | (1 << u)
        for v in range(g.n):
            if v == u or (closed >> v) & 1:
                continue
            nv = g.adj[v]
            if nv == 0 or nv & ~g.adj[u]:
                continue
            order = np_.order
            if not any(
                (nv >> order[i]) & 1 and (nv >> order[i + 1]) & 1
                for i in range(len(order) - 1)
            ):
                return False, (u, v)
    return True, None


def dominated_edge_forms_diamond(g: Graph) -> tuple[bool, Optional[tuple]]:
    """For every u and every edge xy outside N[u] with N({x,y}) inside
    N(u), some consecutive pair v_i, v_{i+1} of u's path makes
    {v_i, v_{i+1}, x, y} induce a diamond. Returns (holds, violation)."""
    for u in range(g.n):
        np_ = neighborhood_path(g, u)
        if np_ is None or len(np_.order) < 2:
            continue
        closed = g.adj[u] | (1 << u)
        for e in g.edges():
            x, y = e
            if (closed >> x) & 1 or (closed >> y) & 1:
                continue
            outside = (g.adj[x] | g.adj[y]) & ~((1 << x) | (1 << y))
            if outside & ~g.adj[u]:
                continue
            order = np_.order
            found = False
            for i in range(len(order) - 1):
                a, b = order[i], order[i + 1]
                if _is_diamond_quad(g, a, b, x, y):
                    found = True
                    break
            if not found:
                return False, (u, (x, y))
    return True, None


def _is_diamond_quad(g: Graph, a: int, b: int, x: int, y: int) -> bool:
    sub, _ = induced_subgraph(g, (a, b, x, y))
    if sub.m != 5:
        return False
    return sorted(sub.degree(v) for v in range(4)) == [2, 2, 3, 3]
