"""Edge identification and the triangle-chain construction.

A suitable edge uv is one where G[N(u)] has a Hamilton path ending at v
and G[N(v)] one ending at u. Identifying two graphs along suitable edges
glues them into a graph of order n1+n2-2 and size m1+m2-1; chaining
triangles onto a nonhamiltonian locally linear seed grows validated
witnesses with two extra edges per extra vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canon import canonical_form
from .graph import (
    Edge,
    Graph,
    GraphError,
    MAX_VERTICES,
    SizeLimitError,
    bits,
    graph_from_edges,
    induced_subgraph,
)
from .hamilton import find_hamilton_cycle, find_hamilton_path_ending_at, hamiltonicity_oracle
from .local import is_locally_linear

ORACLE_RECHECK_MAX_ORDER = 20


class PreconditionError(GraphError):
    """An operation's stated precondition does not hold."""


class ConstructionError(GraphError):
    """A per-step validation failed while building a chain."""

    def __init__(self, step: int, failed_property: str):
        super().__init__(f"step {step}: {failed_property}")
        self.step = step
        self.failed_property = failed_property


@dataclass(frozen=True)
class SuitableEdge:
    """An edge together with the two neighborhood Hamilton paths that
    witness its suitability (in original vertex ids)."""

    edge: Edge
    path_in_u_neighborhood: tuple[int, ...]  # Hamilton path of G[N(u)] ending at v
    path_in_v_neighborhood: tuple[int, ...]  # Hamilton path of G[N(v)] ending at u


@dataclass(frozen=True)
class ChainSpec:
    seed: Graph
    start_edge: Edge
    steps: int


def _neighborhood_path_ending_at(g: Graph, center: int, end: int) -> Optional[tuple[int, ...]]:
    sub, mapping = induced_subgraph(g, bits(g.adj[center]))
    local = {v: i for i, v in enumerate(mapping)}
    cert = find_hamilton_path_ending_at(sub, local[end])
    if cert is None:
        return None
    return tuple(mapping[i] for i in cert.seq)


def check_suitable(g: Graph, edge: Edge) -> Optional[SuitableEdge]:
    """Evaluate the suitability of one edge, with witnesses."""
    u, v = edge
    if not g.has_edge(u, v):
        return None
    pu = _neighborhood_path_ending_at(g, u, v)
    if pu is None:
        return None
    pv = _neighborhood_path_ending_at(g, v, u)
    if pv is None:
        return None
    return SuitableEdge(edge=edge, path_in_u_neighborhood=pu, path_in_v_neighborhood=pv)


def suitable_edges(g: Graph) -> list[SuitableEdge]:
    """All suitable edges of g, in ascending edge order."""
    out = []
    for e in g.edges():
        s = check_suitable(g, e)
        if s is not None:
            out.append(s)
    return out


def edge_identify(
    g1: Graph,
    e1: Edge | SuitableEdge,
    g2: Graph,
    e2: Edge | SuitableEdge,
    swap_orientation: bool = False,
) -> Graph:
    """Glue g1 and g2 by identifying the endpoints of two suitable edges.

    The identified pair keeps g1's vertex ids; g2's remaining vertices are
    appended in ascending order. With swap_orientation, e2's first endpoint
    maps onto e1's second instead of its first.
    """
    edge1 = e1.edge if isinstance(e1, SuitableEdge) else e1
    edge2 = e2.edge if isinstance(e2, SuitableEdge) else e2
    if g1.n < 3 or g2.n < 3:
        raise PreconditionError("edge identification needs both orders >= 3")
    n = g1.n + g2.n - 2
    if n > MAX_VERTICES:
        raise SizeLimitError(f"identified graph would have {n} > {MAX_VERTICES} vertices")
    if check_suitable(g1, edge1) is None:
        raise PreconditionError(f"edge {tuple(edge1)} is not suitable in the first graph")
    if check_suitable(g2, edge2) is None:
        raise PreconditionError(f"edge {tuple(edge2)} is not suitable in the second graph")

    u1, v1 = edge1
    u2, v2 = edge2
    mapping = {}
    mapping[u2], mapping[v2] = (v1, u1) if swap_orientation else (u1, v1)
    nxt = g1.n
    for w in range(g2.n):
        if w not in mapping:
            mapping[w] = nxt
            nxt += 1

    edges = [tuple(e) for e in g1.edges()]
    for e in g2.edges():
        if {e.u, e.v} == {u2, v2}:
            continue  # the identified edge is already present from g1
        edges.append((mapping[e.u], mapping[e.v]))
    result = graph_from_edges(n, edges)
    assert result.m == g1.m + g2.m - 1
    return result


def _triangle() -> Graph:
    return graph_from_edges(3, [(0, 1), (0, 2), (1, 2)])


def _require_chain_seed(seed: Graph) -> None:
    if not seed.is_connected():
        raise PreconditionError("chain seed must be connected")
    ok, bad = is_locally_linear(seed)
    if not ok:
        raise PreconditionError(f"chain seed is not locally linear (vertex {bad})")
    if find_hamilton_cycle(seed) is not None:
        raise PreconditionError("chain seed is hamiltonian")


def attach_triangle_chain(spec: ChainSpec) -> list[Graph]:
    """Repeatedly identify a fresh triangle onto the designated edge.

    The first step uses spec.start_edge; step j then uses the edge joining
    the degree-2 and degree-3 vertices of the triangle added in step j-1.
    Every produced graph is validated: connected, locally linear, order +1
    and size +2 over its predecessor, and nonhamiltonian (backtracking
    solver always; subset-DP oracle as well while the order stays small).
    """
    seed = spec.seed
    _require_chain_seed(seed)
    if spec.steps < 0:
        raise PreconditionError("step count must be nonnegative")
    if seed.n + spec.steps > MAX_VERTICES:
        raise SizeLimitError(
            f"chain would reach order {seed.n + spec.steps} > {MAX_VERTICES}"
        )
    if check_suitable(seed, spec.start_edge) is None:
        raise PreconditionError(f"start edge {tuple(spec.start_edge)} is not suitable")

    out: list[Graph] = []
    g = seed
    edge = spec.start_edge
    for step in range(1, spec.steps + 1):
        try:
            nxt = edge_identify(g, edge, _triangle(), Edge(0, 1))
        except GraphError as exc:
            raise ConstructionError(step, str(exc)) from exc
        new_vertex = g.n  # the triangle's free corner is appended last
        if nxt.n != g.n + 1:
            raise ConstructionError(step, f"order {nxt.n}, expected {g.n + 1}")
        if nxt.m != g.m + 2:
            raise ConstructionError(step, f"size {nxt.m}, expected {g.m + 2}")
        if not nxt.is_connected():
            raise ConstructionError(step, "result is not connected")
        ok, bad = is_locally_linear(nxt)
        if not ok:
            raise ConstructionError(step, f"result is not locally linear (vertex {bad})")
        if find_hamilton_cycle(nxt) is not None:
            raise ConstructionError(step, "result is hamiltonian (solver)")
        if nxt.n <= ORACLE_RECHECK_MAX_ORDER and hamiltonicity_oracle(nxt):
            raise ConstructionError(step, "result is hamiltonian (oracle)")
        out.append(nxt)

        if step < spec.steps:
            triangle = (edge.u, edge.v, new_vertex)
            deg2 = [w for w in triangle if nxt.degree(w) == 2]
            deg3 = [w for w in triangle if nxt.degree(w) == 3]
            pair = next(
                (
                    Edge.of(a, b)
                    for a in deg2
                    for b in deg3
                    if nxt.has_edge(a, b)
                ),
                None,
            )
            if pair is None:
                raise ConstructionError(
                    step, "new triangle has no adjacent degree-2/degree-3 pair"
                )
            edge = pair
        g = nxt
    return out


def chain_start_candidates(seed: Graph, probe_steps: int = 3) -> list[Edge]:
    """All suitable edges from which a probe chain validates, in canonical
    edge order (ascending positions under the seed's canonical labeling)."""
    _require_chain_seed(seed)
    cf = canonical_form(seed)
    pos = {v: i for i, v in enumerate(cf.order)}
    ranked = sorted(
        suitable_edges(seed),
        key=lambda s: tuple(sorted((pos[s.edge.u], pos[s.edge.v]))),
    )
    good = []
    steps = min(probe_steps, MAX_VERTICES - seed.n)
    for s in ranked:
        try:
            attach_triangle_chain(ChainSpec(seed, s.edge, steps))
        except GraphError:
            continue
        good.append(s.edge)
    return good


def find_chain_start(seed: Graph) -> Optional[Edge]:
    """The canonically least suitable edge whose 3-step probe chain
    validates, or None when no edge works."""
    candidates = chain_start_candidates(seed)
    return candidates[0] if candidates else None
