"""Independent brute-force oracles used to validate the real implementations.

Everything here is deliberately naive: permutation search, subset
iteration, triple enumeration. These functions never share code with the
algorithms they check.
"""

from itertools import combinations, permutations

from loclin.graph import Graph, graph_from_edges


def relabel(g: Graph, perm) -> Graph:
    """Graph with vertex v renamed to perm[v]."""
    return graph_from_edges(g.n, [(perm[e.u], perm[e.v]) for e in g.edges()])


def iso_by_permutation(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    gset = {(e.u, e.v) for e in g.edges()}
    for perm in permutations(range(h.n)):
        mapped = {tuple(sorted((perm[e.u], perm[e.v]))) for e in h.edges()}
        if mapped == gset:
            return True
    return g.m == 0


def all_graphs(n: int):
    """Every labeled graph on n vertices, one per adjacency bit code."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield graph_from_edges(
            n, [pairs[i] for i in range(len(pairs)) if (code >> i) & 1]
        )


def hamiltonian_by_permutation(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    verts = list(range(1, n))
    for perm in permutations(verts):
        cycle = (0,) + perm
        if all(g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)):
            return True
    return False


def traceable_by_permutation(g: Graph) -> bool:
    n = g.n
    if n <= 1:
        return True
    for perm in permutations(range(n)):
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(n - 1)):
            return True
    return False


def mis_by_subsets(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return best


def triangles_per_edge_by_triples(g: Graph) -> dict[tuple[int, int], int]:
    counts = {(e.u, e.v): 0 for e in g.edges()}
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            counts[(a, b)] += 1
            counts[(a, c)] += 1
            counts[(b, c)] += 1
    return counts


def with_apex(g: Graph) -> Graph:
    """g plus one vertex adjacent to everything (traceability reduction)."""
    extra = [(v, g.n) for v in range(g.n)]
    return graph_from_edges(g.n + 1, [tuple(e) for e in g.edges()] + extra)


# Named small graphs ---------------------------------------------------------


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def diamond_graph() -> Graph:
    # K4 minus the edge {2,3}
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def gem_graph() -> Graph:
    # apex vertex 0 over the path 1-2-3-4
    return graph_from_edges(
        5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]
    )


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return graph_from_edges(10, edges)


def octahedron_graph() -> Graph:
    # K_{2,2,2}: complement of a perfect matching on 6 vertices
    edges = [
        (u, v)
        for u, v in combinations(range(6), 2)
        if {u, v} not in ({0, 1}, {2, 3}, {4, 5})
    ]
    return graph_from_edges(6, edges)
