import random

import pytest

from loclin.canon import are_isomorphic
from loclin.construct import (
    ChainSpec,
    ConstructionError,
    PreconditionError,
    attach_triangle_chain,
    check_suitable,
    edge_identify,
    find_chain_start,
    suitable_edges,
)
from loclin.graph import Edge, SizeLimitError
from loclin.hamilton import find_hamilton_cycle, verify_certificate
from loclin.local import edge_triangle_classes, is_locally_linear, is_locally_traceable
from oracles import complete_graph, cycle_graph, diamond_graph, gem_graph, path_graph


def test_k3_all_edges_suitable():
    suits = suitable_edges(complete_graph(3))
    assert [tuple(s.edge) for s in suits] == [(0, 1), (0, 2), (1, 2)]
    for s in suits:
        # each neighborhood is a single edge; the witness path ends right
        assert s.path_in_u_neighborhood[-1] == s.edge.v
        assert s.path_in_v_neighborhood[-1] == s.edge.u


def test_suitable_witness_paths_are_valid():
    for g in (diamond_graph(), gem_graph(), complete_graph(4)):
        for s in suitable_edges(g):
            u, v = s.edge
            assert set(s.path_in_u_neighborhood) == set(g.neighbors(u))
            assert set(s.path_in_v_neighborhood) == set(g.neighbors(v))
            for p in (s.path_in_u_neighborhood, s.path_in_v_neighborhood):
                assert all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


def test_suitable_equals_one_triangle_edges_on_locally_linear():
    for g in (complete_graph(3), diamond_graph(), gem_graph()):
        assert is_locally_linear(g)[0]
        te = edge_triangle_classes(g)
        expected = {e for e, t in te.items() if t == 1}
        got = {s.edge for s in suitable_edges(g)}
        assert got == expected


def test_degree_two_vertex_edges_are_suitable():
    # any edge at a degree-2 vertex of a locally traceable graph is suitable
    for g in (complete_graph(3), diamond_graph(), gem_graph(), complete_graph(4)):
        assert is_locally_traceable(g)
        for e in g.edges():
            if g.degree(e.u) == 2 or g.degree(e.v) == 2:
                assert check_suitable(g, e) is not None


def test_identify_two_triangles_gives_diamond():
    g = edge_identify(complete_graph(3), Edge(0, 1), complete_graph(3), Edge(0, 1))
    assert g.n == 4 and g.m == 5
    assert are_isomorphic(g, diamond_graph())


def test_identify_diamond_with_triangle():
    d = diamond_graph()
    te = edge_triangle_classes(d)
    e = next(e for e, t in te.items() if t == 1)
    g = edge_identify(d, e, complete_graph(3), Edge(0, 1))
    assert g.n == 5 and g.m == 7
    assert is_locally_traceable(g)
    assert are_isomorphic(g, gem_graph())


def test_identify_orientation_counts_match():
    d = diamond_graph()
    e = next(e for e, t in edge_triangle_classes(d).items() if t == 1)
    a = edge_identify(d, e, gem_graph(), Edge(0, 4), swap_orientation=False)
    b = edge_identify(d, e, gem_graph(), Edge(0, 4), swap_orientation=True)
    assert (a.n, a.m) == (b.n, b.m) == (7, 11)


def test_identify_rejects_unsuitable_edge():
    # C6 is locally "2K1": no neighborhood Hamilton paths end anywhere useful
    with pytest.raises(PreconditionError):
        edge_identify(cycle_graph(6), Edge(0, 1), complete_graph(3), Edge(0, 1))


def test_identify_rejects_small_orders():
    with pytest.raises(PreconditionError):
        edge_identify(complete_graph(2), Edge(0, 1), complete_graph(3), Edge(0, 1))


def test_identify_order_overflow():
    big = _long_gem_chain(40)
    with pytest.raises(SizeLimitError):
        edge_identify(big, Edge(0, 1), big, Edge(0, 1))


def _long_gem_chain(target_order: int):
    g = complete_graph(3)
    edge = Edge(0, 1)
    while g.n < target_order:
        g = edge_identify(g, edge, complete_graph(3), Edge(0, 1))
        new = g.n - 1
        deg3 = next(w for w in edge if g.degree(w) == 3)
        edge = Edge.of(new, deg3)
    return g


def test_identify_lemma_properties_random():
    # identifying locally traceable graphs on suitable edges stays locally
    # traceable, and a hamiltonian result forces both inputs hamiltonian
    rng = random.Random(2024)
    pool = [complete_graph(3), diamond_graph(), gem_graph(), complete_graph(4), complete_graph(5)]
    for _ in range(60):
        g1, g2 = rng.choice(pool), rng.choice(pool)
        s1 = rng.choice(suitable_edges(g1))
        s2 = rng.choice(suitable_edges(g2))
        g = edge_identify(g1, s1, g2, s2, swap_orientation=rng.random() < 0.5)
        assert g.n == g1.n + g2.n - 2
        assert g.m == g1.m + g2.m - 1
        assert is_locally_traceable(g)
        if find_hamilton_cycle(g) is not None:
            assert find_hamilton_cycle(g1) is not None
            assert find_hamilton_cycle(g2) is not None


def test_chain_rejects_hamiltonian_seed():
    with pytest.raises(PreconditionError):
        attach_triangle_chain(ChainSpec(complete_graph(3), Edge(0, 1), 2))
    with pytest.raises(PreconditionError):
        find_chain_start(complete_graph(3))


def test_chain_rejects_non_locally_linear_seed():
    with pytest.raises(PreconditionError):
        attach_triangle_chain(ChainSpec(petersen_like(), Edge(0, 1), 1))


def petersen_like():
    from oracles import petersen_graph

    return petersen_graph()


def test_chain_zero_steps():
    # K3 is hamiltonian so use a nonhamiltonian locally linear seed; none
    # exists below order 12, so exercise the k=0 contract via the error path
    # on a hamiltonian seed and the real seed in the search tests.
    with pytest.raises(PreconditionError):
        attach_triangle_chain(ChainSpec(complete_graph(3), Edge(0, 1), 0))
