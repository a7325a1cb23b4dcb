import random

import pytest

from loclin.graph import SizeLimitError, graph_from_edges
from loclin.hamilton import (
    Certificate,
    find_hamilton_cycle,
    find_hamilton_path,
    find_hamilton_path_ending_at,
    hamiltonicity_oracle,
    is_fully_cycle_extendable,
    verify_certificate,
)
from oracles import (
    all_graphs,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diamond_graph,
    hamiltonian_by_permutation,
    octahedron_graph,
    path_graph,
    petersen_graph,
    traceable_by_permutation,
    with_apex,
)


def random_graph(rng, n, p):
    return graph_from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


# --- certificates -------------------------------------------------------------


def test_verify_certificate_cycle():
    c4 = cycle_graph(4)
    assert verify_certificate(c4, Certificate("cycle", (0, 1, 2, 3)))
    assert not verify_certificate(c4, Certificate("cycle", (0, 2, 1, 3)))
    assert not verify_certificate(c4, Certificate("cycle", (0, 1, 2)))
    assert not verify_certificate(c4, Certificate("cycle", (0, 1, 2, 2)))


def test_verify_certificate_path():
    p3 = path_graph(3)
    assert verify_certificate(p3, Certificate("path", (0, 1, 2)))
    assert not verify_certificate(p3, Certificate("path", (0, 2, 1)))
    assert not verify_certificate(p3, Certificate("bogus", (0, 1, 2)))


def test_certificate_json_round_trip():
    c = Certificate("cycle", (0, 1, 2))
    assert Certificate.from_json(c.to_json()) == c


# --- cycle solver -------------------------------------------------------------


def test_c5_is_hamiltonian():
    cert = find_hamilton_cycle(cycle_graph(5))
    assert cert is not None and verify_certificate(cycle_graph(5), cert)


def test_small_graphs_not_hamiltonian():
    assert find_hamilton_cycle(complete_graph(2)) is None
    assert find_hamilton_cycle(complete_graph(1)) is None
    assert find_hamilton_cycle(path_graph(4)) is None


def test_petersen_not_hamiltonian_but_traceable():
    p = petersen_graph()
    assert find_hamilton_cycle(p) is None
    assert not hamiltonicity_oracle(p)
    cert = find_hamilton_path(p)
    assert cert is not None and verify_certificate(p, cert)


def test_bipartite_examples():
    assert hamiltonicity_oracle(complete_bipartite(3, 3))
    assert not hamiltonicity_oracle(complete_bipartite(2, 3))
    assert find_hamilton_cycle(complete_bipartite(3, 3)) is not None
    assert find_hamilton_cycle(complete_bipartite(2, 3)) is None


def test_path_solver_basics():
    cert = find_hamilton_path(path_graph(4))
    assert cert is not None and verify_certificate(path_graph(4), cert)
    assert find_hamilton_path(graph_from_edges(2, [])) is None
    assert find_hamilton_path(graph_from_edges(1, [])) == Certificate("path", (0,))


def test_path_ending_at():
    p4 = path_graph(4)
    assert find_hamilton_path_ending_at(p4, 0).seq[-1] == 0
    assert find_hamilton_path_ending_at(p4, 3).seq[-1] == 3
    assert find_hamilton_path_ending_at(p4, 1) is None
    k3 = complete_graph(3)
    for v in range(3):
        cert = find_hamilton_path_ending_at(k3, v)
        assert cert is not None and cert.seq[-1] == v
        assert verify_certificate(k3, cert)


# --- solver vs oracles ---------------------------------------------------------


def test_solver_oracle_and_permutations_on_all_5_vertex_graphs():
    for g in all_graphs(5):
        expected = hamiltonian_by_permutation(g)
        cert = find_hamilton_cycle(g)
        assert (cert is not None) == expected
        if cert is not None:
            assert verify_certificate(g, cert)
        assert hamiltonicity_oracle(g) == expected


def test_solver_vs_oracle_random():
    rng = random.Random(0xABCDE)
    for _ in range(300):
        n = rng.randint(3, 12)
        g = random_graph(rng, n, rng.choice((0.2, 0.35, 0.5, 0.8)))
        cert = find_hamilton_cycle(g)
        assert (cert is not None) == hamiltonicity_oracle(g)
        if cert is not None:
            assert verify_certificate(g, cert)


def test_path_solver_vs_permutations():
    rng = random.Random(0x1234)
    for _ in range(120):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.choice((0.25, 0.5, 0.75)))
        cert = find_hamilton_path(g)
        assert (cert is not None) == traceable_by_permutation(g)
        if cert is not None:
            assert verify_certificate(g, cert)


def test_path_solver_vs_apex_reduction():
    rng = random.Random(0x777)
    for _ in range(150):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.choice((0.2, 0.4, 0.6)))
        assert (find_hamilton_path(g) is not None) == hamiltonicity_oracle(with_apex(g))


def test_oracle_size_limit():
    with pytest.raises(SizeLimitError):
        hamiltonicity_oracle(graph_from_edges(25, []))


# --- fully cycle extendable ----------------------------------------------------


def test_fully_cycle_extendable_examples():
    assert is_fully_cycle_extendable(complete_graph(4))
    assert is_fully_cycle_extendable(complete_graph(5))
    assert not is_fully_cycle_extendable(cycle_graph(5))
    assert is_fully_cycle_extendable(diamond_graph())
    assert is_fully_cycle_extendable(octahedron_graph())
    with pytest.raises(SizeLimitError):
        is_fully_cycle_extendable(graph_from_edges(17, []))


def test_fully_cycle_extendable_matches_direct_definition():
    # Direct definition recomputed with the permutation oracle.
    from itertools import combinations

    from loclin.graph import induced_subgraph

    def direct(g):
        n = g.n
        if n < 3:
            return False
        for v in range(n):
            if not any(
                g.has_edge(a, b) and g.has_edge(a, v) and g.has_edge(b, v)
                for a, b in combinations(range(n), 2)
            ):
                return False
        cyclable = {}
        for size in range(3, n + 1):
            for sub in combinations(range(n), size):
                h, _ = induced_subgraph(g, sub)
                if hamiltonian_by_permutation(h):
                    cyclable[frozenset(sub)] = True
        for s in cyclable:
            if len(s) == n:
                continue
            if not any(frozenset(s | {w}) in cyclable for w in range(n) if w not in s):
                return False
        return True

    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(3, 7)
        g = random_graph(rng, n, rng.choice((0.4, 0.6, 0.8)))
        assert is_fully_cycle_extendable(g) == direct(g)
