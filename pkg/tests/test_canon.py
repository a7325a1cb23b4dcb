import random

from loclin.canon import are_isomorphic, canonical_form, canonical_graph, canonical_key
from loclin.graph import graph_from_edges, parse_graph6
from oracles import (
    all_graphs,
    complete_graph,
    cycle_graph,
    diamond_graph,
    iso_by_permutation,
    path_graph,
    petersen_graph,
    relabel,
)


def test_relabelled_paths_share_key():
    p = graph_from_edges(3, [(0, 1), (1, 2)])
    q = graph_from_edges(3, [(1, 0), (0, 2)])  # path 1-0-2
    assert canonical_key(p) == canonical_key(q)


def test_k3_vs_p3_differ():
    assert canonical_key(complete_graph(3)) != canonical_key(path_graph(3))


def test_canonical_count_on_four_vertices():
    # 11 isomorphism classes of graphs on 4 vertices (brute-force derivable).
    keys = {canonical_key(g) for g in all_graphs(4)}
    assert len(keys) == 11


def test_canonical_form_fields():
    g = cycle_graph(4)
    cf = canonical_form(g)
    assert sorted(cf.order) == [0, 1, 2, 3]
    # key is the graph6 of the relabeled graph; parsing it gives an
    # isomorphic graph.
    rep = parse_graph6(cf.key.decode("ascii"))
    assert iso_by_permutation(rep, g)


def test_canonical_graph_is_fixed_point():
    g = petersen_graph()
    rep = canonical_graph(g)
    assert canonical_key(rep) == canonical_key(g)
    assert canonical_graph(rep) == rep


def test_invariance_under_random_relabeling():
    rng = random.Random(7)
    samples = [
        diamond_graph(),
        petersen_graph(),
        cycle_graph(6),
        complete_graph(5),
        graph_from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)]),
        graph_from_edges(6, []),
        graph_from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7)]),
    ]
    for g in samples:
        key = canonical_key(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_key(relabel(g, perm)) == key


def test_agrees_with_permutation_isomorphism_small():
    # All graphs on 4 vertices against each other, both methods.
    graphs = list(all_graphs(4))
    for i, g in enumerate(graphs):
        for h in graphs[i:]:
            assert are_isomorphic(g, h) == iso_by_permutation(g, h)


def test_agrees_with_permutation_isomorphism_sampled():
    rng = random.Random(99)
    pool = []
    for _ in range(60):
        n = rng.randint(1, 7)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < rng.choice((0.2, 0.5, 0.8))
        ]
        pool.append(graph_from_edges(n, edges))
    for _ in range(400):
        g, h = rng.choice(pool), rng.choice(pool)
        assert are_isomorphic(g, h) == iso_by_permutation(g, h)


def test_diamond_equals_k4_minus_edge_other_labels():
    k4_minus = graph_from_edges(4, [(2, 3), (2, 0), (2, 1), (3, 0), (3, 1)])
    assert are_isomorphic(diamond_graph(), k4_minus)


def test_c4_vs_p4():
    assert are_isomorphic(cycle_graph(4), relabel(cycle_graph(4), [2, 0, 3, 1]))
    assert not are_isomorphic(cycle_graph(4), path_graph(4))
