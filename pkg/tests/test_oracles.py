import random

import networkx as nx
import pytest

from psqcayley import (
    BudgetExceededError,
    CayleyGraph,
    OracleBudget,
    block_exponents,
    distance_sweep,
    exact_max_clique,
    exact_max_independent_set,
    find_triangle,
    index_graph,
    make_prime_triple,
)
from psqcayley.structure import BlockId

T235 = make_prime_triple(2, 3, 5)
T357 = make_prime_triple(3, 5, 7)
G235 = CayleyGraph.from_triple(T235)


def test_neighborhood_clique_is_gamma():
    hood = [0] + G235.neighbors(0)
    assert len(hood) == 29
    clique = exact_max_clique(hood, G235.adjacent)
    assert len(clique) == 5
    assert all(G235.adjacent(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :])


def test_clique_on_independent_block_is_one():
    verts = block_exponents(BlockId(0, 0, 0), T235)
    assert len(exact_max_clique(verts, G235.adjacent)) == 1


def test_clique_on_complete_certificate():
    k5 = G235.nonplanarity_certificate()
    assert len(exact_max_clique(list(k5), G235.adjacent)) == 5


def test_clique_budget_cap():
    with pytest.raises(BudgetExceededError):
        exact_max_clique(list(range(30)), lambda u, v: True, OracleBudget(max_exact_vertices=10))


def test_clique_empty_input():
    assert exact_max_clique([], G235.adjacent) == []


def test_clique_against_reference_library():
    rng = random.Random(99)
    for trial in range(25):
        n = rng.randrange(8, 36)
        p = rng.choice([0.2, 0.4, 0.6, 0.8])
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(10**6))
        ours = exact_max_clique(list(g.nodes), lambda u, v: g.has_edge(u, v))
        reference = max(len(c) for c in nx.find_cliques(g))
        assert len(ours) == reference, f"trial {trial}"


def test_index_mis_sizes():
    assert len(exact_max_independent_set(index_graph(T235))) == 6
    assert len(exact_max_independent_set(index_graph(T357))) == 15


def test_index_mis_is_independent():
    ig = index_graph(T235)
    mis = exact_max_independent_set(ig)
    assert not any(ig.adjacent(x, y) for i, x in enumerate(mis) for y in mis[i + 1 :])


def test_index_mis_budget_cap():
    with pytest.raises(BudgetExceededError):
        exact_max_independent_set(index_graph(T357), OracleBudget(max_index_vertices=50))


def test_index_mis_against_reference_library():
    ig = index_graph(T235)
    ids = ig.ids()
    g = nx.Graph()
    g.add_nodes_from(range(len(ids)))
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            if ig.adjacent(ids[i], ids[j]):
                g.add_edge(i, j)
    reference = max(len(c) for c in nx.find_cliques(nx.complement(g)))
    assert len(exact_max_independent_set(ig)) == reference == 6


def test_distance_sweep_sampled_sources():
    budget = OracleBudget(bfs_sources=10, seed=5)
    report = distance_sweep(CayleyGraph.from_triple(T357), budget)
    assert report.sources == 11
    assert report.pairs_checked == 11 * 11025
    assert report.max_distance == 6
    assert report.mismatches == 0


def test_distance_sweep_deterministic():
    budget = OracleBudget(bfs_sources=8, seed=42)
    g = CayleyGraph.from_triple(T235)
    assert distance_sweep(g, budget) == distance_sweep(g, budget)


def test_distance_histogram_covers_graph():
    dist = G235.bfs(0)
    assert len(dist) == 900
    assert min(dist) == 0
    assert all(d >= 0 for d in dist)


def test_find_triangle():
    tri = find_triangle(G235)
    assert tri == (0, 36, 72)
    assert all(G235.adjacent(u, v) for i, u in enumerate(tri) for v in tri[i + 1 :])


def test_budget_validation():
    with pytest.raises(ValueError):
        OracleBudget(max_exact_vertices=0)
    with pytest.raises(ValueError):
        OracleBudget(bfs_sources=-1)
