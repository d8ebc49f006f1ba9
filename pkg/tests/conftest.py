"""Shared graph builders and seeded ensembles for the test suite."""

import random

import pytest

from expdeg import BipartiteGraph, Graph, random_gnm


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int, weights=None) -> Graph:
    if weights is None:
        weights = [1] * (n - 1)
    return Graph.from_edges(n, [(i, i + 1, w) for i, w in enumerate(weights)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def k33_graph() -> Graph:
    return Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def bowtie_graph() -> Graph:
    # two triangles sharing vertex 2
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def matching_graph(pairs: int) -> Graph:
    return Graph.from_edges(2 * pairs, [(2 * i, 2 * i + 1) for i in range(pairs)])


def complete_bipartite(k: int) -> BipartiteGraph:
    return BipartiteGraph.from_edges(k, [(i, j) for i in range(k) for j in range(k)])


def seeded_graph(seed: int, n_max: int, n_min: int = 2) -> Graph:
    """Deterministic random graph: n uniform in [n_min, n_max], m uniform."""
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    m = rng.randint(0, n * (n - 1) // 2)
    return random_gnm(n, m, rng.randrange(2**32))


def seeded_weighted_graph(seed: int, n_max: int, n_min: int = 2, w_max: int = 12) -> Graph:
    rng = random.Random(seed)
    g = seeded_graph(seed, n_max, n_min)
    return Graph.from_edges(
        g.n, [(u, v, rng.randint(0, w_max)) for u, v, _ in g.edges]
    )


def seeded_bipartite(seed: int, k_max: int, k_min: int = 1) -> BipartiteGraph:
    rng = random.Random(seed)
    k = rng.randint(k_min, k_max)
    m = rng.randint(0, k * k)
    from expdeg import random_bipartite

    return random_bipartite(k, m, rng.randrange(2**32))


def tour_weight(g: Graph, order, cycle: bool) -> int:
    """Independent edge-by-edge verification of a reported tour."""
    assert sorted(order) == list(range(g.n)), "order must visit every vertex once"
    total = 0
    steps = len(order) if cycle else len(order) - 1
    for i in range(steps):
        u, v = order[i], order[(i + 1) % len(order)]
        assert g.has_edge(u, v), f"({u},{v}) is not an edge"
        total += g.weight(u, v)
    return total


@pytest.fixture
def named_small_graphs():
    return {
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "K33": k33_graph(),
        "Petersen": petersen_graph(),
    }
