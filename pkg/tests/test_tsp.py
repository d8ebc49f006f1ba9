"""Hamiltonian path/cycle solvers: examples, baselines, state accounting."""

import pytest

from expdeg import (
    CapacityError,
    Graph,
    ham_path,
    held_karp_cycle,
    oracle_tsp,
    path_dp_states,
    tsp_cycle,
)
from conftest import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    seeded_weighted_graph,
    star_graph,
    tour_weight,
)


def weighted_c4():
    return Graph.from_edges(4, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)])


def k4_spiked():
    # cheap chain 0-1-2-3, expensive everything else
    return Graph.from_edges(
        4, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 2, 10), (0, 3, 10), (1, 3, 10)]
    )


# --- ham_path --------------------------------------------------------------


def test_ham_path_k3():
    res = ham_path(complete_graph(3), 0, 2)
    assert res.weight == 2
    assert res.order == (0, 1, 2)


def test_ham_path_absent():
    assert ham_path(path_graph(3, [3, 4]), 0, 1) is None


def test_ham_path_k4_spiked():
    res = ham_path(k4_spiked(), 0, 3)
    assert res.weight == 6
    assert res.order == (0, 1, 2, 3)


def test_ham_path_argument_errors():
    g = complete_graph(3)
    with pytest.raises(ValueError):
        ham_path(g, 0, 0)
    with pytest.raises(ValueError):
        ham_path(g, 0, 5)


def test_ham_path_two_vertices():
    assert ham_path(Graph.from_edges(2, [(0, 1, 9)]), 0, 1).weight == 9
    assert ham_path(Graph.from_edges(2, []), 0, 1) is None


# --- tsp_cycle -------------------------------------------------------------


def test_tsp_cycle_weighted_c4():
    res = tsp_cycle(weighted_c4())
    assert res.weight == 10
    assert tour_weight(weighted_c4(), res.order, cycle=True) == 10


def test_tsp_cycle_k4_unit():
    assert tsp_cycle(complete_graph(4)).weight == 4


def test_tsp_cycle_bowtie_absent():
    assert tsp_cycle(bowtie_graph()) is None


def test_tsp_cycle_star_absent():
    assert tsp_cycle(star_graph(3)) is None


def test_tsp_cycle_needs_three_vertices():
    with pytest.raises(ValueError):
        tsp_cycle(complete_graph(2))


# --- held_karp baseline ----------------------------------------------------


def test_held_karp_matches_examples():
    for g in (weighted_c4(), complete_graph(4), bowtie_graph()):
        trimmed = tsp_cycle(g)
        dense = held_karp_cycle(g)
        if trimmed is None:
            assert dense is None
        else:
            assert dense.weight == trimmed.weight


def test_held_karp_c5():
    assert held_karp_cycle(cycle_graph(5)).weight == 5


def test_held_karp_capacity():
    with pytest.raises(CapacityError):
        held_karp_cycle(Graph.from_edges(25, [(i, i + 1) for i in range(24)]))


# --- agreement and state properties ----------------------------------------


def test_solver_agreement_seeded():
    for seed in range(60):
        g = seeded_weighted_graph(seed, n_max=10, n_min=3)
        trimmed = tsp_cycle(g)
        dense = held_karp_cycle(g)
        brute = oracle_tsp(g)
        tw = None if trimmed is None else trimmed.weight
        dw = None if dense is None else dense.weight
        assert tw == dw == brute, (seed, tw, dw, brute)
        if trimmed is not None:
            assert tour_weight(g, trimmed.order, cycle=True) == trimmed.weight
            assert tour_weight(g, dense.order, cycle=True) == dense.weight


def test_ham_path_against_permutation_brute_force():
    from itertools import permutations

    for seed in range(25):
        g = seeded_weighted_graph(seed + 500, n_max=7, n_min=2)
        a, b = 0, g.n - 1
        if a == b:
            continue
        best = None
        middle = [v for v in range(g.n) if v not in (a, b)]
        for perm in permutations(middle):
            order = (a, *perm, b)
            total = 0
            for u, v in zip(order, order[1:]):
                if not g.has_edge(u, v):
                    break
                total += g.weight(u, v)
            else:
                best = total if best is None else min(best, total)
        res = ham_path(g, a, b)
        got = None if res is None else res.weight
        assert got == best, (seed, got, best)


def enumerate_path_states(g: Graph, a: int) -> set[tuple[int, int]]:
    """All (visited set, endpoint) pairs realizable by simple paths from a."""
    found = set()

    def walk(mask: int, v: int):
        state = (mask, v)
        if state in found:
            return
        found.add(state)
        for u in g.neighbors(v):
            if not (mask >> u) & 1:
                walk(mask | (1 << u), u)

    walk(1 << a, a)
    return found


def test_states_equal_path_reachable_pairs():
    for seed in range(20):
        g = seeded_weighted_graph(seed + 900, n_max=9, n_min=2)
        states = path_dp_states(g, 0)
        assert len(states) == len(set(states))
        assert set(states) == enumerate_path_states(g, 0)
        assert len(states) <= g.n * 2 ** (g.n - 1)


def test_deterministic_reconstruction():
    g = complete_graph(6)  # all tours tie at weight 6
    first = tsp_cycle(g)
    for _ in range(3):
        again = tsp_cycle(g)
        assert again.order == first.order
        assert again.weight == first.weight
