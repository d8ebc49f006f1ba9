"""Seeded random graph generators for the test and benchmark corpus.

All generators are deterministic for a fixed seed.  The gnm model draws
exactly m distinct edges, so the average degree is exactly 2m/n.
"""

from __future__ import annotations

import random

from .graphs import BipartiteGraph, Graph

_REGULAR_ATTEMPTS = 100_000


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with exactly n vertices and m edges."""
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f"m={m} exceeds {total} possible edges on {n} vertices")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng = random.Random(seed)
    chosen = rng.sample(pairs, m)
    return Graph.from_edges(n, chosen)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular simple graph via the pairing model with rejection."""
    if d < 0 or d >= max(n, 1):
        raise ValueError(f"degree d={d} infeasible for n={n}")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    if d == 0:
        return Graph.from_edges(n, [])
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(_REGULAR_ATTEMPTS):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, edges)
    raise RuntimeError(f"no simple {d}-regular pairing found for n={n} after retries")


def random_bipartite(k: int, m: int, seed: int) -> BipartiteGraph:
    """Uniform bipartite graph with sides of size k and exactly m edges."""
    total = k * k
    if m > total:
        raise ValueError(f"m={m} exceeds {total} possible edges for k={k}")
    pairs = [(i, j) for i in range(k) for j in range(k)]
    rng = random.Random(seed)
    chosen = rng.sample(pairs, m)
    return BipartiteGraph.from_edges(k, chosen)


def random_bipartite_min2(k: int, m: int, seed: int) -> BipartiteGraph:
    """Bipartite graph with m >= 2k edges and minimum degree 2 on both sides.

    Overlays two random perfect matchings (resampled until edge-disjoint)
    and fills up with distinct random extras; used where degree-1 peeling
    would otherwise collapse the instance.
    """
    if m < 2 * k:
        raise ValueError(f"need m >= 2k, got m={m}, k={k}")
    if m > k * k:
        raise ValueError(f"m={m} exceeds {k * k} possible edges for k={k}")
    rng = random.Random(seed)
    while True:
        p1 = list(range(k))
        p2 = list(range(k))
        rng.shuffle(p1)
        rng.shuffle(p2)
        if all(a != b for a, b in zip(p1, p2)) or k < 2:
            break
    edges = {(i, p1[i]) for i in range(k)} | {(i, p2[i]) for i in range(k)}
    remaining = [(i, j) for i in range(k) for j in range(k) if (i, j) not in edges]
    edges.update(rng.sample(remaining, m - len(edges)))
    return BipartiteGraph.from_edges(k, edges)


def gen_random_graph(model: str, seed: int, **params) -> Graph | BipartiteGraph:
    """Dispatch by model name: 'gnm', 'regular' / 'regular-<d>', 'bipartite'."""
    if model.startswith("regular-"):
        params["d"] = int(model.split("-", 1)[1])
        model = "regular"
    if model == "gnm":
        return random_gnm(params["n"], params["m"], seed)
    if model == "regular":
        return random_regular(params["n"], params["d"], seed)
    if model == "bipartite":
        return random_bipartite(params["k"], params["m"], seed)
    raise ValueError(f"unknown model {model!r}")
