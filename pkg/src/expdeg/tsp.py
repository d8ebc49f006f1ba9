"""Cheapest Hamiltonian paths and cycles by subset dynamic programming.

Two engines: a sparse layered DP that stores only states reachable by an
actual path (dictionaries keyed on (visited-set, endpoint)), and a dense
Held-Karp reference table used as the equality baseline in tests.  Both
reconstruct the optimal vertex order and report how many states they
materialized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bits
from .errors import CapacityError
from .graphs import Graph

HELD_KARP_MAX_N = 24
_INF = float("inf")


@dataclass(frozen=True)
class TourResult:
    weight: int
    order: tuple[int, ...]
    states_visited: int


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if not (seen >> v) & 1:
                seen |= 1 << v
                stack.append(v)
    return seen == (1 << g.n) - 1


def _state_key(mask: int, v: int) -> int:
    return (mask << 6) | v


class _PathDP:
    """Layered sparse DP from a fixed source a.

    Layer i holds every (visited-set, endpoint) pair realizable by a simple
    path of i vertices starting at a.  Only the current layer's cost map is
    kept live; parent endpoints are logged per layer for reconstruction.
    States are relaxed in ascending (set, endpoint) key order with strict
    improvement, so costs, parents and reconstructed orders are
    deterministic.
    """

    def __init__(self, g: Graph, a: int):
        self.g = g
        self.a = a
        self.states_visited = 0
        self.parents: list[dict[int, int]] = []
        self.final_layer: dict[int, int] = {}
        self._run()

    def _run(self) -> None:
        g, a = self.g, self.a
        layer = {_state_key(1 << a, a): 0}
        self.parents.append({_state_key(1 << a, a): -1})
        self.states_visited = 1
        for _ in range(g.n - 1):
            nxt: dict[int, int] = {}
            nxt_parent: dict[int, int] = {}
            for key in sorted(layer):
                cost = layer[key]
                mask, u = key >> 6, key & 63
                for v, w in g.adjacency[u]:
                    if (mask >> v) & 1:
                        continue
                    nk = _state_key(mask | (1 << v), v)
                    cand = cost + w
                    if nk not in nxt or cand < nxt[nk]:
                        nxt[nk] = cand
                        nxt_parent[nk] = u
            layer = nxt
            self.parents.append(nxt_parent)
            self.states_visited += len(nxt)
        self.final_layer = layer

    def reconstruct(self, b: int) -> tuple[int, ...]:
        full = (1 << self.g.n) - 1
        order = [b]
        mask, v = full, b
        for i in range(self.g.n - 1, 0, -1):
            u = self.parents[i][_state_key(mask, v)]
            mask ^= 1 << v
            order.append(u)
            v = u
        order.reverse()
        return tuple(order)

    def all_state_keys(self) -> list[tuple[int, int]]:
        return [(k >> 6, k & 63) for lay in self.parents for k in lay]


def path_dp_states(g: Graph, a: int) -> list[tuple[int, int]]:
    """Every (visited-set, endpoint) state the sparse path DP materializes
    from source a; for instrumentation and state-space tests."""
    if not 0 <= a < g.n:
        raise ValueError("source out of range")
    return _PathDP(g, a).all_state_keys()


def ham_path(g: Graph, a: int, b: int) -> TourResult | None:
    """Cheapest Hamiltonian a-b path, or None if no such path exists."""
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise ValueError("endpoint out of range")
    if a == b:
        raise ValueError("endpoints must be distinct")
    if g.n < 2:
        raise ValueError("need at least two vertices")
    if not _is_connected(g):
        return None
    dp = _PathDP(g, a)
    full = (1 << g.n) - 1
    key = _state_key(full, b)
    if key not in dp.final_layer:
        return None
    return TourResult(dp.final_layer[key], dp.reconstruct(b), dp.states_visited)


def anchor_vertex(g: Graph) -> int:
    """Source vertex used by tsp_cycle: minimum degree, ties by index."""
    return min(range(g.n), key=lambda v: (g.degree(v), v))


def tsp_cycle(g: Graph) -> TourResult | None:
    """Smallest-weight Hamiltonian cycle, or None if none exists.

    Runs one sparse path DP from a minimum-degree anchor and closes the
    cycle over the anchor's neighbors.
    """
    if g.n < 3:
        raise ValueError("a Hamiltonian cycle needs at least three vertices")
    if not _is_connected(g):
        return None
    a = anchor_vertex(g)
    dp = _PathDP(g, a)
    full = (1 << g.n) - 1
    best: tuple[int, int] | None = None  # (weight, end vertex)
    for b, w in g.adjacency[a]:
        key = _state_key(full, b)
        if key in dp.final_layer:
            total = dp.final_layer[key] + w
            if best is None or total < best[0]:
                best = (total, b)
    if best is None:
        return None
    return TourResult(best[0], dp.reconstruct(best[1]), dp.states_visited)


def held_karp_cycle(g: Graph) -> TourResult | None:
    """Dense-table Hamiltonian cycle reference; same answers as tsp_cycle.

    Uses the classical 2^n x n cost table anchored at vertex 0, so it is
    capped at n <= 24.
    """
    if g.n < 3:
        raise ValueError("a Hamiltonian cycle needs at least three vertices")
    if g.n > HELD_KARP_MAX_N:
        raise CapacityError(f"dense table infeasible beyond n={HELD_KARP_MAX_N}")
    if not _is_connected(g):
        return None
    n = g.n
    size = (1 << n) * n
    dp = [_INF] * size
    parent = [-1] * size
    dp[1 * n + 0] = 0  # state (mask {0}, at 0)
    states = 1
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        base = mask * n
        for u in bits(mask):
            cur = dp[base + u]
            if cur == _INF:
                continue
            for v, w in g.adjacency[u]:
                if (mask >> v) & 1 or v == 0:
                    continue
                nmask = mask | (1 << v)
                idx = nmask * n + v
                cand = cur + w
                if cand < dp[idx]:
                    if dp[idx] == _INF:
                        states += 1
                    dp[idx] = cand
                    parent[idx] = u
    full = (1 << n) - 1
    best_w, best_v = _INF, -1
    for v, w in g.adjacency[0]:
        if dp[full * n + v] != _INF and dp[full * n + v] + w < best_w:
            best_w = dp[full * n + v] + w
            best_v = v
    if best_v < 0:
        return None
    order = [best_v]
    mask, v = full, best_v
    while v != 0:
        u = parent[mask * n + v]
        mask ^= 1 << v
        order.append(u)
        v = u
    order.reverse()
    return TourResult(int(best_w), tuple(order), states)
