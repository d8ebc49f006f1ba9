"""Perfect-matching counting as label-disjoint cycle covers of a contracted
multigraph, with sparse tables that store only nonzero entries.

Contracting each vertex pair (2i, 2i+1) to a single node turns the input
into a multigraph on n/2 nodes whose edges remember their original
endpoints as a two-element label.  Matchings of the input correspond
one-to-one to cycle covers of the contraction whose labels are pairwise
disjoint (equivalently: whose labels cover every original vertex).

Covers are counted by cycle count q via two associative tables pushed
bottom-up in (q, |X|) strata:

  cover[q][X]           ordered q-cycle covers of the induced sub-multigraph
                        on X with pairwise disjoint labels;
  path[q][X][a][b][x]   pairs of an ordered q-cycle cover on some Y inside X
                        and an a-b path on the rest of X avoiding nodes
                        below a, whose end labels are pinned: the label at a
                        contains original vertex 2a, the one at b contains
                        2b+x.

Each cover's last cycle is charged once: a one-node cycle (self-loop) comes
straight from cover[q-1], a longer cycle closes a path at its lowest node a
with an edge whose label contains 2a+1.  Only nonzero entries are stored or
pushed, so work is proportional to the number of reachable states.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .graphs import Graph


@dataclass(frozen=True)
class LabeledMultigraph:
    """Multigraph on k nodes; edges are (p, q, x, y) with p <= q, where the
    label is the original-vertex pair {x, y}, x in {2p, 2p+1} and
    y in {2q, 2q+1}.  Self-loops (p == q) always carry {2p, 2p+1}."""

    k: int
    edges: tuple[tuple[int, int, int, int], ...]

    def label(self, edge_index: int) -> frozenset[int]:
        _, _, x, y = self.edges[edge_index]
        return frozenset((x, y))


def build_contracted_graph(g: Graph) -> LabeledMultigraph:
    """One labeled edge per input edge under the pair contraction v -> v//2."""
    if g.n % 2 != 0:
        raise ValueError("vertex count must be even")
    edges = []
    for x, y, _ in g.edges:
        p, q = x // 2, y // 2
        if p > q:
            p, q, x, y = q, p, y, x
        elif p == q:
            x, y = min(x, y), max(x, y)
        edges.append((p, q, x, y))
    return LabeledMultigraph(g.n // 2, tuple(sorted(edges)))


@dataclass(frozen=True)
class CoverDpRun:
    """full_covers[q]: ordered q-cycle covers of the whole node set;
    states_visited counts every nonzero table entry; key dumps are kept
    only when requested."""

    full_covers: dict[int, int]
    states_visited: int
    cover_keys: tuple[tuple[int, int], ...] | None
    path_keys: tuple[tuple[int, int, int, int, int], ...] | None


def run_cover_dp(mg: LabeledMultigraph, keep_keys: bool = False) -> CoverDpRun:
    k = mg.k
    full = (1 << k) - 1
    loops = [0] * k
    emult: dict[tuple[int, int, int, int], int] = {}
    for p, q, x, y in mg.edges:
        if p == q:
            loops[p] += 1
        else:
            key = (p, q, x & 1, y & 1)
            emult[key] = emult.get(key, 0) + 1

    def edge_count(p: int, bp: int, q: int, bq: int) -> int:
        if p < q:
            return emult.get((p, q, bp, bq), 0)
        return emult.get((q, p, bq, bp), 0)

    loop_nodes = [a for a in range(k) if loops[a]]
    cover_strata: dict[tuple[int, int], dict[int, int]] = {(0, 0): {0: 1}}
    path_strata: dict[tuple[int, int], dict[tuple[int, int, int, int], int]] = {}
    full_covers: dict[int, int] = {}
    states = 0
    cover_keys: list[tuple[int, int]] = []
    path_keys: list[tuple[int, int, int, int, int]] = []

    for q in range(k + 1):
        for i in range(k + 1):
            cur = cover_strata.pop((q, i), None)
            if cur:
                states += len(cur)
                if keep_keys:
                    cover_keys.extend((q, x) for x in cur)
                if full in cur:
                    full_covers[q] = cur[full]
                for x_mask, val in cur.items():
                    free = [a for a in range(k) if not (x_mask >> a) & 1]
                    # last cycle is a self-loop at a
                    for a in loop_nodes:
                        if (x_mask >> a) & 1:
                            continue
                        tgt = cover_strata.setdefault((q + 1, i + 1), {})
                        nk = x_mask | (1 << a)
                        tgt[nk] = tgt.get(nk, 0) + val * loops[a]
                    # seed a path a-b (the label at a must contain 2a)
                    for ai in range(len(free)):
                        a = free[ai]
                        for b in free[ai + 1:]:
                            nk = x_mask | (1 << a) | (1 << b)
                            for xb in (0, 1):
                                mult = edge_count(a, 0, b, xb)
                                if mult:
                                    tgt2 = path_strata.setdefault((q, i + 2), {})
                                    pk = (nk, a, b, xb)
                                    tgt2[pk] = tgt2.get(pk, 0) + val * mult

            cur2 = path_strata.pop((q, i), None)
            if cur2:
                states += len(cur2)
                if keep_keys:
                    path_keys.extend((q, x, a, b, xb) for (x, a, b, xb) in cur2)
                for (x_mask, a, c, z), val in cur2.items():
                    # close the cycle: edge a-c whose label is {2a+1, 2c+(z^1)}
                    mult = edge_count(a, 1, c, z ^ 1)
                    if mult:
                        tgt = cover_strata.setdefault((q + 1, i), {})
                        tgt[x_mask] = tgt.get(x_mask, 0) + val * mult
                    # extend the path endpoint from c to e > a
                    for e in range(a + 1, k):
                        if (x_mask >> e) & 1:
                            continue
                        for xe in (0, 1):
                            mult = edge_count(c, z ^ 1, e, xe)
                            if mult:
                                tgt2 = path_strata.setdefault((q, i + 1), {})
                                pk = (x_mask | (1 << e), a, e, xe)
                                tgt2[pk] = tgt2.get(pk, 0) + val * mult

    return CoverDpRun(
        full_covers,
        states,
        tuple(cover_keys) if keep_keys else None,
        tuple(path_keys) if keep_keys else None,
    )


def count_label_disjoint_covers(mg: LabeledMultigraph) -> int:
    """Number of cycle covers of mg whose edge labels are pairwise disjoint."""
    run = run_cover_dp(mg)
    total = 0
    for q, val in sorted(run.full_covers.items()):
        f = factorial(q)
        if val % f != 0:
            raise AssertionError(
                f"ordered {q}-cycle cover count {val} is not a multiple of {q}!"
            )
        total += val // f
    return total


@dataclass(frozen=True)
class PmDpResult:
    count: int
    states_visited: int


def count_pm_dp(g: Graph) -> PmDpResult:
    """Exact number of perfect matchings via the contracted cover DP."""
    if g.n % 2 != 0:
        return PmDpResult(0, 0)
    mg = build_contracted_graph(g)
    run = run_cover_dp(mg)
    total = 0
    for q, val in sorted(run.full_covers.items()):
        f = factorial(q)
        if val % f != 0:
            raise AssertionError(
                f"ordered {q}-cycle cover count {val} is not a multiple of {q}!"
            )
        total += val // f
    return PmDpResult(total, run.states_visited)
