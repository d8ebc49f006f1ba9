"""Perfect-matching counting by inclusion-exclusion over label subsets.

Vertices are paired (2i, 2i+1).  Each input edge (x, y) becomes two arcs in
a directed labeled walk graph: crossing from x's pair partner through the
pairing into x and then along the edge to y, and symmetrically for y.  An
arc leaving vertex v therefore always carries label floor(v/2), and closed
walks in this graph encode cycles that alternate between pairing steps and
graph edges.

A matching corresponds to a family of vertex-disjoint closed walks of total
length n/2 using every label exactly once.  Counting families that avoid a
label subset is polynomial (a layered walk DP plus a knapsack convolution),
and inclusion-exclusion over the 2^(n/2) label subsets recovers the exact
matching count in polynomial space.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .bitset import bits
from .graphs import Graph, pair_partner


@dataclass(frozen=True)
class ArcGraph:
    """Directed labeled multigraph on the input's n vertices.

    arcs holds (src, dst, label) with label in [0, n/2); self-loops occur
    whenever an input edge joins the two members of one pair.
    """

    n: int
    arcs: tuple[tuple[int, int, int], ...]


def build_arc_graph(g: Graph) -> ArcGraph:
    """Two arcs per input edge: (partner(x) -> y, label x//2) and symmetric."""
    if g.n % 2 != 0:
        raise ValueError("vertex count must be even")
    arcs = []
    for x, y, _ in g.edges:
        arcs.append((pair_partner(x), y, x // 2))
        arcs.append((pair_partner(y), x, y // 2))
    return ArcGraph(g.n, tuple(arcs))


@dataclass(frozen=True)
class WalkTable:
    """counts[a][j]: closed walks of length j from vertex a that visit a
    exactly once and avoid every vertex below a (1 <= j <= max_len)."""

    n: int
    max_len: int
    counts: tuple[tuple[int, ...], ...]

    def walks(self, a: int, j: int) -> int:
        return self.counts[a][j]


def count_anchored_walks(ag: ArcGraph, banned_labels) -> WalkTable:
    """Anchored-closed-walk counts in the arc graph with banned labels removed."""
    n = ag.n
    max_len = n // 2
    banned = frozenset(banned_labels)
    out_arcs: list[list[int]] = [[] for _ in range(n)]  # src -> dst list
    in_arcs: list[list[int]] = [[] for _ in range(n)]  # dst -> src list
    loops = [0] * n
    for src, dst, label in ag.arcs:
        if label in banned:
            continue
        if src == dst:
            loops[src] += 1
        out_arcs[src].append(dst)
        in_arcs[dst].append(src)

    table = [[0] * (max_len + 1) for _ in range(n)]
    for a in range(n):
        if max_len >= 1:
            table[a][1] = loops[a]
        # walk[b] = number of a->b walks of the current length whose
        # intermediate vertices all exceed a and never return to a
        walk = [0] * n
        for b in out_arcs[a]:
            if b > a:
                walk[b] += 1
        for j in range(2, max_len + 1):
            table[a][j] = sum(walk[b] for b in in_arcs[a] if b > a)
            if j < max_len:
                nxt = [0] * n
                for b in range(a + 1, n):
                    wb = walk[b]
                    if wb:
                        for c in out_arcs[b]:
                            if c > a:
                                nxt[c] += wb
                walk = nxt
    return WalkTable(n, max_len, tuple(tuple(row) for row in table))


@dataclass(frozen=True)
class TupleTable:
    """t[q][i]: ordered q-tuples of counted walks with total length i."""

    t: tuple[tuple[int, ...], ...]


def count_walk_tuples(wt: WalkTable, total_len: int) -> TupleTable:
    """Knapsack convolution over walk counts aggregated by length.

    Only walks anchored at even vertices are combined: every closed walk
    family that uses each label once consists of cycles whose lowest
    vertex is even, while the reverse traversal of such a cycle anchors at
    the odd partner; restricting to even anchors keeps one traversal
    direction per cycle.
    """
    per_len = [0] * (total_len + 1)
    for j in range(1, min(wt.max_len, total_len) + 1):
        per_len[j] = sum(wt.counts[a][j] for a in range(0, wt.n, 2))
    t = [[0] * (total_len + 1) for _ in range(total_len + 1)]
    t[0][0] = 1
    for q in range(1, total_len + 1):
        for i in range(total_len + 1):
            acc = 0
            for j in range(1, i + 1):
                pj = per_len[j]
                if pj:
                    acc += pj * t[q - 1][i - j]
            t[q][i] = acc
    return TupleTable(tuple(tuple(row) for row in t))


def inex_accumulators(g: Graph) -> list[int]:
    """Signed accumulators acc[r] (1-indexed), one per family size r.

    acc[r] sums, over all label subsets I with sign (-1)^|I|, the number of
    ordered r-tuples of anchored walks of total length n/2 avoiding I; by
    inclusion-exclusion it equals r! times the number of matchings whose
    pairing overlay splits into exactly r cycles.
    """
    if g.n % 2 != 0:
        raise ValueError("vertex count must be even")
    half = g.n // 2
    ag = build_arc_graph(g)
    acc = [0] * (half + 1)
    for subset in range(1 << half):
        banned = frozenset(bits(subset))
        sign = -1 if subset.bit_count() % 2 else 1
        tuples = count_walk_tuples(count_anchored_walks(ag, banned), half)
        for r in range(1, half + 1):
            acc[r] += sign * tuples.t[r][half]
    return acc


def count_pm_inex(g: Graph) -> int:
    """Exact number of perfect matchings; odd vertex counts give 0."""
    if g.n % 2 != 0:
        return 0
    if g.n == 0:
        return 1
    half = g.n // 2
    acc = inex_accumulators(g)
    total = 0
    for r in range(1, half + 1):
        f = factorial(r)
        if acc[r] < 0 or acc[r] % f != 0:
            raise AssertionError(
                f"accumulator for {r} cycles is {acc[r]}, not a multiple of {r}!"
            )
        total += acc[r] // f
    return total
