"""Graph types, text-format parsing/serialization and degree statistics.

Two input types exist: a simple undirected graph with nonnegative integer
edge weights, and a bipartite graph with equal sides.  Both are immutable
after construction and capped at 64 vertices per side so that every subset
DP in this package can key its tables on a single machine-word bit mask.

Text format (UTF-8, '#' starts a comment line, blank lines ignored):

    graph <n> <m>        header, then m lines "u v" or "u v w"
    bigraph <k> <m>      header, then m lines "i j" (i in side A, j in B)

Vertices are 0-indexed; weights are decimal nonnegative integers and
default to 1 when omitted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapacityError, InputFormatError

VERTEX_CAPACITY = 64


@dataclass(frozen=True)
class Graph:
    """Simple undirected weighted graph on vertices 0..n-1.

    edges holds canonical (u, v, w) triples with u < v, sorted; adjacency
    is derived and symmetric.  No self-loops, no parallel edges.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, compare=False, repr=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.n > VERTEX_CAPACITY:
            raise CapacityError(
                f"graph has {self.n} vertices, capacity is {VERTEX_CAPACITY}"
            )
        seen = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError("edges must be stored as (u, v, w) with u < v")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            if w < 0:
                raise ValueError(f"negative weight on edge ({u},{v})")
            seen.add((u, v))
            adj[u].append((v, w))
            adj[v].append((u, w))
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(a)) for a in adj)
        )

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        """Build from (u, v) pairs or (u, v, w) triples in any order."""
        canon = []
        for e in edges:
            if len(e) == 2:
                u, v = e
                w = 1
            else:
                u, v, w = e
            if u > v:
                u, v = v, u
            canon.append((u, v, w))
        return cls(n, tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(u for u, _ in self.adjacency[v])

    def weight(self, u: int, v: int) -> int:
        for x, w in self.adjacency[u]:
            if x == v:
                return w
        raise KeyError(f"no edge ({u},{v})")

    def has_edge(self, u: int, v: int) -> bool:
        return any(x == v for x, _ in self.adjacency[u])


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with sides A and B of equal size k, edges (i, j)."""

    k: int
    edges: tuple[tuple[int, int], ...]
    adj_a: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    adj_b: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("side size must be nonnegative")
        if self.k > VERTEX_CAPACITY:
            raise CapacityError(
                f"bipartite side has {self.k} vertices, capacity is {VERTEX_CAPACITY}"
            )
        seen = set()
        adj_a: list[list[int]] = [[] for _ in range(self.k)]
        adj_b: list[list[int]] = [[] for _ in range(self.k)]
        for i, j in self.edges:
            if not (0 <= i < self.k and 0 <= j < self.k):
                raise ValueError(f"edge ({i},{j}) out of range for k={self.k}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i},{j})")
            seen.add((i, j))
            adj_a[i].append(j)
            adj_b[j].append(i)
        object.__setattr__(self, "adj_a", tuple(tuple(sorted(a)) for a in adj_a))
        object.__setattr__(self, "adj_b", tuple(tuple(sorted(b)) for b in adj_b))

    @classmethod
    def from_edges(cls, k: int, edges) -> BipartiteGraph:
        return cls(k, tuple(sorted((i, j) for i, j in edges)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def transpose(self) -> BipartiteGraph:
        return BipartiteGraph.from_edges(self.k, ((j, i) for i, j in self.edges))


@dataclass(frozen=True)
class DegreeProfile:
    """histogram maps degree -> vertex count; avg is the exact rational 2m/n."""

    histogram: dict[int, int]
    avg: Fraction
    by_degree_asc: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return max(self.histogram) if self.histogram else 0

    def count_above(self, threshold: int) -> int:
        return sum(c for d, c in self.histogram.items() if d > threshold)


def degree_profile(g: Graph) -> DegreeProfile:
    """Degree histogram, exact average degree and (degree, index) vertex order."""
    hist: dict[int, int] = {}
    for v in range(g.n):
        d = g.degree(v)
        hist[d] = hist.get(d, 0) + 1
    avg = Fraction(2 * g.m, g.n) if g.n else Fraction(0)
    order = tuple(sorted(range(g.n), key=lambda v: (g.degree(v), v)))
    return DegreeProfile(hist, avg, order)


def pair_partner(v: int) -> int:
    """The other member of v's consecutive pair (2i, 2i+1); an involution."""
    return v ^ 1


def parse_graph(text: str) -> Graph | BipartiteGraph:
    """Parse the text format described in the module docstring.

    Raises InputFormatError with a line number on malformed input and
    CapacityError when the declared size exceeds the vertex capacity.
    """
    lines = text.splitlines()
    content: list[tuple[int, list[str]]] = []
    for idx, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        content.append((idx, stripped.split()))

    if not content:
        raise InputFormatError("empty input, expected a 'graph' or 'bigraph' header")

    header_line, header = content[0]
    if len(header) != 3 or header[0] not in ("graph", "bigraph"):
        raise InputFormatError(
            "header must be 'graph <n> <m>' or 'bigraph <k> <m>'", header_line
        )
    try:
        size, m = int(header[1]), int(header[2])
    except ValueError:
        raise InputFormatError("header sizes must be integers", header_line) from None
    if size < 0 or m < 0:
        raise InputFormatError("header sizes must be nonnegative", header_line)
    if size > VERTEX_CAPACITY:
        raise CapacityError(
            f"line {header_line}: {size} vertices exceeds capacity {VERTEX_CAPACITY}"
        )

    body = content[1:]
    if len(body) != m:
        raise InputFormatError(
            f"header declares {m} edges but {len(body)} edge lines found", header_line
        )

    if header[0] == "graph":
        seen: set[tuple[int, int]] = set()
        edges = []
        for line_no, tok in body:
            if len(tok) not in (2, 3):
                raise InputFormatError("edge line must be 'u v' or 'u v w'", line_no)
            try:
                nums = [int(t) for t in tok]
            except ValueError:
                raise InputFormatError("edge fields must be integers", line_no) from None
            u, v = nums[0], nums[1]
            w = nums[2] if len(nums) == 3 else 1
            if not (0 <= u < size and 0 <= v < size):
                raise InputFormatError(f"vertex index out of range [0,{size})", line_no)
            if u == v:
                raise InputFormatError(f"self-loop at vertex {u}", line_no)
            if w < 0:
                raise InputFormatError("negative weight", line_no)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputFormatError(f"duplicate edge ({key[0]},{key[1]})", line_no)
            seen.add(key)
            edges.append((key[0], key[1], w))
        return Graph(size, tuple(sorted(edges)))

    seen_b: set[tuple[int, int]] = set()
    bedges = []
    for line_no, tok in body:
        if len(tok) != 2:
            raise InputFormatError("bipartite edge line must be 'i j'", line_no)
        try:
            i, j = int(tok[0]), int(tok[1])
        except ValueError:
            raise InputFormatError("edge fields must be integers", line_no) from None
        if not (0 <= i < size and 0 <= j < size):
            raise InputFormatError(f"vertex index out of range [0,{size})", line_no)
        if (i, j) in seen_b:
            raise InputFormatError(f"duplicate edge ({i},{j})", line_no)
        seen_b.add((i, j))
        bedges.append((i, j))
    return BipartiteGraph(size, tuple(sorted(bedges)))


def serialize_graph(g: Graph | BipartiteGraph) -> str:
    """Emit the text format with edges sorted by (u, v); parses back identically."""
    if isinstance(g, Graph):
        out = [f"graph {g.n} {g.m}"]
        for u, v, w in g.edges:
            out.append(f"{u} {v}" if w == 1 else f"{u} {v} {w}")
    else:
        out = [f"bigraph {g.k} {g.m}"]
        for i, j in g.edges:
            out.append(f"{i} {j}")
    return "\n".join(out) + "\n"
