"""Immutable small graphs on vertices 1..n and the structural primitives built on them.

Vertices are always labelled ``1..n``.  Edges are stored as sorted pairs ``(u, v)``
with ``u < v``.  Every operation returns a new graph.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    EmptyVertexSetError,
    GraphFormatError,
    MissingEdgeError,
    SelfLoopError,
    VertexCountError,
    VertexRangeError,
)

MAX_VERTICES = 8
INFINITE = math.inf

Edge = tuple[int, int]


def pair_index(u: int, v: int) -> int:
    """Position of the unordered pair {u, v} in column order (1,2),(1,3),(2,3),(1,4),..."""
    if u > v:
        u, v = v, u
    return (v - 1) * (v - 2) // 2 + (u - 1)


def all_pairs(n: int) -> list[Edge]:
    """Every unordered pair on 1..n, in :func:`pair_index` order."""
    return [(u, v) for v in range(2, n + 1) for u in range(1, v)]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        _check_n(self.n)
        for e in self.edges:
            u, v = e
            if not (1 <= u < v <= self.n):
                raise VertexRangeError(f"bad stored edge {e} for n={self.n}")

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmasks; entry ``v`` has bit ``w`` set iff v~w.  Entry 0 is unused."""
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        _check_vertex(self, v)
        return [w for w in self.vertices if self.adjacency[v] >> w & 1]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph({format_cdg1(self, single_line=True)})"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_VERTICES:
        raise VertexCountError(f"vertex count must be an integer in [1, {MAX_VERTICES}], got {n!r}")


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, int) or not 1 <= v <= g.n:
        raise VertexRangeError(f"vertex {v!r} is not in 1..{g.n}")


def graph_from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, collapsing duplicate edges.

    >>> graph_from_edge_list(3, [(1, 2), (2, 1)]).num_edges
    1
    """
    _check_n(n)
    es = set()
    for pair in edges:
        u, v = pair
        for w in (u, v):
            if not isinstance(w, int) or not 1 <= w <= n:
                raise VertexRangeError(f"edge {u}-{v}: vertex {w!r} outside 1..{n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        es.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(es))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(all_pairs(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, i % n + 1) for i in range(1, n + 1)])


def disjoint_union(*parts: Graph) -> Graph:
    """Place the parts side by side, shifting the labels of each one past the previous."""
    offset, es = 0, []
    for p in parts:
        es.extend((u + offset, v + offset) for u, v in p.edges)
        offset += p.n
    return graph_from_edge_list(offset, es)


def relabel(g: Graph, mapping: dict[int, int] | Sequence[int]) -> Graph:
    """Apply a vertex permutation.  A sequence is read as ``mapping[v - 1]`` = new label of v."""
    if not isinstance(mapping, dict):
        mapping = {v: mapping[v - 1] for v in g.vertices}
    if sorted(mapping) != list(g.vertices) or sorted(mapping.values()) != list(g.vertices):
        raise VertexRangeError("relabelling must be a permutation of 1..n")
    return graph_from_edge_list(g.n, [(mapping[u], mapping[v]) for u, v in g.edges])


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in all_pairs(g.n) if e not in g.edges))


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: Graph) -> int | float:
    """Longest shortest path; :data:`INFINITE` when the graph is disconnected."""
    best = 0
    for v in g.vertices:
        dist = bfs_distances(g, v)
        if len(dist) < g.n:
            return INFINITE
        best = max(best, max(dist.values()))
    return best


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by size, then by smallest member."""
    seen: set[int] = set()
    comps = []
    for v in g.vertices:
        if v not in seen:
            comp = frozenset(bfs_distances(g, v))
            seen |= comp
            comps.append(comp)
    return sorted(comps, key=lambda c: (len(c), min(c)))


def is_connected(g: Graph) -> bool:
    return len(bfs_distances(g, 1)) == g.n


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on ``keep``; kept vertices are renumbered 1..k in increasing order."""
    kept = sorted(set(keep))
    if not kept:
        raise EmptyVertexSetError("induced_subgraph needs at least one vertex")
    for v in kept:
        _check_vertex(g, v)
    pos = {v: i + 1 for i, v in enumerate(kept)}
    return graph_from_edge_list(
        len(kept), [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    )


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [w for w in g.vertices if w != v])


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    drop = set()
    for u, v in edges:
        e = (min(u, v), max(u, v))
        if e not in g.edges:
            raise MissingEdgeError(f"{u}-{v} is not an edge")
        drop.add(e)
    return Graph(g.n, g.edges - drop)


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    return graph_from_edge_list(g.n, [*g.edges, *edges])


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adjacency[v].bit_count()


def degree_sequence(g: Graph) -> list[int]:
    return sorted((degree(g, v) for v in g.vertices), reverse=True)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(sorted(vertices), 2))


# --- text formats -----------------------------------------------------------

_N_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")
_EDGES_RE = re.compile(r"^\s*edges\s*=\s*(.*?)\s*$")


def format_cdg1(g: Graph, single_line: bool = False) -> str:
    edges = ",".join(f"{u}-{v}" for u, v in g.sorted_edges())
    sep = ";" if single_line else "\n"
    return f"n={g.n}{sep}edges={edges}"


def parse_cdg1(text: str) -> Graph:
    """Read the ``cdg1`` graph format (two-line or ``;``-separated single line).

    Blank lines and ``#`` comments are ignored.
    """
    fields = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            fields.extend(part.strip() for part in line.split(";") if part.strip())
    if len(fields) != 2:
        raise GraphFormatError(f"expected 'n=' and 'edges=' fields, got {len(fields)} field(s)")
    m_n, m_e = _N_RE.match(fields[0]), _EDGES_RE.match(fields[1])
    if not m_n:
        raise GraphFormatError(f"malformed vertex-count field: {fields[0]!r}")
    if not m_e:
        raise GraphFormatError(f"malformed edge field: {fields[1]!r}")
    edges = []
    body = m_e.group(1)
    for tok in filter(None, (t.strip() for t in body.split(","))):
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", tok)
        if not m:
            raise GraphFormatError(f"malformed edge {tok!r}")
        edges.append((int(m.group(1)), int(m.group(2))))
    return graph_from_edge_list(int(m_n.group(1)), edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  p{v};" for v in g.vertices]
    lines += [f"  p{u} -- p{v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> Graph:
    """Inverse of :func:`to_dot` (only the subset of DOT that it emits)."""
    nodes = {int(m) for m in re.findall(r"^\s*p(\d+)\s*;", text, re.M)}
    edges = [(int(a), int(b)) for a, b in re.findall(r"p(\d+)\s*--\s*p(\d+)", text)]
    if not nodes:
        raise GraphFormatError("no nodes in DOT text")
    return graph_from_edge_list(max(nodes), edges)
