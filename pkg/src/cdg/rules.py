"""Necessary conditions and elimination rules for character degree graphs.

Each rule returns a :class:`RuleWitness` that :func:`replay` can re-check against
the graph without trusting the rule that produced it.  When several witnesses
exist the lexicographically smallest is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .errors import PreconditionError
from .graph import (
    Graph,
    bfs_distances,
    complement,
    connected_components,
    degree,
    diameter,
    graph_from_edge_list,
    induced_subgraph,
    is_clique,
    is_connected,
)

# Stable rule identifiers used in traces, reports and the CLI.
PALFY = "palfy"
ODD_CYCLE = "odd_cycle"
DISCONNECTED_SHAPE = "disconnected_shape"
DIAM3 = "diam3"
BISSLER_FAMILY = "bissler_family"
JOIN = "join"
RULE_NAMES = (PALFY, ODD_CYCLE, DISCONNECTED_SHAPE, DIAM3, BISSLER_FAMILY, JOIN)

CITE_ODD_CYCLE = "[pacifici] complement of a solvable group's degree graph has no odd cycle"
CITE_PALFY = "[palfy] any three vertices span at least one edge"
CITE_PALFY_INEQUALITY = "[palfy2] disconnected with components a <= b forces b >= 2^a - 1"
CITE_TWO_COMPLETE = "[palfy] a disconnected graph has two components, each complete"
CITE_DIAM3_N4 = "[zhang] the four-vertex graph of diameter three does not occur"
CITE_DIAM3_N5 = "[lewis2] no five-vertex graph of diameter three occurs"
CITE_DIAM3_N6 = "[lewis4], [sass], [sassy] unique six-vertex diameter-three graph"
CITE_BISSLER = "[bissler] adjacent degree-two vertices without a common neighbour"


class Status(str, Enum):
    ELIMINATES = "ELIMINATES"
    CERTIFIES = "CERTIFIES"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class RuleWitness:
    """Evidence produced by a rule.

    ``kind`` selects how ``values`` is read:

    ``triple``       three vertices spanning no edge
    ``cycle``        an odd cycle of the complement, in traversal order
    ``inequality``   component sizes ``(a, b)`` with ``b < 2**a - 1``
    ``components``   more than two components; values are their sizes
    ``noncomplete``  two non-adjacent vertices inside one component
    ``distance3``    two vertices at distance three
    ``pair``         adjacent degree-two vertices with no common neighbour
    ``factors``      join factor sizes; ``parts`` holds the vertex sets
    """

    rule: str
    kind: str
    values: tuple[int, ...] = ()
    parts: tuple[tuple[int, ...], ...] = ()
    note: str = ""

    def relabel(self, mapping: dict[int, int]) -> "RuleWitness":
        if self.kind in ("inequality", "components", "factors"):
            if not self.parts:
                return self
            parts = tuple(tuple(sorted(mapping[v] for v in p)) for p in self.parts)
            return RuleWitness(self.rule, self.kind, self.values, parts, self.note)
        values = tuple(mapping[v] for v in self.values)
        return RuleWitness(self.rule, self.kind, values, self.parts, self.note)

    def to_dict(self) -> dict:
        d = {"rule": self.rule, "kind": self.kind, "values": list(self.values)}
        if self.parts:
            d["parts"] = [list(p) for p in self.parts]
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RuleWitness":
        return cls(
            d["rule"],
            d["kind"],
            tuple(d.get("values", ())),
            tuple(tuple(p) for p in d.get("parts", ())),
            d.get("note", ""),
        )

    def describe(self) -> str:
        v = self.values
        if self.kind == "triple":
            return "vertices {} span no edge".format(", ".join(f"p{x}" for x in v))
        if self.kind == "cycle":
            walk = "-".join(f"p{x}" for x in (*v, v[0]))
            return f"complement contains the {len(v)}-cycle {walk}"
        if self.kind == "inequality":
            a, b = v
            return f"component sizes a={a}, b={b}: {b} >= {2**a - 1} fails"
        if self.kind == "components":
            return f"{len(v)} components (sizes {', '.join(map(str, v))}); at most two allowed"
        if self.kind == "noncomplete":
            return f"p{v[0]} and p{v[1]} share a component but are not adjacent"
        if self.kind == "distance3":
            return f"p{v[0]} and p{v[1]} are at distance three"
        if self.kind == "pair":
            return f"p{v[0]} ~ p{v[1]}, both of degree two, no common neighbour"
        if self.kind == "factors":
            return "join of factors " + " | ".join(
                "{" + ",".join(f"p{x}" for x in p) + "}" for p in self.parts
            )
        return self.note or self.kind


@dataclass(frozen=True)
class Outcome:
    """Result of a rule that can either settle a verdict or defer."""

    rule: str
    status: Status
    witness: RuleWitness | None = None
    citation: str = ""
    extra: dict = field(default_factory=dict, compare=False)


# --- Pálfy's condition --------------------------------------------------------


def _palfy_by_subsets(g: Graph) -> RuleWitness | None:
    for t in combinations(g.vertices, 3):
        a, b, c = t
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            return RuleWitness(PALFY, "triple", t)
    return None


def _palfy_by_complement(g: Graph) -> RuleWitness | None:
    # a triangle in the complement is exactly an edgeless triple
    h = complement(g)
    for a in h.vertices:
        for b in h.neighbors(a):
            if b <= a:
                continue
            common = h.adjacency[a] & h.adjacency[b]
            for c in range(b + 1, h.n + 1):
                if common >> c & 1:
                    return RuleWitness(PALFY, "triple", (a, b, c))
    return None


def palfy_violation(g: Graph, method: str = "subsets") -> RuleWitness | None:
    """Smallest edgeless vertex triple, or None if Pálfy's condition holds.

    ``method`` is ``"subsets"`` (scan all 3-subsets of g) or ``"complement"``
    (find a triangle in the complement); both return the same witness.
    """
    if method == "subsets":
        return _palfy_by_subsets(g)
    if method == "complement":
        return _palfy_by_complement(g)
    raise ValueError(f"unknown method {method!r}")


def satisfies_palfy(g: Graph) -> bool:
    return palfy_violation(g) is None


# --- odd cycles in the complement ---------------------------------------------


def _is_bipartite(h: Graph) -> bool:
    color: dict[int, int] = {}
    for s in h.vertices:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in h.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _first_cycle(h: Graph, length: int) -> tuple[int, ...] | None:
    """Lexicographically smallest cycle of the given length, written from its
    smallest vertex in the direction with the smaller second vertex."""
    for s in h.vertices:
        path = [s]

        def extend() -> tuple[int, ...] | None:
            u = path[-1]
            if len(path) == length:
                if h.has_edge(u, s) and path[1] < path[-1]:
                    return tuple(path)
                return None
            for w in h.neighbors(u):
                if w > s and w not in path:
                    path.append(w)
                    found = extend()
                    if found:
                        return found
                    path.pop()
            return None

        found = extend()
        if found:
            return found
    return None


def complement_odd_cycle(g: Graph) -> RuleWitness | None:
    """A shortest odd cycle of the complement, or None if the complement is bipartite."""
    h = complement(g)
    if _is_bipartite(h):
        return None
    for length in range(3, h.n + 1, 2):
        cyc = _first_cycle(h, length)
        if cyc:
            return RuleWitness(ODD_CYCLE, "cycle", cyc)
    raise AssertionError("non-bipartite graph without an odd cycle")


# --- disconnected graphs ------------------------------------------------------


def disconnected_shape(g: Graph) -> Outcome:
    """Settle a disconnected graph as non-occurring, or defer to a construction."""
    comps = connected_components(g)
    if len(comps) < 2:
        raise PreconditionError("disconnected_shape needs a disconnected graph")
    if len(comps) > 2:
        w = RuleWitness(DISCONNECTED_SHAPE, "components", tuple(len(c) for c in comps),
                        tuple(tuple(sorted(c)) for c in comps))
        return Outcome(DISCONNECTED_SHAPE, Status.ELIMINATES, w, CITE_TWO_COMPLETE)
    for comp in comps:
        for u, v in combinations(sorted(comp), 2):
            if not g.has_edge(u, v):
                w = RuleWitness(DISCONNECTED_SHAPE, "noncomplete", (u, v))
                return Outcome(DISCONNECTED_SHAPE, Status.ELIMINATES, w, CITE_TWO_COMPLETE)
    a, b = len(comps[0]), len(comps[1])
    parts = tuple(tuple(sorted(c)) for c in comps)
    if b < 2**a - 1:
        w = RuleWitness(DISCONNECTED_SHAPE, "inequality", (a, b), parts)
        return Outcome(DISCONNECTED_SHAPE, Status.ELIMINATES, w, CITE_PALFY_INEQUALITY)
    return Outcome(DISCONNECTED_SHAPE, Status.INCONCLUSIVE, None, "",
                   {"sizes": (a, b), "parts": parts})


def satisfies_palfy_inequality(a: int, b: int) -> bool:
    a, b = sorted((a, b))
    return b >= 2**a - 1


# --- diameter three -----------------------------------------------------------

_FIG1_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)]


def _far_pair(g: Graph) -> tuple[int, int]:
    for u in g.vertices:
        dist = bfs_distances(g, u)
        for v in sorted(dist):
            if v > u and dist[v] == 3:
                return u, v
    raise AssertionError("no pair at distance three")


def diameter_three_rule(g: Graph) -> Outcome:
    if not is_connected(g):
        raise PreconditionError("diameter_three_rule needs a connected graph")
    if diameter(g) != 3 or g.n >= 7:
        return Outcome(DIAM3, Status.NOT_APPLICABLE)
    from .canonical import is_isomorphic

    w = RuleWitness(DIAM3, "distance3", _far_pair(g))
    if g.n == 6:
        if is_isomorphic(g, graph_from_edge_list(6, _FIG1_EDGES)):
            return Outcome(DIAM3, Status.CERTIFIES, w, CITE_DIAM3_N6)
        return Outcome(DIAM3, Status.ELIMINATES, w, CITE_DIAM3_N6)
    return Outcome(DIAM3, Status.ELIMINATES, w, CITE_DIAM3_N5 if g.n == 5 else CITE_DIAM3_N4)


# --- degree-two family --------------------------------------------------------


def bissler_family(g: Graph) -> RuleWitness | None:
    """Adjacent vertices of degree two with no common neighbour (n >= 5, Pálfy graphs)."""
    if g.n < 5 or not satisfies_palfy(g):
        return None
    for u, v in g.sorted_edges():
        if degree(g, u) == 2 and degree(g, v) == 2 and not (g.adjacency[u] & g.adjacency[v]):
            return RuleWitness(BISSLER_FAMILY, "pair", (u, v))
    return None


# --- joins ---------------------------------------------------------------------


def join_parts(g: Graph) -> list[frozenset[int]] | None:
    """Vertex sets of the finest join factors, or None if g is join-indecomposable."""
    comps = connected_components(complement(g))
    return comps if len(comps) > 1 else None


def join_decompose(g: Graph) -> list[Graph] | None:
    """Finest join factors (induced on the complement's components), in component order."""
    parts = join_parts(g)
    if parts is None:
        return None
    return [induced_subgraph(g, p) for p in parts]


def join_witness(g: Graph) -> RuleWitness | None:
    parts = join_parts(g)
    if parts is None:
        return None
    return RuleWitness(JOIN, "factors", tuple(len(p) for p in parts),
                       tuple(tuple(sorted(p)) for p in parts))


# --- witness replay -----------------------------------------------------------


def replay(g: Graph, w: RuleWitness) -> bool:
    """Re-check a witness directly against the definition it claims to satisfy."""
    v = w.values
    try:
        if w.kind == "triple":
            a, b, c = v
            return len({a, b, c}) == 3 and not (
                g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)
            )
        if w.kind == "cycle":
            if len(v) % 2 == 0 or len(set(v)) != len(v) or len(v) < 3:
                return False
            return all(not g.has_edge(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))
        if w.kind == "inequality":
            a, b = v
            ok_parts = True
            if w.parts:
                p, q = w.parts
                ok_parts = (
                    sorted((len(p), len(q))) == [a, b]
                    and sorted(connected_components(g), key=sorted)
                    == sorted((frozenset(p), frozenset(q)), key=sorted)
                    and is_clique(g, p)
                    and is_clique(g, q)
                )
            return ok_parts and a <= b and b < 2**a - 1
        if w.kind == "components":
            return len(connected_components(g)) > 2
        if w.kind == "noncomplete":
            a, b = v
            comps = connected_components(g)
            same = any(a in c and b in c for c in comps)
            return a != b and same and not g.has_edge(a, b) and len(comps) > 1
        if w.kind == "distance3":
            a, b = v
            return bfs_distances(g, a).get(b) == 3
        if w.kind == "pair":
            a, b = v
            return (
                g.has_edge(a, b)
                and degree(g, a) == 2
                and degree(g, b) == 2
                and not (g.adjacency[a] & g.adjacency[b])
            )
        if w.kind == "factors":
            parts = [set(p) for p in w.parts]
            if sorted(x for p in parts for x in p) != list(g.vertices):
                return False
            return all(
                g.has_edge(x, y) for p, q in combinations(parts, 2) for x in p for y in q
            )
    except (ValueError, IndexError, TypeError):
        return False
    return False
