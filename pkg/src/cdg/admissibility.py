"""Mechanical checks of the admissibility-style hypotheses used in non-occurrence proofs.

Only hypotheses are verified here.  Nothing in this module concludes that a graph
does not occur; that stays a literature fact in the knowledge base.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .classifier import Classifier
from .errors import PreconditionError, VertexRangeError
from .graph import (
    Graph,
    delete_edges,
    format_cdg1,
    graph_from_edge_list,
    induced_subgraph,
    is_clique,
    is_connected,
)
from .kb import KnowledgeBase
from .records import Verdict
from .rules import satisfies_palfy, satisfies_palfy_inequality


class Tri(str, Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Evidence:
    """A subgraph produced by a named removal, with its verdict."""

    operation: str
    graph: Graph
    verdict: Verdict

    def line(self) -> str:
        return f"{self.operation}: {format_cdg1(self.graph, single_line=True)} -> {self.verdict.value}"


@dataclass(frozen=True)
class TriState:
    value: Tri
    evidence: tuple[Evidence, ...] = ()

    def __bool__(self) -> bool:
        return self.value is Tri.YES


def _vset(vs) -> str:
    return "{" + ",".join(f"p{v}" for v in sorted(vs)) + "}"


def _eset(es) -> str:
    return ",".join(f"p{u}-p{v}" for u, v in es)


def _nonempty_subsets(items: list) -> list[tuple]:
    return [s for r in range(1, len(items) + 1) for s in combinations(items, r)]


def _check_vertex(g: Graph, p: int) -> None:
    if not isinstance(p, int) or not 1 <= p <= g.n:
        raise VertexRangeError(f"vertex {p!r} is not in 1..{g.n}")


def _without_vertex(g: Graph, p: int) -> Graph:
    return induced_subgraph(g, [v for v in g.vertices if v != p])


def _decide(checks: list[Evidence]) -> TriState:
    occurs = [e for e in checks if e.verdict is Verdict.OCCURS]
    if occurs:
        return TriState(Tri.NO, (occurs[0],))
    unknown = [e for e in checks if e.verdict is Verdict.UNKNOWN]
    if unknown:
        return TriState(Tri.UNKNOWN, tuple(unknown))
    return TriState(Tri.YES, tuple(checks))


def admissibility_checks(g: Graph, p: int, clf: Classifier) -> list[Evidence]:
    """Vertex deletion, then every nonempty set of incident edges deleted."""
    out = [Evidence(f"remove p{p}", _without_vertex(g, p), Verdict.UNKNOWN)]
    incident = [(min(p, v), max(p, v)) for v in g.neighbors(p)]
    for s in _nonempty_subsets(incident):
        out.append(Evidence(f"remove edges {_eset(s)}", delete_edges(g, s), Verdict.UNKNOWN))
    return [Evidence(e.operation, e.graph, clf.verdict(e.graph)) for e in out]


def strong_checks(g: Graph, p: int, clf: Classifier) -> list[Evidence]:
    """Vertex deletion combined with every nonempty set of edges among p's neighbours."""
    among = [e for e in combinations(g.neighbors(p), 2) if g.has_edge(*e)]
    out = []
    for s in _nonempty_subsets(among):
        h = _without_vertex(delete_edges(g, s), p)
        out.append(Evidence(f"remove p{p} and edges {_eset(s)}", h, clf.verdict(h)))
    return out


def vertex_admissible(g: Graph, p: int, kb: KnowledgeBase) -> TriState:
    _check_vertex(g, p)
    return _decide(admissibility_checks(g, p, Classifier(kb)))


def vertex_strongly_admissible(g: Graph, p: int, kb: KnowledgeBase) -> TriState:
    _check_vertex(g, p)
    clf = Classifier(kb)
    base = admissibility_checks(g, p, clf)
    first = _decide(base)
    if first.value is Tri.NO:
        return first
    second = _decide(base + strong_checks(g, p, clf))
    return second


def admissible_vertices(g: Graph, kb: KnowledgeBase) -> dict[int, Tri]:
    return {v: vertex_admissible(g, v, kb).value for v in g.vertices}


# --- neighbour-split configuration -----------------------------------------------


@dataclass(frozen=True)
class ConfigResult:
    satisfied: bool
    witness: tuple[int, ...] | None = None
    failed: str = ""
    detail: str = ""


def check_lemma_24(g: Graph, q: int, pi1, pi2, kb: KnowledgeBase) -> ConfigResult:
    """Check the split-neighbourhood configuration at q; witness is (v, s, w)."""
    _check_vertex(g, q)
    pi1, pi2 = frozenset(pi1), frozenset(pi2)
    nbrs = frozenset(g.neighbors(q))
    if not pi1 or not pi2 or pi1 & pi2 or pi1 | pi2 != nbrs:
        raise PreconditionError(
            f"pi1={_vset(pi1)} and pi2={_vset(pi2)} must partition the neighbours {_vset(nbrs)} of p{q}"
        )
    rho = [v for v in g.vertices if v != q and v not in nbrs]
    if not rho:
        raise PreconditionError(f"every other vertex is adjacent to p{q}; rho is empty")
    if not satisfies_palfy(g):
        return ConfigResult(False, failed="palfy", detail="graph violates Pálfy's condition")
    for a in sorted(pi1):
        for b in sorted(pi2):
            if g.has_edge(a, b):
                return ConfigResult(False, failed="non_adjacent",
                                    detail=f"p{a} in pi1 is adjacent to p{b} in pi2")
    adm = {s: vertex_admissible(g, s, kb).value for s in rho}
    pending = []
    for v in sorted(pi2):
        for s in rho:
            if not g.has_edge(v, s):
                continue
            if adm[s] is not Tri.YES:
                if adm[s] is Tri.UNKNOWN:
                    pending.append(s)
                continue
            for w in rho:
                if w != s and not g.has_edge(v, w):
                    return ConfigResult(True, (v, s, w))
    detail = "no v in pi2 with an admissible neighbour s in rho and a non-neighbour w in rho"
    if pending:
        detail += f"; admissibility unknown for {_vset(set(pending))}"
    return ConfigResult(False, failed="admissible_neighbor", detail=detail)


# --- five-condition hypothesis --------------------------------------------------


class Cond(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ConditionResult:
    status: Cond
    detail: str = ""
    evidence: tuple[Evidence, ...] = ()


@dataclass(frozen=True)
class CliqueCase:
    pi_star: tuple[int, ...]
    rho_star: tuple[int, ...]
    tau: tuple[int, ...]

    def label(self) -> str:
        return f"{_vset(self.pi_star)} u {_vset(self.rho_star)}, tau={_vset(self.tau)}"


@dataclass(frozen=True)
class Hypothesis28Report:
    p: int
    pi: tuple[int, ...]
    rho: tuple[int, ...]
    conditions: dict[str, ConditionResult]
    clique_cases: tuple[CliqueCase, ...] = field(default=())

    @property
    def all_hold(self) -> bool:
        return all(c.status is Cond.HOLDS for c in self.conditions.values())

    def lines(self) -> list[str]:
        return [f"({name}) {c.status.value}" + (f": {c.detail}" if c.detail else "")
                for name, c in self.conditions.items()]


def _combine(results: list[ConditionResult], ok_detail: str) -> ConditionResult:
    for r in results:
        if r.status is Cond.FAILS:
            return r
    unknown = [r for r in results if r.status is Cond.UNKNOWN]
    if unknown:
        return ConditionResult(Cond.UNKNOWN, "; ".join(r.detail for r in unknown),
                               tuple(e for r in unknown for e in r.evidence))
    return ConditionResult(Cond.HOLDS, ok_detail)


def connected_proper_subgraphs(g: Graph, keep) -> list[tuple[str, Graph]]:
    """Connected subgraphs with vertex set ``keep`` that are proper subgraphs of g.

    Vertices are relabelled 1..|keep| in increasing order.  When ``keep`` is all of
    g, at least one edge must be removed.
    """
    keep = sorted(keep)
    h = induced_subgraph(g, keep)
    back = dict(enumerate(keep, start=1))
    edges = h.sorted_edges()
    whole = len(keep) == g.n
    out = []
    for mask in range(1 << len(edges)):
        removed = [e for i, e in enumerate(edges) if mask >> i & 1]
        if whole and not removed:
            continue
        sub = graph_from_edge_list(h.n, [e for i, e in enumerate(edges) if not mask >> i & 1])
        if is_connected(sub):
            op = f"on {_vset(keep)}"
            if removed:
                op += " without " + _eset((back[u], back[v]) for u, v in removed)
            out.append((op, sub))
    return out


def _no_connected_subgraph_occurs(g: Graph, keep, clf: Classifier) -> ConditionResult:
    checks = [Evidence(op, h, clf.verdict(h)) for op, h in connected_proper_subgraphs(g, keep)]
    d = _decide(checks)
    if d.value is Tri.NO:
        return ConditionResult(Cond.FAILS, f"{d.evidence[0].operation} occurs", d.evidence)
    if d.value is Tri.UNKNOWN:
        return ConditionResult(Cond.UNKNOWN, f"{len(d.evidence)} subgraph(s) on {_vset(keep)} unresolved",
                               d.evidence)
    return ConditionResult(Cond.HOLDS, "")


def _admissible_all(g: Graph, vs, kb: KnowledgeBase) -> ConditionResult:
    results = []
    for v in sorted(vs):
        t = vertex_admissible(g, v, kb)
        if t.value is Tri.NO:
            results.append(ConditionResult(Cond.FAILS, f"p{v} is not admissible ({t.evidence[0].operation} occurs)",
                                           t.evidence))
        elif t.value is Tri.UNKNOWN:
            results.append(ConditionResult(Cond.UNKNOWN, f"admissibility of p{v} unknown", t.evidence))
    return _combine(results, "")


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques by exhaustive subset scan (n <= 8)."""
    cliques = []
    for mask in range(1, 1 << g.n):
        vs = [v for v in g.vertices if mask >> (v - 1) & 1]
        if is_clique(g, vs):
            cliques.append(frozenset(vs))
    return [c for c in cliques if not any(c < d for d in cliques)]


def clique_cases(g: Graph, pi, rho) -> list[CliqueCase]:
    """Every clique pi* u rho* with both parts nonempty, with its tau set."""
    cliques = maximal_cliques(g)
    out = []
    for ps in _nonempty_subsets(sorted(pi)):
        for rs in _nonempty_subsets(sorted(rho)):
            base = frozenset(ps) | frozenset(rs)
            if not is_clique(g, base):
                continue
            big = frozenset().union(*(c for c in cliques if base <= c))
            out.append(CliqueCase(ps, rs, tuple(sorted(big - base))))
    return out


def _condition_v(g: Graph, clf: Classifier) -> ConditionResult:
    verts = list(g.vertices)
    results = []
    notes = []
    seen = set()
    for r in range(1, g.n):
        for a_side in combinations(verts, r):
            b_side = tuple(v for v in verts if v not in a_side)
            split = frozenset((a_side, b_side))
            if split in seen or not is_clique(g, a_side) or not is_clique(g, b_side):
                continue
            seen.add(split)
            h = delete_edges(g, [(min(u, v), max(u, v)) for u in a_side for v in b_side if g.has_edge(u, v)])
            a, b = sorted((len(a_side), len(b_side)))
            name = f"{_vset(a_side)} | {_vset(b_side)}"
            ev = (Evidence(f"two cliques {name}", h, clf.verdict(h)),)
            if not satisfies_palfy_inequality(a, b):
                notes.append(f"{name} violates the inequality ({b} >= {2**a - 1} fails)")
                continue
            verdict = ev[0].verdict
            if verdict is Verdict.OCCURS:
                if a > 1 and b == 2**a - 1:
                    notes.append(f"{name} occurs with sizes {a}, {b}")
                    continue
                results.append(ConditionResult(Cond.FAILS, f"{name} occurs with sizes {a}, {b}", ev))
            else:
                results.append(ConditionResult(
                    Cond.UNKNOWN, f"{name} is {verdict.value} without violating the inequality", ev))
    if not seen:
        return ConditionResult(Cond.HOLDS, "no spanning two-clique subgraph")
    return _combine(results, "; ".join(notes))


def check_hypothesis_28(g: Graph, p: int, kb: KnowledgeBase) -> Hypothesis28Report:
    _check_vertex(g, p)
    pi = tuple(g.neighbors(p))
    rho = tuple(v for v in g.vertices if v != p and v not in pi)
    if not pi or not rho:
        raise PreconditionError(f"p{p} needs both neighbours and non-neighbours")
    clf = Classifier(kb)
    conds: dict[str, ConditionResult] = {}

    bad = [r for r in rho if all(g.has_edge(r, x) for x in pi)]
    conds["i"] = (ConditionResult(Cond.FAILS, f"p{bad[0]} is adjacent to all of pi") if bad
                  else ConditionResult(Cond.HOLDS, ""))
    bad = [x for x in pi if all(g.has_edge(x, r) for r in rho)]
    conds["ii"] = (ConditionResult(Cond.FAILS, f"p{bad[0]} is adjacent to all of rho") if bad
                   else ConditionResult(Cond.HOLDS, ""))

    parts = [_admissible_all(g, pi, kb)]
    for ps in _nonempty_subsets(list(pi)):
        parts.append(_no_connected_subgraph_occurs(g, {p, *ps, *rho}, clf))
    conds["iii"] = _combine(parts, f"pi={_vset(pi)} admissible; no connected subgraph occurs")

    cases = clique_cases(g, pi, rho)
    parts = []
    for case in cases:
        if not case.tau:
            continue
        parts.append(_admissible_all(g, case.tau, kb))
        for ts in _nonempty_subsets(list(case.tau)):
            parts.append(_no_connected_subgraph_occurs(g, set(g.vertices) - set(ts), clf))
    conds["iv"] = _combine(parts, f"{len(cases)} clique case(s): " + "; ".join(c.label() for c in cases))

    conds["v"] = _condition_v(g, clf)
    return Hypothesis28Report(p, pi, rho, conds, tuple(cases))


# --- four-vertex configuration --------------------------------------------------


@dataclass(frozen=True)
class Lemma27Result:
    witness: tuple[int, int, int, int] | None
    admissible: tuple[int, ...]
    unknown: tuple[int, ...]


def check_lemma_27(g: Graph, kb: KnowledgeBase) -> Lemma27Result:
    """Lexicographically first (a, b, c, d): a ~ c, b !~ c, a !~ d, c and d admissible.

    Vertices whose admissibility is UNKNOWN are never used.
    """
    if g.n < 5:
        raise PreconditionError("needs at least five vertices")
    if not satisfies_palfy(g):
        raise PreconditionError("graph violates Pálfy's condition")
    status = admissible_vertices(g, kb)
    adm = tuple(v for v, t in status.items() if t is Tri.YES)
    unknown = tuple(v for v, t in status.items() if t is Tri.UNKNOWN)
    for a in g.vertices:
        for b in g.vertices:
            if b == a:
                continue
            for c in adm:
                if c in (a, b) or not g.has_edge(a, c) or g.has_edge(b, c):
                    continue
                for d in adm:
                    if d not in (a, b, c) and not g.has_edge(a, d):
                        return Lemma27Result((a, b, c, d), adm, unknown)
    return Lemma27Result(None, adm, unknown)
