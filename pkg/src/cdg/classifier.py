"""The verdict engine.

Rule order: seeded lookup, then the disconnected branch (shape rules, field
construction), then every elimination rule for connected graphs, then joins, and
UNKNOWN when nothing applies.  Records for non-canonical inputs are recomputed in the
input's own labels so witnesses read naturally; the overlay always holds the record
for the canonical representative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .canonical import CanonicalKey, canonical_form
from .constructions import factorization_lines, search_field_certificate
from .enumerate import enumerate_graphs
from .errors import PreconditionError
from .graph import Graph, diameter, format_cdg1, induced_subgraph, is_connected
from .kb import KnowledgeBase
from .records import (
    FieldCertificate,
    JoinCertificate,
    JoinFactor,
    LiteratureCertificate,
    Source,
    Step,
    Verdict,
    VerdictRecord,
)
from .rules import (
    CITE_BISSLER,
    CITE_ODD_CYCLE,
    DISCONNECTED_SHAPE,
    JOIN,
    BISSLER_FAMILY,
    ODD_CYCLE,
    RuleWitness,
    Status,
    bissler_family,
    complement_odd_cycle,
    diameter_three_rule,
    disconnected_shape,
    join_parts,
    satisfies_palfy,
)

FIELD = "field"
UNRESOLVED = "unresolved"


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first], *part]
        for i in range(len(part)):
            yield [*part[:i], [first, *part[i]], *part[i + 1:]]


def groupings(k: int) -> list[list[list[int]]]:
    """Partitions of k join factors into at least two blocks, finest first."""
    out = [sorted(sorted(b) for b in p) for p in _set_partitions(list(range(k)))]
    out = [p for p in out if len(p) >= 2]
    out.sort(key=lambda p: (-len(p), p))
    return out


def _disconnected(g: Graph) -> VerdictRecord:
    o = disconnected_shape(g)
    if o.status is Status.ELIMINATES:
        step = Step(DISCONNECTED_SHAPE, Status.ELIMINATES, o.witness, text=o.citation)
        return VerdictRecord(Verdict.DOES_NOT_OCCUR, None, (step,))
    a, b = o.extra["sizes"]
    first = Step(DISCONNECTED_SHAPE, Status.INCONCLUSIVE,
                 text=f"two complete components of sizes {a} and {b}; {b} >= {2**a - 1} holds")
    cert = search_field_certificate(a, b)
    if cert is None:
        last = Step(FIELD, Status.INCONCLUSIVE, text=f"no field construction found for K{a} + K{b}")
        return VerdictRecord(Verdict.UNKNOWN, None, (first, last))
    last = Step(FIELD, Status.CERTIFIES, certificate=cert,
                text=f"semilinear group on the field of order {cert.q}^{cert.n}")
    return VerdictRecord(Verdict.OCCURS, cert, (first, last))


def _eliminations(g: Graph) -> tuple[list[Step], Step | None]:
    """All elimination steps, plus a certifying diameter-three step if there is one."""
    steps = []
    certify = None
    w = complement_odd_cycle(g)
    if w is not None:
        steps.append(Step(ODD_CYCLE, Status.ELIMINATES, w, text=CITE_ODD_CYCLE))
    o = diameter_three_rule(g)
    if o.status is Status.ELIMINATES:
        steps.append(Step(o.rule, Status.ELIMINATES, o.witness, text=o.citation))
    elif o.status is Status.CERTIFIES:
        certify = Step(o.rule, Status.CERTIFIES, o.witness, LiteratureCertificate(o.citation),
                       text=o.citation)
    w = bissler_family(g)
    if w is not None:
        steps.append(Step(BISSLER_FAMILY, Status.ELIMINATES, w, text=CITE_BISSLER))
    return steps, certify


class Classifier:
    """Classifies graphs against a knowledge base, memoizing into its overlay."""

    def __init__(self, kb: KnowledgeBase):
        self.kb = kb

    def classify(self, g: Graph) -> VerdictRecord:
        key = canonical_form(g)
        seeded = self.kb.seeded(key)
        if seeded is not None:
            return seeded
        canon = key.graph()
        stored = self.kb.lookup(key)
        if stored is not None and g == canon:
            return stored
        rec = self._derive(g)
        if stored is None:
            self.kb.publish(key, rec if g == canon else self._derive(canon))
        return rec

    def _factor(self, g: Graph) -> tuple[CanonicalKey, VerdictRecord]:
        key = canonical_form(g)
        rec = self.kb.lookup(key)
        if rec is None:
            self.classify(key.graph())
            rec = self.kb.lookup(key)
        return key, rec

    def verdict(self, g: Graph) -> Verdict:
        """Verdict only; skips re-deriving a trace in g's own labels."""
        return self._factor(g)[1].verdict

    def _join(self, g: Graph, parts: list[frozenset[int]]) -> tuple[list[Step], JoinCertificate | None]:
        finest = RuleWitness(JOIN, "factors", tuple(len(p) for p in parts),
                             tuple(tuple(sorted(p)) for p in parts))
        steps = []
        for grouping in groupings(len(parts)):
            blocks = [frozenset().union(*(parts[i] for i in b)) for b in grouping]
            factors = [self._factor(induced_subgraph(g, b)) for b in blocks]
            bad = [(b, r.verdict) for b, (_, r) in zip(blocks, factors) if r.verdict is not Verdict.OCCURS]
            if not bad:
                w = RuleWitness(JOIN, "factors", tuple(len(b) for b in blocks),
                                tuple(tuple(sorted(b)) for b in blocks))
                cert = JoinCertificate(tuple(JoinFactor(k, r) for k, r in factors))
                text = "every factor occurs; a direct product realises the join"
                steps.append(Step(JOIN, Status.CERTIFIES, w, cert, text))
                return steps, cert
            if not steps:
                why = ", ".join(
                    "{" + ",".join(f"p{x}" for x in sorted(b)) + "} " + v.value for b, v in bad
                )
                steps.append(Step(JOIN, Status.INCONCLUSIVE, finest,
                                  text=f"finest factors do not all occur: {why}"))
        if steps:
            steps[0] = Step(JOIN, Status.INCONCLUSIVE, finest, text=steps[0].text + "; no regrouping occurs")
        return steps, None

    def _derive(self, g: Graph) -> VerdictRecord:
        if not is_connected(g):
            return _disconnected(g)
        elims, certify = _eliminations(g)
        if elims:
            return VerdictRecord(Verdict.DOES_NOT_OCCUR, None, tuple(elims))
        if certify is not None:
            return VerdictRecord(Verdict.OCCURS, certify.certificate, (certify,))
        steps: list[Step] = []
        parts = join_parts(g)
        if parts is not None:
            join_steps, cert = self._join(g, parts)
            steps.extend(join_steps)
            if cert is not None:
                return VerdictRecord(Verdict.OCCURS, cert, tuple(steps))
        steps.append(Step(UNRESOLVED, Status.INCONCLUSIVE, text="no rule or construction applies"))
        return VerdictRecord(Verdict.UNKNOWN, None, tuple(steps))


def classify(g: Graph, kb: KnowledgeBase) -> VerdictRecord:
    return Classifier(kb).classify(g)


# --- reports ---------------------------------------------------------------------


@dataclass
class ClassificationReport:
    n: int
    totals: dict[str, int]
    pipeline_counts: dict[str, int]
    per_graph: list[tuple[CanonicalKey, VerdictRecord]] = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pipeline_counts": dict(self.pipeline_counts),
            "totals": dict(self.totals),
            "per_graph": [graph_entry(k.graph(), k, r) for k, r in self.per_graph],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    def verdict_of(self, key: CanonicalKey) -> Verdict:
        return dict(self.per_graph)[key].verdict


def graph_entry(g: Graph, key: CanonicalKey, rec: VerdictRecord) -> dict:
    d: dict = {
        "key": key.hex(),
        "cdg1": format_cdg1(g, single_line=True),
        "verdict": rec.verdict.value,
        "source": rec.source.value,
    }
    if rec.certificate is not None:
        d["certificate"] = rec.certificate.to_dict()
    d["justification"] = [s.to_dict() for s in rec.justification]
    return d


PIPELINE_KEYS = (
    "connected",
    "palfy",
    "diameter_three",
    "post_diameter",
    "joins",
    "eliminated",
    "unknown",
    "occurs_connected",
    "occurs_disconnected",
    "does_not_occur_disconnected",
    "unknown_disconnected",
)


def _pipeline(entries: list[tuple[Graph, VerdictRecord]]) -> dict[str, int]:
    c = dict.fromkeys(PIPELINE_KEYS, 0)
    for g, rec in entries:
        if not is_connected(g):
            name = {
                Verdict.OCCURS: "occurs_disconnected",
                Verdict.DOES_NOT_OCCUR: "does_not_occur_disconnected",
                Verdict.UNKNOWN: "unknown_disconnected",
            }[rec.verdict]
            c[name] += 1
            continue
        c["connected"] += 1
        if rec.verdict is Verdict.OCCURS:
            c["occurs_connected"] += 1
        if not satisfies_palfy(g):
            continue
        c["palfy"] += 1
        if diameter(g) == 3:
            c["diameter_three"] += 1
            continue
        c["post_diameter"] += 1
        if isinstance(rec.certificate, JoinCertificate):
            c["joins"] += 1
        elif rec.verdict is Verdict.DOES_NOT_OCCUR:
            c["eliminated"] += 1
        elif rec.verdict is Verdict.UNKNOWN:
            c["unknown"] += 1
    return c


def classify_all(n: int, kb: KnowledgeBase) -> ClassificationReport:
    """Classify every graph on n vertices (1 <= n <= 7)."""
    if not isinstance(n, int) or not 1 <= n <= 7:
        raise PreconditionError(f"classify_all needs 1 <= n <= 7, got {n!r}")
    clf = Classifier(kb)
    per_graph = []
    entries = []
    for g in enumerate_graphs(n):
        rec = clf.classify(g)
        per_graph.append((canonical_form(g), rec))
        entries.append((g, rec))
    totals = {v.value: 0 for v in Verdict}
    for _, rec in per_graph:
        totals[rec.verdict.value] += 1
    return ClassificationReport(n, totals, _pipeline(entries), per_graph)


# --- rendering -------------------------------------------------------------------


def _certificate_lines(cert, indent: str = "  ") -> list[str]:
    if isinstance(cert, LiteratureCertificate):
        return [f"{indent}literature: {cert.citation}"]
    if isinstance(cert, FieldCertificate):
        lines = [f"{indent}field q={cert.q} n={cert.n} degrees {{{', '.join(map(str, cert.degrees))}}}"
                 f" ({cert.provenance})"]
        lines += [f"{indent}  {ln}" for ln in factorization_lines(cert)]
        return lines
    if isinstance(cert, JoinCertificate):
        lines = [f"{indent}join of {len(cert.factors)} factors"]
        for f in cert.factors:
            h = f.key.graph()
            lines.append(f"{indent}  factor {f.key.hex()} ({format_cdg1(h, single_line=True)}): "
                         f"{f.record.verdict.value}")
        return lines
    return []


def render(g: Graph, rec: VerdictRecord) -> str:
    """Deterministic text rendering of a verdict and its trace."""
    key = canonical_form(g)
    lines = [
        f"graph: {format_cdg1(g, single_line=True)}",
        f"key: {key.hex()}",
        f"verdict: {rec.verdict.value} ({rec.source.value})",
    ]
    for i, s in enumerate(rec.justification, start=1):
        head = f"{i}. [{s.tag.value}] {s.rule}"
        if s.witness is not None:
            head += f": {s.witness.describe()}"
        lines.append(head)
        if s.text:
            lines.append(f"   {s.text}")
        if s.certificate is not None:
            lines.extend(_certificate_lines(s.certificate, "   "))
    if rec.certificate is not None and not any(s.certificate is rec.certificate for s in rec.justification):
        lines.append("certificate:")
        lines.extend(_certificate_lines(rec.certificate))
    return "\n".join(lines) + "\n"


def explain(g: Graph, kb: KnowledgeBase) -> str:
    return render(g, classify(g, kb))
