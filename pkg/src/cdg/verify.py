"""Independent re-checking of verdict records against their graphs."""

from __future__ import annotations

from .canonical import is_isomorphic
from .constructions import join_graphs, validate_field_certificate
from .graph import Graph, is_connected
from .records import FieldCertificate, JoinCertificate, VerdictRecord
from .rules import (
    RuleWitness,
    Status,
    bissler_family,
    complement_odd_cycle,
    diameter_three_rule,
    disconnected_shape,
    replay,
)


def validate_certificate(g: Graph, cert) -> list[str]:
    if isinstance(cert, FieldCertificate):
        return validate_field_certificate(cert, g)
    if isinstance(cert, JoinCertificate):
        if len(cert.factors) < 2:
            return ["join certificate needs at least two factors"]
        graphs = [f.key.graph() for f in cert.factors]
        if sum(h.n for h in graphs) != g.n:
            return ["join factor sizes do not add up to the vertex count"]
        out = []
        if not is_isomorphic(join_graphs(graphs), g):
            out.append("join of the factors is not isomorphic to the graph")
        for f, h in zip(cert.factors, graphs):
            out.extend(f"factor {f.key.hex()}: {p}" for p in validate_record(h, f.record))
        return out
    return []


def validate_record(g: Graph, rec: VerdictRecord) -> list[str]:
    """Record invariants, certificate validity and witness replay, as problem strings."""
    out = list(rec.problems())
    if rec.certificate is not None:
        out.extend(validate_certificate(g, rec.certificate))
    for i, step in enumerate(rec.justification):
        if step.witness is not None and not replay(g, step.witness):
            out.append(f"step {i + 1} ({step.rule}): witness does not replay")
        if step.certificate is not None and step.certificate is not rec.certificate:
            out.extend(f"step {i + 1}: {p}" for p in validate_certificate(g, step.certificate))
    return out


def elimination_witnesses(g: Graph) -> list[RuleWitness]:
    """Witnesses from every mechanical rule that eliminates ``g``."""
    out = []
    if not is_connected(g):
        o = disconnected_shape(g)
        if o.status is Status.ELIMINATES:
            out.append(o.witness)
        return out
    w = complement_odd_cycle(g)
    if w:
        out.append(w)
    o = diameter_three_rule(g)
    if o.status is Status.ELIMINATES:
        out.append(o.witness)
    w = bissler_family(g)
    if w:
        out.append(w)
    return out
