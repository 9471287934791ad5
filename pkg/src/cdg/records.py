"""Verdicts, certificates and justification traces, with their JSON encodings."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .canonical import CanonicalKey
from .rules import RuleWitness, Status


class Verdict(str, Enum):
    OCCURS = "OCCURS"
    DOES_NOT_OCCUR = "DOES_NOT_OCCUR"
    UNKNOWN = "UNKNOWN"


class Source(str, Enum):
    SEEDED = "SEEDED"
    DERIVED_BY_CLASSIFIER = "DERIVED_BY_CLASSIFIER"


@dataclass(frozen=True)
class LiteratureCertificate:
    citation: str

    def to_dict(self) -> dict:
        return {"type": "LITERATURE", "citation": self.citation}


@dataclass(frozen=True)
class FieldCertificate:
    """Degree set of the semilinear group on a field of order q**n.

    The degree formula ``divisors(n) + {q**n - 1}`` is extrapolated from two worked
    instances, hence ``provenance == "INFERRED"``; validity is always re-checked
    by regenerating the graph.
    """

    q: int
    n: int
    degrees: tuple[int, ...]
    provenance: str = "INFERRED"

    def to_dict(self) -> dict:
        return {
            "type": "FIELD",
            "q": self.q,
            "n": self.n,
            "degrees": list(self.degrees),
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class JoinFactor:
    key: CanonicalKey
    record: "VerdictRecord"


@dataclass(frozen=True)
class JoinCertificate:
    factors: tuple[JoinFactor, ...]

    def to_dict(self) -> dict:
        return {
            "type": "JOIN",
            "factors": [{"key": f.key.hex(), "record": f.record.to_dict()} for f in self.factors],
        }


Certificate = Union[LiteratureCertificate, FieldCertificate, JoinCertificate]


def certificate_from_dict(d: dict) -> Certificate:
    kind = d["type"]
    if kind == "LITERATURE":
        return LiteratureCertificate(d["citation"])
    if kind == "FIELD":
        return FieldCertificate(d["q"], d["n"], tuple(d["degrees"]), d.get("provenance", "INFERRED"))
    if kind == "JOIN":
        return JoinCertificate(
            tuple(
                JoinFactor(CanonicalKey.from_hex(f["key"]), VerdictRecord.from_dict(f["record"]))
                for f in d["factors"]
            )
        )
    raise ValueError(f"unknown certificate type {kind!r}")


@dataclass(frozen=True)
class Step:
    rule: str
    tag: Status
    witness: RuleWitness | None = None
    certificate: Certificate | None = None
    text: str = ""

    def to_dict(self) -> dict:
        d: dict = {"rule": self.rule, "tag": self.tag.value}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.certificate is not None:
            d["certificate"] = self.certificate.to_dict()
        if self.text:
            d["text"] = self.text
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Step":
        return cls(
            d["rule"],
            Status(d["tag"]),
            RuleWitness.from_dict(d["witness"]) if "witness" in d else None,
            certificate_from_dict(d["certificate"]) if "certificate" in d else None,
            d.get("text", ""),
        )


_FINAL_TAG = {
    Verdict.OCCURS: Status.CERTIFIES,
    Verdict.DOES_NOT_OCCUR: Status.ELIMINATES,
}


@dataclass(frozen=True)
class VerdictRecord:
    verdict: Verdict
    certificate: Certificate | None = None
    justification: tuple[Step, ...] = ()
    source: Source = Source.DERIVED_BY_CLASSIFIER

    def problems(self) -> list[str]:
        """Record-level invariant violations (empty when the record is well formed)."""
        out = []
        if self.verdict is Verdict.OCCURS and self.certificate is None:
            out.append("OCCURS without a certificate")
        if self.verdict is Verdict.DOES_NOT_OCCUR and not self.justification:
            out.append("DOES_NOT_OCCUR without a justification")
        want = _FINAL_TAG.get(self.verdict)
        if want is not None and self.justification and self.justification[-1].tag is not want:
            out.append(f"final step is {self.justification[-1].tag.value}, expected {want.value}")
        if isinstance(self.certificate, JoinCertificate):
            for f in self.certificate.factors:
                if f.record.verdict is not Verdict.OCCURS:
                    out.append(f"join factor {f.key.hex()} is {f.record.verdict.value}")
                out.extend(f"factor {f.key.hex()}: {p}" for p in f.record.problems())
        return out

    def with_source(self, source: Source) -> "VerdictRecord":
        return VerdictRecord(self.verdict, self.certificate, self.justification, source)

    def to_dict(self) -> dict:
        d: dict = {"verdict": self.verdict.value, "source": self.source.value}
        if self.certificate is not None:
            d["certificate"] = self.certificate.to_dict()
        d["justification"] = [s.to_dict() for s in self.justification]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerdictRecord":
        return cls(
            Verdict(d["verdict"]),
            certificate_from_dict(d["certificate"]) if d.get("certificate") else None,
            tuple(Step.from_dict(s) for s in d.get("justification", ())),
            Source(d.get("source", Source.DERIVED_BY_CLASSIFIER.value)),
        )
