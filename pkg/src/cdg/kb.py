"""Knowledge base of verdicts keyed by canonical form.

Seeded literature facts are read-only; verdicts derived by the classifier go into a
separate overlay, so a rerun from the seed alone reproduces them.  File format is one
record per line::

    <canonical-key-hex> <verdict> <json>

where the JSON object holds the certificate, justification and source.  Blank lines
and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .canonical import CanonicalKey, canonical_form
from .errors import CDGError
from .fixtures import BOWTIE, LEWIS_FIVE_VERTEX, fixture
from .graph import Graph, graph_from_edge_list, path_graph
from .records import LiteratureCertificate, Source, Step, Verdict, VerdictRecord
from .rules import Status, satisfies_palfy

KB_ENV = "CDG_KB"

CITE_SMALL = "[huppert2] every graph on at most three vertices satisfying Pálfy's condition occurs"
CITE_FOUR = "[palfy2], [zhang] four-vertex graphs satisfying Pálfy's condition occur except two"
CITE_2K2 = "[palfy2] two components of size two violate b >= 2^a - 1"
CITE_P4 = "[zhang] the four-vertex path has diameter three and does not occur"
CITE_LEWIS5 = "[lewis] five-vertex non-occurrence used for the six-vertex graph (v)"
CITE_BOWTIE = "[lewis] five-vertex classification: two triangles sharing a vertex occur"
CITE_FIG5_V = "six-vertex graph (v): every relevant vertex strongly admissible, no solvable group"
CITE_FIG5_VI = "[laubacher], [Paolo] six-vertex graph (vi): every vertex admissible"
CITE_FIG1 = "[lewis4], [sassy] the six-vertex diameter-three graph occurs"
CITE_OPEN = "open: no known solvable group and no known obstruction"


class KBError(CDGError):
    pass


class KBFormatError(KBError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class KBInvariantError(KBError):
    def __init__(self, key: str, reason: str):
        super().__init__(f"{key}: {reason}")
        self.key = key
        self.reason = reason


class KBDuplicateKeyError(KBError):
    def __init__(self, key: str, line: int):
        super().__init__(f"line {line}: duplicate key {key}")
        self.key = key
        self.line = line


class KnowledgeBase:
    """Read-only seed layer plus a single-writer overlay (first writer wins)."""

    def __init__(self, seed: Mapping[CanonicalKey, VerdictRecord] | None = None,
                 overlay: Mapping[CanonicalKey, VerdictRecord] | None = None):
        self._seed = MappingProxyType(dict(seed or {}))
        self._overlay: dict[CanonicalKey, VerdictRecord] = dict(overlay or {})
        self._lock = threading.Lock()

    @property
    def seed(self) -> Mapping[CanonicalKey, VerdictRecord]:
        return self._seed

    @property
    def overlay(self) -> Mapping[CanonicalKey, VerdictRecord]:
        with self._lock:
            return MappingProxyType(dict(self._overlay))

    def lookup(self, key: CanonicalKey) -> VerdictRecord | None:
        rec = self._seed.get(key)
        if rec is not None:
            return rec
        return self._overlay.get(key)

    def seeded(self, key: CanonicalKey) -> VerdictRecord | None:
        return self._seed.get(key)

    def publish(self, key: CanonicalKey, record: VerdictRecord) -> VerdictRecord:
        """Store a derived record unless one is already present; return the stored one."""
        if key in self._seed:
            return self._seed[key]
        with self._lock:
            return self._overlay.setdefault(key, record)

    def fresh(self) -> "KnowledgeBase":
        """Same seed, empty overlay."""
        return KnowledgeBase(self._seed)

    def extended(self, extra: Mapping[CanonicalKey, VerdictRecord]) -> "KnowledgeBase":
        """A new KB whose seed also holds ``extra`` (existing seeds win)."""
        merged = dict(extra)
        merged.update(self._seed)
        return KnowledgeBase(merged)

    def items(self) -> Iterator[tuple[CanonicalKey, VerdictRecord]]:
        """Every entry, seed and overlay, in key order."""
        with self._lock:
            merged = {**self._overlay, **self._seed}
        for k in sorted(merged):
            yield k, merged[k]

    def __len__(self) -> int:
        with self._lock:
            return len(self._seed.keys() | self._overlay.keys())

    def __contains__(self, key: object) -> bool:
        return key in self._seed or key in self._overlay

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return dict(self._seed) == dict(other._seed) and dict(self.overlay) == dict(other.overlay)

    def __repr__(self) -> str:
        return f"KnowledgeBase(seed={len(self._seed)}, overlay={len(self._overlay)})"


def _literature(verdict: Verdict, citation: str) -> VerdictRecord:
    if verdict is Verdict.OCCURS:
        return VerdictRecord(verdict, LiteratureCertificate(citation),
                             (Step("literature", Status.CERTIFIES, text=citation),), Source.SEEDED)
    if verdict is Verdict.DOES_NOT_OCCUR:
        return VerdictRecord(verdict, None,
                             (Step("literature", Status.ELIMINATES, text=citation),), Source.SEEDED)
    return VerdictRecord(verdict, None,
                         (Step("literature", Status.INCONCLUSIVE, text=citation),), Source.SEEDED)


def _small_palfy_graphs(n: int) -> list[Graph]:
    from .enumerate import enumerate_graphs

    return [g for g in enumerate_graphs(n) if satisfies_palfy(g)]


def kb_seed() -> KnowledgeBase:
    """The literature facts the classifier cannot derive by itself."""
    entries: dict[CanonicalKey, VerdictRecord] = {}

    def put(g: Graph, verdict: Verdict, citation: str) -> None:
        entries[canonical_form(g)] = _literature(verdict, citation)

    for n in (1, 2, 3):
        for g in _small_palfy_graphs(n):
            put(g, Verdict.OCCURS, CITE_SMALL)
    two_k2 = canonical_form(graph_from_edge_list(4, [(1, 2), (3, 4)]))
    p4 = canonical_form(path_graph(4))
    for g in _small_palfy_graphs(4):
        k = canonical_form(g)
        if k == two_k2:
            put(g, Verdict.DOES_NOT_OCCUR, CITE_2K2)
        elif k == p4:
            put(g, Verdict.DOES_NOT_OCCUR, CITE_P4)
        else:
            put(g, Verdict.OCCURS, CITE_FOUR)
    put(LEWIS_FIVE_VERTEX, Verdict.DOES_NOT_OCCUR, CITE_LEWIS5)
    put(BOWTIE, Verdict.OCCURS, CITE_BOWTIE)
    put(fixture("FIG5_V"), Verdict.DOES_NOT_OCCUR, CITE_FIG5_V)
    put(fixture("FIG5_VI"), Verdict.DOES_NOT_OCCUR, CITE_FIG5_VI)
    put(fixture("FIG1"), Verdict.OCCURS, CITE_FIG1)
    for i in range(1, 10):
        put(fixture(f"FIG7_{i}"), Verdict.UNKNOWN, CITE_OPEN)
    return KnowledgeBase(entries)


def kb_lookup(kb: KnowledgeBase, key: CanonicalKey) -> VerdictRecord | None:
    return kb.lookup(key)


# --- persistence ----------------------------------------------------------------


def format_record_line(key: CanonicalKey, rec: VerdictRecord) -> str:
    body = rec.to_dict()
    del body["verdict"]
    return f"{key.hex()} {rec.verdict.value} {json.dumps(body, sort_keys=True, ensure_ascii=False)}"


def kb_dumps(kb: KnowledgeBase) -> str:
    lines = ["# cdg knowledge base: <canonical-key-hex> <verdict> <json>"]
    lines += [format_record_line(k, r) for k, r in kb.items()]
    return "\n".join(lines) + "\n"


def kb_store(kb: KnowledgeBase, path: str | os.PathLike) -> None:
    Path(path).write_text(kb_dumps(kb), encoding="utf-8")


def key_is_canonical(key: CanonicalKey) -> bool:
    try:
        return canonical_form(key.graph()) == key
    except (CDGError, ValueError):
        return False


def parse_record_line(line: str, lineno: int) -> tuple[CanonicalKey, VerdictRecord]:
    parts = line.split(None, 2)
    if len(parts) != 3:
        raise KBFormatError(lineno, "expected '<key> <verdict> <json>'")
    key_hex, verdict, body = parts
    try:
        key = CanonicalKey.from_hex(key_hex)
    except ValueError as exc:
        raise KBFormatError(lineno, f"bad key {key_hex!r}: {exc}") from None
    if not key_is_canonical(key):
        raise KBInvariantError(key_hex, "key is not a canonical form")
    try:
        d = json.loads(body)
    except json.JSONDecodeError as exc:
        raise KBFormatError(lineno, f"bad JSON: {exc.msg}") from None
    if not isinstance(d, dict):
        raise KBFormatError(lineno, "record JSON must be an object")
    try:
        rec = VerdictRecord.from_dict({**d, "verdict": verdict})
    except (KeyError, ValueError, TypeError) as exc:
        raise KBFormatError(lineno, f"bad record: {exc}") from None
    problems = rec.problems()
    if problems:
        raise KBInvariantError(key_hex, "; ".join(problems))
    return key, rec


def kb_loads(text: str) -> KnowledgeBase:
    seed: dict[CanonicalKey, VerdictRecord] = {}
    overlay: dict[CanonicalKey, VerdictRecord] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, rec = parse_record_line(line, lineno)
        if key in seed or key in overlay:
            raise KBDuplicateKeyError(key.hex(), lineno)
        (seed if rec.source is Source.SEEDED else overlay)[key] = rec
    return KnowledgeBase(seed, overlay)


def kb_load(path: str | os.PathLike) -> KnowledgeBase:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise KBFormatError(0, f"not UTF-8: {exc}") from None
    return kb_loads(text)


def default_kb() -> KnowledgeBase:
    """The KB named by ``$CDG_KB`` if set, else the built-in seed."""
    path = os.environ.get(KB_ENV)
    return kb_load(path) if path else kb_seed()


def verify_kb(kb: KnowledgeBase) -> list[tuple[str, str]]:
    """Every (key, reason) problem: bad keys, record invariants, certificates and
    witnesses that fail to re-check, and seeded OCCURS graphs a rule eliminates."""
    from .verify import elimination_witnesses, validate_record

    out = []
    for key, rec in kb.items():
        if not key_is_canonical(key):
            out.append((key.hex(), "key is not a canonical form"))
            continue
        g = key.graph()
        out.extend((key.hex(), p) for p in validate_record(g, rec))
        if rec.verdict is Verdict.OCCURS:
            for w in elimination_witnesses(g):
                out.append((key.hex(), f"OCCURS contradicted by {w.rule}: {w.describe()}"))
    return out


def seeded_graphs(kb: KnowledgeBase, verdict: Verdict | None = None) -> Iterable[tuple[CanonicalKey, Graph]]:
    for k, r in sorted(kb.seed.items()):
        if verdict is None or r.verdict is verdict:
            yield k, k.graph()

