import json
import threading

import pytest

from cdg.canonical import CanonicalKey, canonical_form
from cdg.classifier import classify
from cdg.enumerate import enumerate_graphs
from cdg.fixtures import BOWTIE, LEWIS_FIVE_VERTEX, fixture
from cdg.graph import complete_graph, graph_from_edge_list, path_graph
from cdg.kb import (
    KBDuplicateKeyError,
    KBFormatError,
    KBInvariantError,
    KnowledgeBase,
    format_record_line,
    kb_dumps,
    kb_load,
    kb_loads,
    kb_lookup,
    kb_seed,
    kb_store,
    verify_kb,
)
from cdg.records import JoinCertificate, Source, Verdict, VerdictRecord
from cdg.rules import satisfies_palfy
from cdg.verify import elimination_witnesses


def verdict(kb, g):
    rec = kb_lookup(kb, canonical_form(g))
    return rec.verdict if rec else None


def test_seed_examples(kb):
    assert verdict(kb, graph_from_edge_list(4, [(1, 2), (3, 4)])) is Verdict.DOES_NOT_OCCUR
    assert verdict(kb, fixture("FIG1")) is Verdict.OCCURS
    assert verdict(kb, fixture("FIG5_VI")) is Verdict.DOES_NOT_OCCUR
    assert verdict(kb, fixture("FIG7_1")) is Verdict.UNKNOWN
    assert verdict(kb, complete_graph(6)) is None


def test_k6_derived_into_overlay(kb):
    classify(complete_graph(6), kb)
    rec = kb_lookup(kb, canonical_form(complete_graph(6)))
    assert rec.verdict is Verdict.OCCURS
    assert isinstance(rec.certificate, JoinCertificate)
    assert rec.source is Source.DERIVED_BY_CLASSIFIER
    assert canonical_form(complete_graph(6)) not in kb.seed


def test_seed_completeness_below_five(kb):
    for n in range(1, 5):
        for g in enumerate_graphs(n):
            if satisfies_palfy(g):
                rec = kb.seeded(canonical_form(g))
                assert rec is not None and rec.verdict is not Verdict.UNKNOWN
    assert verdict(kb, path_graph(4)) is Verdict.DOES_NOT_OCCUR


def test_seed_contents(kb):
    six = [(k, r) for k, r in kb.seed.items() if k.n == 6]
    assert sum(r.verdict is Verdict.DOES_NOT_OCCUR for _, r in six) == 2
    for name in ("FIG5_I", "FIG5_II", "FIG5_III", "FIG5_IV"):
        assert kb.seeded(canonical_form(fixture(name))) is None
    assert verdict(kb, LEWIS_FIVE_VERTEX) is Verdict.DOES_NOT_OCCUR
    assert verdict(kb, BOWTIE) is Verdict.OCCURS
    five = [r for k, r in kb.seed.items() if k.n == 5]
    assert len(five) == 2


def test_seeded_occurs_never_contradicted_by_rules(kb):
    for k, r in kb.seed.items():
        if r.verdict is Verdict.OCCURS:
            assert elimination_witnesses(k.graph()) == []


def test_seed_verifies_clean(kb):
    assert verify_kb(kb) == []


def test_round_trip(kb, tmp_path):
    path = tmp_path / "seed.kb"
    kb_store(kb, path)
    assert kb_load(path) == kb
    classify(complete_graph(5), kb)
    kb_store(kb, path)
    loaded = kb_load(path)
    assert loaded == kb
    assert canonical_form(complete_graph(5)) in loaded.overlay


def _line(verdict, body, key=None):
    key = key or canonical_form(complete_graph(2)).hex()
    return f"{key} {verdict} {json.dumps(body)}\n"


def test_occurs_without_certificate_rejected():
    text = _line("OCCURS", {"justification": [{"rule": "x", "tag": "CERTIFIES"}], "source": "SEEDED"})
    with pytest.raises(KBInvariantError) as e:
        kb_loads(text)
    assert "certificate" in str(e.value)


def test_duplicate_key_rejected(kb):
    k = canonical_form(complete_graph(2))
    line = format_record_line(k, kb.seeded(k))
    with pytest.raises(KBDuplicateKeyError) as e:
        kb_loads("# header\n" + line + "\n" + line + "\n")
    assert e.value.line == 3


@pytest.mark.parametrize(
    "text, line",
    [
        ("zz OCCURS {}\n", 1),
        ("\n\n0200 OCCURS\n", 3),
        ("0200 OCCURS {not json\n", 1),
        ("0200 MAYBE {}\n", 1),
        ("0200 OCCURS []\n", 1),
    ],
)
def test_malformed_lines_report_line_numbers(text, line):
    with pytest.raises(KBFormatError) as e:
        kb_loads(text)
    assert e.value.line == line


def test_non_canonical_key_rejected():
    # path 1-2-3 has key 0306; 0305 encodes a labelled variant
    assert canonical_form(path_graph(3)).hex() == "0306"
    with pytest.raises(KBInvariantError):
        kb_loads(_line("UNKNOWN", {"justification": []}, key="0305"))


def test_dnf_without_justification_rejected():
    with pytest.raises(KBInvariantError):
        kb_loads(_line("DOES_NOT_OCCUR", {"justification": []}))


def test_verify_flags_bad_certificates():
    from cdg.records import FieldCertificate

    k = canonical_form(graph_from_edge_list(6, [(2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]))
    fake = VerdictRecord(Verdict.OCCURS, FieldCertificate(2, 35, (1, 5, 7, 35, 34359738367)), (), Source.SEEDED)
    kb = KnowledgeBase({k: fake})
    problems = verify_kb(kb)
    assert problems and problems[0][0] == k.hex()


def test_overlay_first_writer_wins():
    kb = KnowledgeBase()
    k = canonical_form(complete_graph(3))
    recs = [VerdictRecord(Verdict.UNKNOWN, justification=()) for _ in range(8)]
    stored = []

    def write(r):
        stored.append(kb.publish(k, r))

    threads = [threading.Thread(target=write, args=(r,)) for r in recs]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(s is stored[0] for s in stored)
    assert len(kb) == 1


def test_seed_is_read_only(kb):
    k = canonical_form(complete_graph(1))
    with pytest.raises(TypeError):
        kb.seed[k] = None
    other = VerdictRecord(Verdict.UNKNOWN)
    assert kb.publish(k, other) is kb.seeded(k)


def test_dump_is_deterministic(kb):
    assert kb_dumps(kb) == kb_dumps(kb_seed())
    assert isinstance(CanonicalKey.from_hex(kb_dumps(kb).splitlines()[1].split()[0]), CanonicalKey)
