import pytest
import math

from hypothesis import assume, given, settings, strategies as st

from cdg.canonical import is_isomorphic
from cdg.constructions import (
    DegreeSet,
    NoPrimesError,
    degree_set_to_graph,
    factorization_lines,
    field_construction_degrees,
    join_graphs,
    search_field_certificate,
    two_cliques,
    validate_field_certificate,
)
from cdg.errors import GraphInputError, PreconditionError
from cdg.graph import (
    complete_graph,
    connected_components,
    empty_graph,
    graph_from_edge_list,
    is_clique,
)
from cdg.numtheory import U64_LIMIT, divisors, first_primes
from cdg.records import FieldCertificate
from oracles import field_graph_by_hand
from strategies import graphs


def test_join_examples():
    assert join_graphs([complete_graph(1), complete_graph(5)]) == complete_graph(6)
    k2 = complete_graph(2)
    c4c = graph_from_edge_list(4, [(1, 3), (2, 4)])  # complement of a 4-cycle
    j = join_graphs([k2, c4c])
    assert j.num_edges == 1 + 2 + 2 * 4
    assert j.has_edge(1, 3) and j.has_edge(3, 5) and not j.has_edge(3, 4)


def test_join_errors():
    with pytest.raises(PreconditionError):
        join_graphs([complete_graph(3)])
    with pytest.raises(GraphInputError):
        join_graphs([complete_graph(5), complete_graph(4)])


@given(st.lists(graphs(max_n=3), min_size=2, max_size=3))
def test_join_edge_count(fs):
    assume(sum(f.n for f in fs) <= 8)
    j = join_graphs(fs)
    cross = sum(a.n * b.n for i, a in enumerate(fs) for b in fs[i + 1:])
    assert j.num_edges == sum(f.num_edges for f in fs) + cross


def test_field_degrees_examples():
    assert field_construction_degrees(2, 32).degrees == (1, 2, 4, 8, 16, 32, 4294967295)
    assert field_construction_degrees(2, 35).degrees == (1, 5, 7, 35, 34359738367)
    assert field_construction_degrees(2, 2).degrees == (1, 2, 3)
    g, label = degree_set_to_graph(field_construction_degrees(2, 2))
    assert g == empty_graph(2) and label == {2: 1, 3: 2}


def test_field_degrees_errors():
    with pytest.raises(ValueError):
        field_construction_degrees(4, 3)
    with pytest.raises(ValueError):
        field_construction_degrees(2, 1)
    with pytest.raises(OverflowError):
        field_construction_degrees(2, 64)


def test_degree_set_graphs_from_the_field_examples():
    g, label = degree_set_to_graph(field_construction_degrees(2, 32))
    parts = [sorted(p for p, v in label.items() if v in c) for c in connected_components(g)]
    assert parts == [[2], [3, 5, 17, 257, 65537]]
    assert is_isomorphic(g, two_cliques(1, 5))
    g, label = degree_set_to_graph(field_construction_degrees(2, 35))
    parts = [sorted(p for p, v in label.items() if v in c) for c in connected_components(g)]
    assert parts == [[5, 7], [31, 71, 127, 122921]]
    assert is_isomorphic(g, two_cliques(2, 4))


def test_degree_set_graph_against_trial_division():
    for q, n in [(2, 32), (2, 35), (3, 6), (5, 7), (2, 12)]:
        d = field_construction_degrees(q, n)
        g, label = degree_set_to_graph(d)
        primes, edges = field_graph_by_hand(d.degrees)
        assert sorted(label) == primes
        assert {tuple(sorted((label[p], label[r]))) for p, r in edges} == set(g.edges)


def test_no_primes():
    with pytest.raises(NoPrimesError):
        degree_set_to_graph(DegreeSet.of([1]))
    with pytest.raises(ValueError):
        DegreeSet((2, 3))


def test_search_examples():
    c = search_field_certificate(1, 5)
    assert (c.q, c.n) == (2, 32)
    c = search_field_certificate(2, 4)
    # first hit in (q, n) order; validates to K2 + K4 just as (2, 35) does
    assert (c.q, c.n) == (2, 22)
    assert validate_field_certificate(c, two_cliques(2, 4)) == []
    assert validate_field_certificate(
        FieldCertificate(2, 35, field_construction_degrees(2, 35).degrees), two_cliques(2, 4)) == []
    assert search_field_certificate(3, 3) is None
    assert search_field_certificate(2, 7) is None  # nine vertices cannot be represented
    with pytest.raises(PreconditionError):
        search_field_certificate(4, 3)


def test_validate_rejects_tampering():
    c = search_field_certificate(1, 5)
    assert validate_field_certificate(c, two_cliques(2, 4))
    bad = FieldCertificate(2, 32, (1, 2, 4, 8, 16, 4294967295))
    assert validate_field_certificate(bad, two_cliques(1, 5))
    assert validate_field_certificate(FieldCertificate(4, 2, (1, 2, 15)), two_cliques(1, 2))


def test_factorization_lines_multiply_back():
    c = search_field_certificate(1, 5)
    lines = factorization_lines(c)
    assert "4294967295 = 3 * 5 * 17 * 257 * 65537" in lines
    for ln in lines:
        lhs, rhs = ln.split(" = ")
        prod = 1
        for f in rhs.split(" * "):
            prod *= int(f)
        assert prod == int(lhs)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(first_primes(10)), st.integers(2, 64))
def test_field_degree_structure(q, n):
    if q**n >= U64_LIMIT:
        return
    d = field_construction_degrees(q, n)
    assert max(d.degrees) == q**n - 1
    assert sorted(set(d.degrees) - {q**n - 1}) == divisors(n)
    try:
        g, _ = degree_set_to_graph(d)
    except GraphInputError:
        return
    if math.gcd(n, q**n - 1) == 1:
        assert all(is_clique(g, c) for c in connected_components(g))


def test_shared_prime_merges_components():
    # 3 divides both 18 and 2^18 - 1, so the two cliques share a vertex
    g, label = degree_set_to_graph(field_construction_degrees(2, 18))
    assert len(connected_components(g)) == 1
    assert not is_clique(g, g.vertices)
