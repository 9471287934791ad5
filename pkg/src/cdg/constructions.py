"""Occurrence constructions: direct-product joins and field-group degree sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .canonical import is_isomorphic
from .errors import CDGError, GraphInputError, PreconditionError
from .graph import MAX_VERTICES, Graph, complete_graph, disjoint_union, graph_from_edge_list
from .numtheory import U64_LIMIT, divisors, factorize, first_primes, is_prime, prime_support
from .records import FieldCertificate

SEARCH_PRIMES = 10
SEARCH_MAX_EXPONENT = 64


class NoPrimesError(CDGError, ValueError):
    """A degree set with no prime divisors has no graph."""


@dataclass(frozen=True)
class DegreeSet:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if 1 not in self.degrees or any(d < 1 for d in self.degrees):
            raise ValueError(f"a degree set contains 1 and only positive integers: {self.degrees}")
        if list(self.degrees) != sorted(set(self.degrees)):
            object.__setattr__(self, "degrees", tuple(sorted(set(self.degrees))))

    @classmethod
    def of(cls, degrees: Iterable[int]) -> "DegreeSet":
        return cls(tuple(sorted(set(degrees))))

    def __iter__(self):
        return iter(self.degrees)

    def __contains__(self, d: int) -> bool:
        return d in self.degrees


def join_graphs(factors: Sequence[Graph]) -> Graph:
    """Disjoint union plus every edge between different factors.

    Factor i's vertices are numbered directly after factor i-1's.
    """
    if len(factors) < 2:
        raise PreconditionError("a join needs at least two factors")
    total = sum(f.n for f in factors)
    if total > MAX_VERTICES:
        raise GraphInputError(f"join has {total} vertices; the limit is {MAX_VERTICES}")
    base = disjoint_union(*factors)
    blocks, start = [], 1
    for f in factors:
        blocks.append(range(start, start + f.n))
        start += f.n
    cross = [(u, v) for a, b in combinations(blocks, 2) for u in a for v in b]
    return graph_from_edge_list(total, [*base.edges, *cross])


def field_construction_degrees(q: int, n: int) -> DegreeSet:
    """divisors(n) together with q**n - 1."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if n < 2:
        raise ValueError(f"exponent must be at least 2, got {n}")
    if q**n >= U64_LIMIT:
        raise OverflowError(f"{q}**{n} does not fit in 64 bits")
    return DegreeSet.of([*divisors(n), q**n - 1])


@lru_cache(maxsize=4096)
def _support(m: int) -> tuple[int, ...]:
    return tuple(prime_support(m))


def degree_set_to_graph(d: DegreeSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Prime graph of a degree set; vertices are the primes in increasing order.

    Returns the graph and the map prime -> vertex label.
    """
    degrees = d.degrees if isinstance(d, DegreeSet) else tuple(sorted(set(d)))
    supports = [_support(a) for a in degrees if a > 1]
    primes = sorted({p for s in supports for p in s})
    if not primes:
        raise NoPrimesError("degree set has no prime divisors")
    if len(primes) > MAX_VERTICES:
        raise GraphInputError(f"degree set involves {len(primes)} primes; limit is {MAX_VERTICES}")
    label = {p: i for i, p in enumerate(primes, start=1)}
    edges = {(label[p], label[r]) for s in supports for p, r in combinations(s, 2)}
    return graph_from_edge_list(len(primes), edges), label


def two_cliques(a: int, b: int) -> Graph:
    return disjoint_union(complete_graph(a), complete_graph(b))


def search_field_certificate(a: int, b: int) -> FieldCertificate | None:
    """First (q, n), in lexicographic order, whose degree set realises K_a + K_b.

    q runs over the first ten primes and n over 2..64 with q**n < 2**64.  Shapes
    with more than eight vertices in total cannot be represented and give None.
    """
    if not 1 <= a <= b <= 7:
        raise PreconditionError(f"need 1 <= a <= b <= 7, got a={a}, b={b}")
    if a + b > MAX_VERTICES:
        return None
    target = two_cliques(a, b)
    for q in first_primes(SEARCH_PRIMES):
        for n in range(2, SEARCH_MAX_EXPONENT + 1):
            if q**n >= U64_LIMIT:
                break
            degrees = field_construction_degrees(q, n)
            try:
                g, _ = degree_set_to_graph(degrees)
            except GraphInputError:
                continue
            if g.n == target.n and is_isomorphic(g, target):
                return FieldCertificate(q, n, degrees.degrees)
    return None


def validate_field_certificate(cert: FieldCertificate, g: Graph) -> list[str]:
    """Problems with a FIELD certificate for ``g`` (empty when it checks out)."""
    out = []
    try:
        expected = field_construction_degrees(cert.q, cert.n)
    except (ValueError, OverflowError) as exc:
        return [str(exc)]
    if tuple(cert.degrees) != expected.degrees:
        out.append(f"degree set {cert.degrees} differs from the formula {expected.degrees}")
    h, _ = degree_set_to_graph(cert.degrees)
    if not is_isomorphic(h, g):
        out.append("degree set does not regenerate the certified graph")
    return out


def factorization_lines(cert: FieldCertificate) -> list[str]:
    """Human-readable factorisations of each degree in a FIELD certificate."""
    lines = []
    for d in cert.degrees:
        if d == 1:
            continue
        fs = factorize(d)
        lines.append(f"{d} = {' * '.join(map(str, fs))}")
    return lines
