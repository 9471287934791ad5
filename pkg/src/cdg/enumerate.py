"""All non-isomorphic graphs on n vertices, in canonical-key order."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .canonical import CanonicalKey, num_pairs, orbit_codes
from .errors import PreconditionError, VertexCountError
from .graph import MAX_VERTICES, Graph, INFINITE, diameter, is_connected

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphUniverse:
    n: int
    graphs: tuple[Graph, ...]
    connected_only: bool = False

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def keys(self) -> list[CanonicalKey]:
        from .canonical import canonical_form

        return [canonical_form(g) for g in self.graphs]


def _class_codes(n: int) -> list[int]:
    """Canonical code of every isomorphism class on n vertices.

    Walks all labelled graphs (as pair bit strings) in increasing order and
    marks whole orbits at once, so each class is canonicalised exactly once.
    """
    e = num_pairs(n)
    if e == 0:
        return [0]
    # Bit b of a labelled code is pair (e-1-b).
    seen = np.zeros(1 << e, dtype=bool)
    codes = []
    pos = 0
    chunk = 1 << 16
    total = 1 << e
    while pos < total:
        window = seen[pos : pos + chunk]
        free = np.flatnonzero(~window)
        if free.size == 0:
            pos += chunk
            continue
        x = pos + int(free[0])
        pairs = [e - 1 - b for b in range(e) if x >> b & 1]
        orbit = orbit_codes(n, pairs)
        seen[orbit.astype(np.int64)] = True
        codes.append(int(orbit.max()))
        pos = x
    return codes


def enumerate_graphs(n: int, connected_only: bool = False) -> GraphUniverse:
    """One representative per isomorphism class, sorted by :class:`CanonicalKey`.

    Representatives are the canonical graphs themselves.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise VertexCountError(f"n must be in [1, {MAX_VERTICES}], got {n!r}")
    if n == MAX_VERTICES:
        log.warning("enumerating all graphs on %d vertices; this takes a while", n)
    keys = sorted(CanonicalKey.from_code(n, c) for c in _class_codes(n))
    graphs = [k.graph() for k in keys]
    if connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    return GraphUniverse(n, tuple(graphs), connected_only)


def _diameter_at_most_two(g: Graph) -> bool:
    d = diameter(g)
    return d != INFINITE and d <= 2


def _predicates() -> dict[str, Callable[[Graph], bool]]:
    from . import rules

    return {
        "always": lambda g: True,
        "connected": is_connected,
        "disconnected": lambda g: not is_connected(g),
        "palfy": rules.satisfies_palfy,
        "satisfies_palfy": rules.satisfies_palfy,
        "bipartite_complement": lambda g: rules.complement_odd_cycle(g) is None,
        "diameter_le_2": _diameter_at_most_two,
        "diameter_3": lambda g: diameter(g) == 3,
        "join_decomposable": lambda g: rules.join_decompose(g) is not None,
    }


def predicate_names() -> list[str]:
    return sorted(_predicates())


def filter_universe(u: GraphUniverse, predicate: str) -> GraphUniverse:
    """Keep the graphs passing the named structural test, preserving order."""
    table = _predicates()
    if predicate not in table:
        raise PreconditionError(
            f"unknown predicate {predicate!r}; choose from {', '.join(sorted(table))}"
        )
    test = table[predicate]
    return GraphUniverse(u.n, tuple(g for g in u.graphs if test(g)), u.connected_only)
