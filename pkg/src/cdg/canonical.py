"""Exact canonical forms by exhaustive search over vertex permutations.

A labelled graph on n vertices is encoded as the bit string of its pairs in
:func:`~cdg.graph.pair_index` order, first pair most significant.  The canonical
code is the largest such value over all n! relabellings; with n <= 8 that is at
most 40320 candidates, evaluated in one vectorised pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .graph import Graph, all_pairs, pair_index, relabel


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def _key_width(n: int) -> int:
    return (num_pairs(n) + 7) // 8


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Isomorphism-class identity: vertex count byte followed by the canonical code."""

    data: bytes

    @property
    def n(self) -> int:
        return self.data[0]

    @property
    def code(self) -> int:
        return int.from_bytes(self.data[1:], "big")

    def hex(self) -> str:
        return self.data.hex()

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalKey":
        return cls(bytes.fromhex(text))

    @classmethod
    def from_code(cls, n: int, code: int) -> "CanonicalKey":
        return cls(bytes([n]) + code.to_bytes(_key_width(n), "big"))

    def graph(self) -> Graph:
        """The canonical representative this key encodes."""
        return graph_from_code(self.n, self.code)

    def __str__(self) -> str:
        return self.hex()


def code_of(g: Graph) -> int:
    top = num_pairs(g.n) - 1
    return sum(1 << (top - pair_index(u, v)) for u, v in g.edges)


def graph_from_code(n: int, code: int) -> Graph:
    top = num_pairs(n) - 1
    return Graph(n, frozenset(e for i, e in enumerate(all_pairs(n)) if code >> (top - i) & 1))


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """``perms[k]`` is the k-th permutation; ``weights[i, k]`` is the bit value pair i
    lands on under it.  Rows are per pair so that summing a graph's edges reads
    contiguous memory."""
    perms = np.array(list(permutations(range(1, n + 1))), dtype=np.int64).reshape(-1, n)
    pairs = all_pairs(n)
    top = num_pairs(n) - 1
    weights = np.zeros((len(pairs), len(perms)), dtype=np.uint64)
    for i, (u, v) in enumerate(pairs):
        a, b = perms[:, u - 1], perms[:, v - 1]
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        idx = (hi - 1) * (hi - 2) // 2 + (lo - 1)
        weights[i] = np.left_shift(np.uint64(1), (top - idx).astype(np.uint64))
    return perms, weights


def orbit_codes(n: int, edge_indices: list[int]) -> np.ndarray:
    """Codes of every relabelling of the graph with the given pair indices."""
    perms, weights = _tables(n)
    acc = np.zeros(len(perms), dtype=np.uint64)
    for i in edge_indices:
        acc += weights[i]
    return acc


@lru_cache(maxsize=1 << 16)
def _canonical(n: int, edges: frozenset) -> tuple[int, tuple[int, ...]]:
    perms, _ = _tables(n)
    codes = orbit_codes(n, [pair_index(u, v) for u, v in edges])
    best = int(np.argmax(codes))
    return int(codes[best]), tuple(int(x) for x in perms[best])


def canonical_labeling(g: Graph) -> tuple[CanonicalKey, tuple[int, ...]]:
    """Return the key and a permutation ``perm`` (``perm[v-1]`` = new label of v) that
    maps ``g`` onto the canonical representative."""
    code, perm = _canonical(g.n, g.edges)
    return CanonicalKey.from_code(g.n, code), perm


def canonical_form(g: Graph) -> CanonicalKey:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, perm = canonical_labeling(g)
    return relabel(g, perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)


def isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A vertex map ``g -> h`` carrying edges onto edges, or None."""
    if not is_isomorphic(g, h):
        return None
    _, pg = canonical_labeling(g)
    _, ph = canonical_labeling(h)
    inv_h = {new: old for old, new in enumerate(ph, start=1)}
    return {v: inv_h[pg[v - 1]] for v in g.vertices}
