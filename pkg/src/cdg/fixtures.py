"""Named six-vertex graphs from the published figures.

Figure vertices drawn with letters are numbered in order of appearance
(a..f -> 1..6; for drawings using i,a,b,c,d,f the order is i,a,b,c,d,f).
"""

from __future__ import annotations

from .graph import Graph, graph_from_edge_list


def _letters(spec: str, order: str = "abcdef") -> Graph:
    pos = {c: i for i, c in enumerate(order, start=1)}
    return graph_from_edge_list(len(order), [(pos[e[0]], pos[e[1]]) for e in spec.split()])


def _nums(spec: str, n: int = 6) -> Graph:
    return graph_from_edge_list(n, [(int(e[0]), int(e[1])) for e in spec.split()])


_FIXTURES: dict[str, Graph] = {
    # the diameter-three graph that occurs
    "FIG1": _nums("12 13 14 23 24 25 34 35 45 56"),
    # K3 + K3, excluded by the component-size inequality
    "FIG2": _letters("ab ac bc de df ef"),
    # K1 + K5 and K2 + K4, both realised by field groups
    "FIG3A": _letters("ia ib ic id ab ac ad bc bd cd", "iabcdf"),
    "FIG3B": _letters("ab ac ad bc bd cd fg", "abcdfg"),
    # direct products
    "FIG4_1": _letters("ab ac ad ae af bc bd be bf cd ce cf de df ef"),
    "FIG4_2": _letters("ab ac ad ae af bd be bf cd ce cf de df ef"),
    "FIG4_3": _letters("ab ac af bc bd be bf cd ce cf de df ef"),
    "FIG4_4": _letters("ab ac ad ae af bd be bf cd ce cf df ef"),
    "FIG4_5": _letters("ab ac bc bd be bf cd ce cf de df ef"),
    "FIG4_6": _letters("ab ac ad bc be bf cd ce cf de df ef"),
    "FIG4_7": _letters("ab ac ad ae bc bd bf ce cf de df ef"),
    "FIG4_8": _letters("ac bc bd be bf cd ce cf de df ef"),
    "FIG4_9": _letters("ab ac ad bc bd cd ce cf de df ef"),
    "FIG4_10": _letters("ab ad bc be bf cd ce cf de df ef"),
    "FIG4_11": _letters("ab ac af bc bd be cd ce de df ef"),
    "FIG4_12": _letters("ab ac ad bc bd cd de df ef"),
    # connected graphs eliminated in the reductions
    "FIG5_I": _letters("ab ac bd ce cf de df ef"),
    "FIG5_II": _letters("ab ac bd cd ce cf de df ef"),
    "FIG5_III": _letters("ab ad bc be cd ce cf df ef"),
    "FIG5_IV": _letters("fi fa fb fc fd ia ab bc cd di", "iabcdf"),
    "FIG5_V": _letters("ab ac ad bd ce cf de df ef"),
    "FIG5_VI": _letters("ab ac ad bc be cf de df ef"),
    # graph (v) with the p1..p6 labelling used in its non-occurrence proof
    "FIG6": _nums("12 13 24 14 35 36 45 46 56"),
    # unresolved graphs
    "FIG7_1": _nums("12 13 14 23 24 25 34 36 46 56"),
    "FIG7_2": _nums("12 13 15 24 25 34 35 36 45 46"),
    "FIG7_3": _nums("12 13 15 23 24 35 36 45 46 56"),
    "FIG7_4": _nums("12 13 14 15 23 24 26 34 45 46 56"),
    "FIG7_5": _nums("12 13 14 24 34 35 36 45 46 56"),
    "FIG7_6": _nums("12 13 14 23 25 26 34 45 46 56"),
    "FIG7_7": _nums("12 13 14 23 25 26 34 35 45 46 56"),
    "FIG7_8": _nums("12 14 23 24 26 34 35 36 45 46 56"),
    "FIG7_9": _nums("12 13 14 23 24 25 26 34 35 45 46 56"),
}

FIG4 = tuple(f"FIG4_{i}" for i in range(1, 13))
FIG5 = ("FIG5_I", "FIG5_II", "FIG5_III", "FIG5_IV", "FIG5_V", "FIG5_VI")
FIG7 = tuple(f"FIG7_{i}" for i in range(1, 10))

# Five-vertex graph obtained from FIG6 by deleting p5 (relabelled 1..5).
LEWIS_FIVE_VERTEX = _nums("12 13 14 24 35 45", 5)
# Two triangles sharing a vertex: the join of a single vertex with 2K2.
BOWTIE = _nums("12 13 23 14 15 45", 5)


def fixture(name: str) -> Graph:
    try:
        return _FIXTURES[name.upper()]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}") from None


def fixture_names() -> list[str]:
    return list(_FIXTURES)
