"""Quadratic brute-force references for differential testing.

Shipped with the library (not test-only) so the CLI verify command can
run them. A configurable cap on m keeps accidental quadratic blowups
loud instead of slow.
"""

import os

from .dgraph import ComponentLabeling, UnionFind
from .maxcomp import MaxAssignment

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "OracleCapExceeded",
    "oracle_cap",
    "overlaps",
    "OverlapGraphFull",
    "overlap_graph_full",
    "max_oracle",
]

DEFAULT_ORACLE_CAP = 5000


class OracleCapExceeded(RuntimeError):
    pass


def oracle_cap():
    """Active m-cap; the OVERLAP_ORACLE_CAP env var overrides the default."""
    raw = os.environ.get("OVERLAP_ORACLE_CAP")
    if raw is None:
        return DEFAULT_ORACLE_CAP
    return int(raw)


def overlaps(a, b):
    """True iff the two element sets intersect without either containing the other."""
    sa = a if isinstance(a, (set, frozenset)) else set(a)
    sb = b if isinstance(b, (set, frozenset)) else set(b)
    return (not sa.isdisjoint(sb)) and bool(sa - sb) and bool(sb - sa)


class OverlapGraphFull:
    """Every overlapping pair, plus the resulting component labeling."""

    __slots__ = ("edges", "labeling")

    def __init__(self, edges, labeling):
        self.edges = edges
        self.labeling = labeling


def overlap_graph_full(f, cap=None):
    """Test all m(m-1)/2 pairs; refuses families larger than the cap."""
    limit = oracle_cap() if cap is None else cap
    if f.m > limit:
        raise OracleCapExceeded(
            "family has m = %d sets, oracle cap is %d" % (f.m, limit))
    sets = f.as_frozensets()
    edges = []
    uf = UnionFind(f.m)
    for i in range(f.m):
        si = sets[i]
        for j in range(i + 1, f.m):
            if overlaps(si, sets[j]):
                edges.append((i, j))
                uf.union(i, j)
    return OverlapGraphFull(edges, ComponentLabeling.from_union_find(uf, f.m))


def max_oracle(f, lf):
    """The Max definition applied literally: earliest LF set of size >= |X| overlapping X."""
    sets = f.as_frozensets()
    sizes = f.sizes
    values = []
    for x in range(f.m):
        sx = sets[x]
        found = None
        for y in lf.order:
            if sizes[y] < sizes[x]:
                break
            if y != x and overlaps(sx, sets[y]):
                found = y
                break
        values.append(found)
    return MaxAssignment(values)
