"""A linear-size true subgraph of the overlap graph, plus a spanning forest.

Unlike the Dahlhaus graph, every edge emitted here joins two sets that
genuinely overlap, while the components still equal those of the full
overlap graph. Base edges pair each set with its Max; the remaining
candidates are carried as quintuples and resolved by two boundary
membership tests into a guaranteed overlap edge.

The hot path keeps quintuples and edge endpoints in flat parallel
arrays; the public operations expose the friendly Quintuple / pair
views.
"""

from typing import NamedTuple

from array import array

from .dgraph import dedup_sorted_pairs, union_sweep

__all__ = [
    "Quintuple",
    "OverlapSubgraph",
    "SpanningForest",
    "build_quintuples",
    "resolve_quintuples",
    "build_overlap_subgraph",
    "spanning_forest",
]


class Quintuple(NamedTuple):
    left: int   # left bound of X
    right: int  # right bound of X
    x: int
    y: int
    mx: int     # Max of X


class OverlapSubgraph:

    __slots__ = ("m", "edges")

    def __init__(self, m, edges):
        self.m = m
        self.edges = edges  # deduplicated, sorted pairs (i, j) with i < j


class SpanningForest:
    """One spanning tree per overlap class.

    Parallel lists ordered by root: roots[i] is the smallest set index of
    class i, members[i] its sets, tree_edges[i] its |class|-1 tree edges.
    """

    __slots__ = ("roots", "members", "tree_edges")

    def __init__(self, roots, members, tree_edges):
        self.roots = roots
        self.members = members
        self.tree_edges = tree_edges


def _collect(f, sl, maxes, bounds):
    """Base edge endpoints (with duplicates) and quintuples, all as
    parallel arrays.

    Scanning an SL list in increasing size order, a set X with a defined
    Max opens an interval covering the following entries Z while
    |Z| <= |Max(X)|. A covered Z (other than X and Max(X) themselves)
    yields one quintuple against the rightmost interval still covering
    it. Exhausted interval heads are dropped from the stack for good:
    sizes only grow along the list, so they can never cover again.
    """
    sizes = f.sizes
    m = f.m
    mvals = maxes.values
    mvsize = array("i", [0 if v is None else sizes[v] for v in mvals])
    ea = []
    eb = []
    for x in range(m):
        mx = mvals[x]
        if mx is not None:
            if x < mx:
                ea.append(x)
                eb.append(mx)
            else:
                ea.append(mx)
                eb.append(x)
    qx = []
    qy = []
    qx_app = qx.append
    qy_app = qy.append
    for lst in sl.lists:
        stack = []
        pop = stack.pop
        push = stack.append
        for z in lst:
            sz = sizes[z]
            while stack and mvsize[stack[-1]] < sz:
                pop()
            if stack:
                x = stack[-1]
                if z != x and z != mvals[x]:
                    qx_app(x)
                    qy_app(z)
            if mvsize[z]:
                push(z)
    return ea, eb, qx, qy


def _resolve(f, pf, sl, left, right, mvals, qx, qy, ea, eb):
    """Two bucketed membership phases; appends edge endpoints to ea/eb."""
    n = f.n
    m = f.m
    qx = array("i", qx)
    qy = array("i", qy)
    elem_at = pf.elem_at
    lists = sl.lists
    mark = bytearray(m)

    buckets = [None] * n
    for i, x in enumerate(qx):
        l = left[x]
        b = buckets[l]
        if b is None:
            b = buckets[l] = []
        b.append(i)
    ea_app = ea.append
    eb_app = eb.append
    lq2 = [None] * n
    for p in range(n):
        b = buckets[p]
        if not b:
            continue
        members = lists[elem_at[p]]
        for s in members:
            mark[s] = 1
        for i in b:
            y = qy[i]
            if not mark[y]:
                x = qx[i]
                if x < y:
                    ea_app(x)
                    eb_app(y)
                else:
                    ea_app(y)
                    eb_app(x)
            else:
                r = right[qx[i]]
                rb = lq2[r]
                if rb is None:
                    rb = lq2[r] = []
                rb.append(i)
        for s in members:
            mark[s] = 0
    for p in range(n):
        b = lq2[p]
        if not b:
            continue
        members = lists[elem_at[p]]
        for s in members:
            mark[s] = 1
        for i in b:
            y = qy[i]
            if not mark[y]:
                x = qx[i]
                if x < y:
                    ea_app(x)
                    eb_app(y)
                else:
                    ea_app(y)
                    eb_app(x)
            else:
                mx = mvals[qx[i]]
                if y < mx:
                    ea_app(y)
                    eb_app(mx)
                else:
                    ea_app(mx)
                    eb_app(y)
        for s in members:
            mark[s] = 0


def build_quintuples(f, sl, maxes, bounds):
    """Collect the Max base edges and one quintuple per covered SL entry."""
    ea, eb, qx, qy = _collect(f, sl, maxes, bounds)
    left = bounds.left
    right = bounds.right
    mvals = maxes.values
    lq1 = [Quintuple(left[x], right[x], x, y, mvals[x])
           for x, y in zip(qx, qy)]
    return dedup_sorted_pairs(ea, eb, f.m), lq1


def resolve_quintuples(lq1, f, pf, sl):
    """Turn each quintuple into an edge that is certainly an overlap.

    For (l, r, X, Y, M): if Y misses the element at position l, or misses
    the element at position r, Y overlaps X; otherwise Y overlaps M. Both
    phases bucket the pending quintuples by the tested position and mark
    the SL list of its element once, so each phase is O(n + |F|).
    """
    left = [0] * f.m
    right = [0] * f.m
    mvals = [None] * f.m
    qx = []
    qy = []
    for q in lq1:
        left[q.x] = q.left
        right[q.x] = q.right
        mvals[q.x] = q.mx
        qx.append(q.x)
        qy.append(q.y)
    ea = []
    eb = []
    _resolve(f, pf, sl, left, right, mvals, qx, qy, ea, eb)
    return sorted(set(zip(ea, eb)))


def build_overlap_subgraph(f, sl, maxes, bounds, pf):
    ea, eb, qx, qy = _collect(f, sl, maxes, bounds)
    if len(qx) > f.total_size:
        raise AssertionError(
            "created %d quintuples for |F| = %d" % (len(qx), f.total_size))
    _resolve(f, pf, sl, bounds.left, bounds.right, maxes.values,
             qx, qy, ea, eb)
    edges = dedup_sorted_pairs(ea, eb, f.m)
    if len(edges) > f.m + f.total_size:
        raise AssertionError("subgraph exceeds the m + |F| edge bound")
    return OverlapSubgraph(f.m, edges)


def spanning_forest(g, m):
    """Union-find sweep over the subgraph edges; uniting edges become tree edges."""
    kept = [[] for _ in range(m)]
    parent = union_sweep(g.edges, m, kept)
    members_by_root = {}
    for i in range(m):
        r = i
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        members_by_root.setdefault(r, []).append(i)
    groups = sorted(members_by_root.values())
    roots = []
    members = []
    tree_edges = []
    for group in groups:
        roots.append(group[0])
        members.append(group)
        edges = []
        for i in group:
            edges.extend(kept[i])
        edges.sort()
        tree_edges.append(edges)
    return SpanningForest(roots, members, tree_edges)
