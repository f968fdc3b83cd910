"""Dahlhaus graph construction and its connected components.

The graph links consecutive entries of the per-element SL lists whenever
an earlier entry's Max is large enough to cover the later one. It has at
most |F| edges yet the same connected components as the full overlap
graph; its components are the overlap classes. Note it is generally NOT
a subgraph of the overlap graph, so its edges mean nothing pairwise.
"""

from array import array

import numpy as np

__all__ = ["UnionFind", "DahlhausGraph", "ComponentLabeling",
           "build_dgraph", "components", "dedup_sorted_pairs",
           "union_sweep", "labeling_from_parent"]


def dedup_sorted_pairs(ea, eb, m):
    """Sort parallel endpoint lists lexicographically and drop duplicates.

    Endpoints are packed into int64 keys (a * m + b stays well inside 63
    bits for any family that fits in memory) and deduplicated with
    numpy's C-level sort, which keeps edge cleanup off the Python
    interpreter's hot path.
    """
    if len(ea) == 0:
        return []
    a = np.asarray(ea, dtype=np.int64)
    b = np.asarray(eb, dtype=np.int64)
    packed = np.unique(a * m + b)
    return list(zip((packed // m).tolist(), (packed % m).tolist()))


class UnionFind:
    """Array-based union-find with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        """Merge the two classes; False when already joined."""
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


class DahlhausGraph:

    __slots__ = ("m", "edges", "raw_edge_count")

    def __init__(self, m, edges, raw_edge_count):
        self.m = m
        self.edges = edges  # deduplicated, sorted pairs (i, j) with i < j
        self.raw_edge_count = raw_edge_count

    def adjacency(self):
        adj = [[] for _ in range(self.m)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


class ComponentLabeling:
    """Classes of a graph over the m sets; ids dense, ordered by smallest member."""

    __slots__ = ("class_id", "classes")

    def __init__(self, class_id, classes):
        self.class_id = class_id
        self.classes = classes

    @classmethod
    def from_union_find(cls, uf, m):
        members = {}
        for i in range(m):
            members.setdefault(uf.find(i), []).append(i)
        classes = sorted(members.values())  # ordered by smallest member
        class_id = [0] * m
        for cid, group in enumerate(classes):
            for i in group:
                class_id[i] = cid
        return cls(class_id, classes)

    def as_partition(self):
        """Classes as a set of frozensets, for order-insensitive comparison."""
        return {frozenset(c) for c in self.classes}


def build_dgraph(f, sl, maxes):
    """Scan every SL list once, linking under the running Max threshold.

    The scan is vectorized: concatenating all SL lists, the per-list
    running maximum of |Max| falls out of one np.maximum.accumulate once
    each list's values are lifted by list_id * BIG — a later list's
    values then dominate every earlier one, so the accumulate restarts
    at list boundaries by itself. An entry whose predecessor lies in
    another list sees a negative threshold and never links.
    """
    sizes = f.sizes
    mx_size = array(
        "i", [0 if maxes[i] is None else sizes[maxes[i]] for i in range(f.m)])
    m = f.m
    lists = sl.lists
    total = sum(len(lst) for lst in lists)
    if total < 2:
        return DahlhausGraph(m, [], 0)
    flat = array("i")
    for lst in lists:
        flat.extend(lst)
    flat = np.frombuffer(flat, dtype=np.int32).astype(np.int64)
    lengths = np.fromiter((len(lst) for lst in lists),
                          dtype=np.int64, count=len(lists))
    seg = np.repeat(np.arange(len(lists), dtype=np.int64), lengths)
    big = f.n + 1
    lifted = np.frombuffer(mx_size, dtype=np.int32)[flat] + seg * big
    running = np.maximum.accumulate(lifted)
    threshold = running[:-1] - seg[1:] * big
    cur = flat[1:]
    prev = flat[:-1]
    sizes_np = np.frombuffer(sizes, dtype=np.int32)
    mask = sizes_np[cur] <= threshold
    a = prev[mask]
    b = cur[mask]
    raw = len(a)
    if raw > f.total_size:
        raise AssertionError(
            "created %d edges for |F| = %d" % (raw, f.total_size))
    return DahlhausGraph(
        m, dedup_sorted_pairs(np.minimum(a, b), np.maximum(a, b), m), raw)


def components(g, m):
    parent = union_sweep(g.edges, m, None)
    return labeling_from_parent(parent, m)


def union_sweep(edges, m, kept):
    """One union-find pass with find inlined (the loops run per edge).

    Returns the parent array. When kept is a per-vertex list table, each
    edge that actually merges two classes is appended to kept[a].
    """
    parent = array("i", range(m))
    size = array("i", [1]) * m
    for a, b in edges:
        ra = a
        while parent[ra] != ra:
            parent[ra] = parent[parent[ra]]
            ra = parent[ra]
        rb = b
        while parent[rb] != rb:
            parent[rb] = parent[parent[rb]]
            rb = parent[rb]
        if ra != rb:
            if size[ra] < size[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            size[ra] += size[rb]
            if kept is not None:
                kept[a].append((a, b))
    return parent


def labeling_from_parent(parent, m):
    members = {}
    for i in range(m):
        r = i
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        members.setdefault(r, []).append(i)
    classes = sorted(members.values())  # ordered by smallest member
    class_id = [0] * m
    for cid, group in enumerate(classes):
        for i in group:
            class_id[i] = cid
    return ComponentLabeling(class_id, classes)
