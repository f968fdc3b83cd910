"""Linear-time computation of Max over a set family, in three passes.

Max of a set X is the earliest set Y in LF order that overlaps X and has
size >= |X| (None when no such Y exists). The passes are:

1. refine the trivial partition of the universe by every set in LF order;
   the final element order sorts the conceptual membership-matrix columns
   lexicographically (that matrix is never materialized);
2. read off, per set, the leftmost/rightmost position of its elements in
   that order, and index all sets by their rightmost position;
3. replay the refinement over the frozen final order; each split hands the
   refining set out as Max to exactly the sets whose left bound falls in
   the prefix and right bound in the new suffix part.
"""

from array import array

import numpy as np

from .partition import OrderedPartition

__all__ = [
    "PfOrder",
    "Bounds",
    "AMStructure",
    "MaxAssignment",
    "compute_pf",
    "compute_bounds",
    "build_am",
    "compute_max",
]


class PfOrder:
    """Final element order after pass 1. elem_at and pos_f are inverse."""

    __slots__ = ("elem_at", "pos_f")

    def __init__(self, elem_at):
        self.elem_at = array("i", elem_at)
        pos_f = array("i", bytes(4 * len(self.elem_at)))
        for slot, e in enumerate(self.elem_at):
            pos_f[e] = slot
        self.pos_f = pos_f


class Bounds:
    """Per set, the leftmost and rightmost position of its elements."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right


class MaxAssignment:
    """Per set, the index of its Max partner, or None."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = list(values)

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if isinstance(other, MaxAssignment):
            return self.values == other.values
        return NotImplemented

    def __repr__(self):
        return "MaxAssignment(%r)" % (self.values,)


class AMStructure:
    """Sets indexed by right bound, each list sorted by increasing left.

    Intrusive doubly-linked lists over set indices, one list per table
    position, plus per-size buckets for batch removal. remove() is O(1);
    a set can be removed at most once.
    """

    __slots__ = ("head", "nxt", "prv", "live", "by_size")

    def __init__(self, n, m):
        self.head = array("i", [-1]) * n
        self.nxt = array("i", [-1]) * m
        self.prv = array("i", [-1]) * m  # prv < 0: head of list at -prv-1
        self.live = bytearray(m)
        self.by_size = {}

    def front(self, pos):
        return self.head[pos]

    def remove(self, x):
        if not self.live[x]:
            return
        self.live[x] = 0
        nxt = self.nxt[x]
        prv = self.prv[x]
        if prv >= 0:
            self.nxt[prv] = nxt
        else:
            self.head[-prv - 1] = nxt
        if nxt >= 0:
            self.prv[nxt] = prv

    def remove_all_of_size(self, size):
        for x in self.by_size.get(size, ()):
            self.remove(x)

    def content(self, pos):
        """Live sets at a position, front to back (debug/test helper)."""
        out = []
        x = self.head[pos]
        while x >= 0:
            out.append(x)
            x = self.nxt[x]
        return out


def compute_pf(f, lf):
    """Pass 1: refine the full-universe partition by every set in LF order."""
    p = OrderedPartition(f.n)
    for i in lf.order:
        p.refine(f.sets[i])
    return PfOrder(p.snapshot_order())


def compute_bounds(f, pf):
    """Pass 2a: min/max position of each set's elements in the final order."""
    flat = array("i")
    for s in f.sets:
        flat.extend(s)
    pos = np.frombuffer(pf.pos_f, dtype=np.int32)
    vals = pos[np.frombuffer(flat, dtype=np.int32)]
    starts = np.zeros(f.m, dtype=np.int64)
    np.cumsum(np.frombuffer(f.sizes, dtype=np.int32)[:-1], out=starts[1:])
    left = array("i")
    left.frombytes(np.minimum.reduceat(vals, starts).tobytes())
    right = array("i")
    right.frombytes(np.maximum.reduceat(vals, starts).tobytes())
    return Bounds(left, right)


def build_am(f, lf, bounds):
    """Pass 2b: bucket-sort sets by (right, left) into the position lists."""
    n, m = f.n, f.m
    am = AMStructure(n, m)
    left_buckets = [[] for _ in range(n)]
    for i in range(m):
        left_buckets[bounds.left[i]].append(i)
    tails = [-1] * n
    head = am.head
    nxt = am.nxt
    prv = am.prv
    right = bounds.right
    for bucket in left_buckets:
        for i in bucket:
            r = right[i]
            t = tails[r]
            if t < 0:
                head[r] = i
                prv[i] = -r - 1
            else:
                nxt[t] = i
                prv[i] = t
            tails[r] = i
    for i in range(m):
        am.live[i] = 1
        am.by_size.setdefault(f.sizes[i], []).append(i)
    return am


def compute_max(f, lf, pf, bounds, am):
    """Pass 3: replay the LF refinement over the frozen final order.

    The table is never mutated: by construction the members of the
    refining set always form a clean suffix of every part they split,
    which the loop asserts. When part C splits at boundary l, every set
    still indexed under a position of the new suffix part whose left
    bound is <= l has just been separated for the first time, and the
    refiner is its Max.
    """
    n, m = f.n, f.m
    pos_f = pf.pos_f
    elem_at = pf.elem_at
    left = bounds.left
    sizes = f.sizes
    maxes = [None] * m

    part_of = array("i", bytes(4 * n))
    part_lo = [0]
    part_hi = [n - 1]

    last_of_size = bytearray(m)
    prev = -1
    for i in lf.order:
        if prev >= 0 and sizes[prev] != sizes[i]:
            last_of_size[prev] = 1
        prev = i
    if prev >= 0:
        last_of_size[prev] = 1

    head = am.head
    sets = f.sets
    for y in lf.order:
        counts = {}
        possum = {}
        for e in sets[y]:
            p = part_of[e]
            if p in counts:
                counts[p] += 1
                possum[p] += pos_f[e]
            else:
                counts[p] = 1
                possum[p] = pos_f[e]
        for p, k in counts.items():
            lo = part_lo[p]
            hi = part_hi[p]
            if k == hi - lo + 1:
                continue
            # k distinct positions within [lo, hi] sum to the suffix sum
            # exactly when they are the top k positions of the part
            if 2 * possum[p] != k * (2 * hi - k + 1):
                raise AssertionError(
                    "refiner elements do not form a suffix of their part"
                )
            boundary = hi - k
            newp = len(part_lo)
            part_lo.append(boundary + 1)
            part_hi.append(hi)
            for q in range(boundary + 1, hi + 1):
                part_of[elem_at[q]] = newp
                x = head[q]
                while x >= 0 and left[x] <= boundary:
                    am.remove(x)
                    maxes[x] = y
                    x = head[q]
            part_hi[p] = boundary
        if last_of_size[y]:
            am.remove_all_of_size(sizes[y])
    return MaxAssignment(maxes)
