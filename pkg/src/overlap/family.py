"""Set family input model and the two size orders everything else consumes.

A family is m subsets of a universe of n elements. Elements are interned
to dense indices; all algorithms downstream work on indices only and the
original tokens are kept solely for output.
"""

from array import array

__all__ = [
    "FamilyFormatError",
    "SetFamily",
    "LFOrder",
    "SLLists",
    "parse_family",
    "lf_order",
    "build_sl_lists",
]


class FamilyFormatError(ValueError):
    """Malformed family input; line_no points at the offending line."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = "line %d: %s" % (line_no, message)
        super().__init__(message)
        self.line_no = line_no


class SetFamily:
    """A family of m non-empty subsets over an interned universe of n elements.

    tokens: original element names, indexed 0..n-1.
    sets: m lists of distinct element indices.
    total_size: sum of all set cardinalities (written |F| in the docs).
    """

    __slots__ = ("tokens", "sets", "sizes", "n", "m", "total_size")

    def __init__(self, tokens, sets, validate=True):
        self.tokens = list(tokens)
        self.sets = [list(s) for s in sets]
        self.n = len(self.tokens)
        self.m = len(self.sets)
        self.sizes = array("i", [len(s) for s in self.sets])
        self.total_size = sum(self.sizes)
        if not validate:
            return
        for s in self.sets:
            if not s:
                raise ValueError("empty set in family")
            if len(set(s)) != len(s):
                raise ValueError("duplicate element within a set")
            for e in s:
                if not 0 <= e < self.n:
                    raise ValueError("element index %r out of range" % (e,))

    @classmethod
    def from_elements(cls, sets, extra_universe=()):
        """Build a family from iterables of arbitrary hashable labels.

        Labels are interned in first-appearance order; extra_universe
        declares elements that may appear in no set.
        """
        index = {}
        tokens = []

        def intern(label):
            i = index.get(label)
            if i is None:
                i = index[label] = len(tokens)
                tokens.append(str(label))
            return i

        interned = []
        for s in sets:
            seen = set()
            elems = []
            for label in s:
                e = intern(label)
                if e not in seen:
                    seen.add(e)
                    elems.append(e)
            interned.append(elems)
        for label in extra_universe:
            intern(label)
        return cls(tokens, interned)

    def as_frozensets(self):
        return [frozenset(s) for s in self.sets]


class LFOrder:
    """Set indices sorted by decreasing size; equal sizes stay in input order.

    rank is the inverse permutation: rank[i] is the position of set i.
    """

    __slots__ = ("order", "rank")

    def __init__(self, order):
        self.order = list(order)
        rank = [0] * len(self.order)
        for r, i in enumerate(self.order):
            rank[i] = r
        self.rank = rank


class SLLists:
    """Per element v, the sets containing v in increasing size order.

    Equal sizes appear in decreasing input-index order, i.e. each list is
    a subsequence of the reversed LF order.
    """

    __slots__ = ("lists",)

    def __init__(self, lists):
        self.lists = lists

    def __getitem__(self, v):
        return self.lists[v]

    def __len__(self):
        return len(self.lists)


def parse_family(source):
    """Parse the family text format into a SetFamily.

    One set per line, elements as whitespace-separated tokens. Lines
    starting with '#' are comments. An optional '!universe tok ...' line
    declares elements appearing in no set. Duplicate tokens within a line
    are dropped; an empty (or whitespace-only) line is rejected because it
    would denote an empty set.
    """
    text = source.read() if hasattr(source, "read") else source
    index = {}
    tokens = []

    def intern(tok):
        i = index.get(tok)
        if i is None:
            i = index[tok] = len(tokens)
            tokens.append(tok)
        return i

    sets = []
    for line_no, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if stripped.startswith("!universe"):
            for tok in stripped.split()[1:]:
                intern(tok)
            continue
        toks = stripped.split()
        if not toks:
            raise FamilyFormatError("empty set", line_no)
        seen = set()
        elems = []
        for t in toks:
            e = intern(t)
            if e not in seen:
                seen.add(e)
                elems.append(e)
        sets.append(elems)
    if not sets:
        raise FamilyFormatError("no sets in input")
    return SetFamily(tokens, sets)


def lf_order(f):
    """Bucket-sort the sets by decreasing size, stable on input index."""
    buckets = [[] for _ in range(f.n + 1)]
    for i, s in enumerate(f.sizes):
        buckets[s].append(i)
    order = []
    for s in range(f.n, 0, -1):
        order.extend(buckets[s])
    return LFOrder(order)


def build_sl_lists(f, lf):
    """Build all SL lists in one pass over the reversed LF order."""
    lists = [[] for _ in range(f.n)]
    for i in reversed(lf.order):
        for v in f.sets[i]:
            lists[v].append(i)
    return SLLists(lists)
