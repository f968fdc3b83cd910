import pytest

from overlap.family import lf_order, parse_family
from overlap.generate import gen_star
from overlap.oracle import (OracleCapExceeded, max_oracle, oracle_cap,
                            overlap_graph_full, overlaps)
from overlap.pipeline import run_pipeline

from conftest import make_family, random_family, seeded_rng


class TestOverlapsPredicate:

    def test_textbook_overlap(self):
        assert overlaps({1, 2}, {2, 3})

    def test_containment_is_not_overlap(self):
        assert not overlaps({1, 2}, {1, 2, 3})
        assert not overlaps({1, 2, 3}, {1, 2})

    def test_disjoint_is_not_overlap(self):
        assert not overlaps({1}, {2})

    def test_equal_sets(self):
        assert not overlaps({1, 2}, {1, 2})

    def test_accepts_lists(self):
        assert overlaps([1, 2], [2, 3])


class TestFullGraph:

    def test_star_100(self):
        f = parse_family(gen_star(100))
        full = overlap_graph_full(f)
        assert len(full.edges) == 100 * 99 // 2
        assert len(full.labeling.classes) == 1

    def test_fam_a(self, fam_a):
        full = overlap_graph_full(fam_a)
        assert full.edges == [(0, 1), (1, 2)]
        assert full.labeling.as_partition() == {frozenset({0, 1, 2}),
                                                frozenset({3})}

    def test_disjoint(self):
        f = make_family([0, 1], [2, 3], [4, 5])
        full = overlap_graph_full(f)
        assert full.edges == []
        assert len(full.labeling.classes) == 3

    def test_cap_refusal(self):
        f = parse_family(gen_star(10))
        with pytest.raises(OracleCapExceeded):
            overlap_graph_full(f, cap=5)

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("OVERLAP_ORACLE_CAP", "7")
        assert oracle_cap() == 7
        f = parse_family(gen_star(8))
        with pytest.raises(OracleCapExceeded):
            overlap_graph_full(f)


class TestMaxOracle:

    def test_fam_a(self, fam_a):
        assert max_oracle(fam_a, lf_order(fam_a)).values == [1, 0, 1, None]

    def test_mutual_pair(self):
        f = make_family([0, 1], [1, 2])
        assert max_oracle(f, lf_order(f)).values == [1, 0]

    def test_nested_chain(self):
        f = make_family([0], [0, 1], [0, 1, 2])
        assert max_oracle(f, lf_order(f)).values == [None, None, None]


def test_classes_invariant_under_set_permutation():
    rng = seeded_rng(41)
    for _ in range(50):
        f = random_family(rng, max_n=12, max_m=12)
        perm = list(range(f.m))
        rng.shuffle(perm)
        g = make_family(*[[f.tokens[e] for e in f.sets[i]] for i in perm],
                        universe=f.tokens)

        def named(fam, labeling):
            return {frozenset(frozenset(fam.tokens[e] for e in fam.sets[i])
                              for i in c)
                    for c in labeling.classes}

        assert named(f, overlap_graph_full(f).labeling) == \
            named(g, overlap_graph_full(g).labeling)
        # the fast path's tie-break freedom never changes the classes either
        assert named(f, run_pipeline(f).labeling) == \
            named(g, run_pipeline(g).labeling)
