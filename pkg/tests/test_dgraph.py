from overlap.dgraph import DahlhausGraph, build_dgraph, components
from overlap.family import build_sl_lists, lf_order
from overlap.maxcomp import build_am, compute_bounds, compute_max, compute_pf
from overlap.oracle import overlap_graph_full
from overlap.pipeline import run_pipeline

from conftest import make_family, random_family, seeded_rng


def dahlhaus(f):
    lf = lf_order(f)
    sl = build_sl_lists(f, lf)
    pf = compute_pf(f, lf)
    bounds = compute_bounds(f, pf)
    maxes = compute_max(f, lf, pf, bounds, build_am(f, lf, bounds))
    return build_dgraph(f, sl, maxes)


class TestBuild:

    def test_fam_a_edges(self, fam_a):
        g = dahlhaus(fam_a)
        assert g.edges == [(0, 1), (1, 2)]

    def test_disjoint_no_edges(self):
        f = make_family([0, 1], [2, 3], [4, 5])
        assert dahlhaus(f).edges == []

    def test_star_connected_with_few_edges(self):
        f = make_family(*[[0, i] for i in range(1, 6)])
        g = dahlhaus(f)
        assert g.raw_edge_count <= f.total_size == 10
        assert len(components(g, f.m).classes) == 1

    def test_raw_edge_bound_random(self):
        rng = seeded_rng(5)
        for _ in range(200):
            f = random_family(rng, max_n=15, max_m=20)
            g = dahlhaus(f)
            assert g.raw_edge_count <= f.total_size

    def test_adjacency_symmetric(self, fam_a):
        adj = dahlhaus(fam_a).adjacency()
        assert adj == [[1], [0, 2], [1], []]


class TestComponents:

    def test_fam_a_classes(self, fam_a):
        lab = components(dahlhaus(fam_a), fam_a.m)
        assert lab.classes == [[0, 1, 2], [3]]
        assert lab.class_id == [0, 0, 0, 1]

    def test_edgeless(self):
        lab = components(DahlhausGraph(3, [], 0), 3)
        assert lab.classes == [[0], [1], [2]]

    def test_path_graph_single_class(self):
        lab = components(DahlhausGraph(4, [(0, 1), (1, 2), (2, 3)], 3), 4)
        assert lab.classes == [[0, 1, 2, 3]]

    def test_ids_by_smallest_member(self):
        lab = components(DahlhausGraph(4, [(2, 3)], 1), 4)
        assert lab.class_id == [0, 1, 2, 2]


def test_components_match_oracle_random():
    rng = seeded_rng(11)
    for _ in range(300):
        f = random_family(rng, max_n=18, max_m=24)
        res = run_pipeline(f)
        full = overlap_graph_full(f)
        assert res.labeling.as_partition() == full.labeling.as_partition(), f.sets
