"""End-to-end pipeline: family orders -> Max -> graphs -> forest."""

import time
from dataclasses import dataclass, field

from .dgraph import build_dgraph, components
from .family import build_sl_lists, lf_order
from .maxcomp import build_am, compute_bounds, compute_max, compute_pf
from .subgraph import build_overlap_subgraph, spanning_forest

__all__ = ["PipelineResult", "run_pipeline"]

STAGES = ("orders", "maxcomp", "dgraph", "subgraph", "forest")


@dataclass
class PipelineResult:
    family: object
    lf: object
    sl: object
    pf: object
    bounds: object
    maxes: object
    dgraph: object
    labeling: object
    subgraph: object
    forest: object
    times: dict = field(default_factory=dict)

    @property
    def n_classes(self):
        return len(self.labeling.classes)


def run_pipeline(f):
    """Run every stage on the family, recording per-stage wall time."""
    times = {}
    clock = time.perf_counter

    t0 = clock()
    lf = lf_order(f)
    sl = build_sl_lists(f, lf)
    t1 = clock()
    times["orders"] = t1 - t0

    pf = compute_pf(f, lf)
    bounds = compute_bounds(f, pf)
    am = build_am(f, lf, bounds)
    maxes = compute_max(f, lf, pf, bounds, am)
    t2 = clock()
    times["maxcomp"] = t2 - t1

    dg = build_dgraph(f, sl, maxes)
    labeling = components(dg, f.m)
    t3 = clock()
    times["dgraph"] = t3 - t2

    sub = build_overlap_subgraph(f, sl, maxes, bounds, pf)
    t4 = clock()
    times["subgraph"] = t4 - t3

    forest = spanning_forest(sub, f.m)
    t5 = clock()
    times["forest"] = t5 - t4
    times["total"] = t5 - t0

    return PipelineResult(f, lf, sl, pf, bounds, maxes, dg, labeling,
                          sub, forest, times)
