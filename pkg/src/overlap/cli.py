"""Command-line front end.

Subcommands: classes, max, subgraph, forest, verify, gen, bench.
Exit codes: 0 ok, 1 verify mismatch, 2 input error, 3 oracle cap exceeded.
"""

import argparse
import gc
import json
import subprocess
import sys

from .family import FamilyFormatError, SetFamily, parse_family
from .generate import (gen_blocks, gen_nested, gen_random,
                       gen_random_sets, gen_star)
from .oracle import OracleCapExceeded, max_oracle, overlap_graph_full, overlaps
from .pipeline import run_pipeline

__all__ = ["main", "entry", "bench_rows", "verify_result"]

BENCH_HEADER = "total_size,orders,maxcomp,dgraph,subgraph,forest,total,ratio"


def _label(i):
    return "X%d" % (i + 1)


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_family(fh)
    except FamilyFormatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        raise SystemExit(2)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        raise SystemExit(2)


def _json_payload(res):
    return {
        "classes": [[i + 1 for i in c] for c in res.labeling.classes],
        "max": [None if v is None else v + 1 for v in res.maxes.values],
        "edges": [[a + 1, b + 1] for a, b in res.subgraph.edges],
    }


def _print_json(payload, out):
    json.dump(payload, out, separators=(", ", ": "))
    out.write("\n")


def _dot(name, m, edges, out):
    out.write("graph %s {\n" % name)
    for i in range(m):
        out.write("  %s;\n" % _label(i))
    for a, b in edges:
        out.write("  %s -- %s;\n" % (_label(a), _label(b)))
    out.write("}\n")


def cmd_classes(args, out):
    res = run_pipeline(_load(args.file))
    if args.json:
        _print_json(_json_payload(res), out)
    else:
        for i, cid in enumerate(res.labeling.class_id):
            out.write("%s %d\n" % (_label(i), cid))
    return 0


def cmd_max(args, out):
    res = run_pipeline(_load(args.file))
    if args.json:
        _print_json(_json_payload(res), out)
    else:
        for i, v in enumerate(res.maxes.values):
            out.write("%s -> %s\n" % (_label(i), "none" if v is None else _label(v)))
    return 0


def cmd_subgraph(args, out):
    res = run_pipeline(_load(args.file))
    if args.dot:
        _dot("overlap_subgraph", res.family.m, res.subgraph.edges, out)
    elif args.json:
        _print_json(_json_payload(res), out)
    else:
        for a, b in res.subgraph.edges:
            out.write("%s %s\n" % (_label(a), _label(b)))
    return 0


def cmd_forest(args, out):
    res = run_pipeline(_load(args.file))
    forest = res.forest
    if args.dot:
        edges = [e for tree in forest.tree_edges for e in tree]
        _dot("spanning_forest", res.family.m, edges, out)
    elif args.json:
        payload = _json_payload(res)
        payload["forest"] = [
            {"root": r + 1, "edges": [[a + 1, b + 1] for a, b in tree]}
            for r, tree in zip(forest.roots, forest.tree_edges)
        ]
        _print_json(payload, out)
    else:
        for r, tree in zip(forest.roots, forest.tree_edges):
            parts = " ".join("%s-%s" % (_label(a), _label(b)) for a, b in tree)
            out.write("tree %s: %s\n" % (_label(r), parts))
    return 0


def verify_result(res, full, oracle_max):
    """Compare a pipeline result against the oracle; returns (ok, report lines)."""
    lines = []
    ok = True

    fast = res.labeling.as_partition()
    slow = full.labeling.as_partition()
    if fast == slow:
        lines.append("classes: ok (%d classes)" % len(slow))
    else:
        ok = False
        lines.append("classes: MISMATCH")
        for c in sorted(map(sorted, fast - slow)):
            lines.append("  fast only: {%s}" % ", ".join(_label(i) for i in c))
        for c in sorted(map(sorted, slow - fast)):
            lines.append("  oracle only: {%s}" % ", ".join(_label(i) for i in c))

    if res.maxes.values == oracle_max.values:
        lines.append("max: ok")
    else:
        ok = False
        lines.append("max: MISMATCH")
        for i, (a, b) in enumerate(zip(res.maxes.values, oracle_max.values)):
            if a != b:
                lines.append("  %s: fast %s oracle %s" % (
                    _label(i),
                    "none" if a is None else _label(a),
                    "none" if b is None else _label(b)))

    sets = res.family.as_frozensets()
    bad = [(a, b) for a, b in res.subgraph.edges if not overlaps(sets[a], sets[b])]
    if not bad:
        lines.append("subgraph: ok (%d edges, all overlaps)" % len(res.subgraph.edges))
    else:
        ok = False
        lines.append("subgraph: MISMATCH")
        for a, b in bad:
            lines.append("  non-overlap edge %s %s" % (_label(a), _label(b)))
    return ok, lines


def cmd_verify(args, out):
    f = _load(args.file)
    try:
        full = overlap_graph_full(f)
    except OracleCapExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    res = run_pipeline(f)
    from .family import lf_order
    ok, lines = verify_result(res, full, max_oracle(f, lf_order(f)))
    for line in lines:
        out.write(line + "\n")
    out.write("PASS\n" if ok else "FAIL\n")
    return 0 if ok else 1


def cmd_gen(args, out):
    try:
        if args.kind == "star":
            text = gen_star(args.m)
        elif args.kind == "nested":
            text = gen_nested(args.k)
        elif args.kind == "random":
            text = gen_random(args.n, args.m, args.seed,
                              max_size=args.max_size)
        else:
            text = gen_blocks(args.n, args.m, args.blocks, args.seed)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def bench_one(target, seed, repeats=2):
    """Time one random instance of roughly |F| = target.

    The target maps to about target/8 sets of mean size 8. GC is paused
    around the timed region to keep the numbers honest, and of the
    repeated runs the one with the smallest total is kept, which damps
    scheduling noise. Returns the per-stage wall times of that run plus
    the instance's exact total size.
    """
    m = max(1, target // 8)
    n = max(4, m // 2)
    sets = gen_random_sets(n, m, seed, min_size=2, max_size=14)
    f = SetFamily(["e%d" % i for i in range(n)], sets, validate=False)
    best = None
    for _ in range(repeats):
        gc.collect()
        gc.disable()
        try:
            res = run_pipeline(f)
        finally:
            gc.enable()
        if best is None or res.times["total"] < best["total"]:
            best = dict(res.times)
        del res
    best["total_size"] = f.total_size
    return best


def bench_rows(sizes, seed, isolate=False):
    """Run the pipeline on random instances of the requested |F| targets.

    Returns one row per instance with the per-stage wall times and the
    ratio of consecutive total times (empty for the first row). With
    isolate=True each instance runs in a fresh interpreter so no
    allocator or cache state leaks from one measurement into the next.
    """
    rows = []
    prev_total = None
    for target in sizes:
        if isolate:
            script = ("import json, sys; from overlap.cli import bench_one; "
                      "json.dump(bench_one(int(sys.argv[1]), int(sys.argv[2])),"
                      " sys.stdout)")
            proc = subprocess.run(
                [sys.executable, "-c", script, str(target), str(seed)],
                capture_output=True, text=True, check=True)
            t = json.loads(proc.stdout)
        else:
            t = bench_one(target, seed)
        ratio = "" if prev_total is None else "%.3f" % (t["total"] / prev_total)
        prev_total = t["total"]
        rows.append({
            "total_size": t["total_size"],
            "orders": t["orders"],
            "maxcomp": t["maxcomp"],
            "dgraph": t["dgraph"],
            "subgraph": t["subgraph"],
            "forest": t["forest"],
            "total": t["total"],
            "ratio": ratio,
        })
    return rows


def cmd_bench(args, out):
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = bench_rows(sizes, args.seed, isolate=True)
    out.write(BENCH_HEADER + "\n")
    for r in rows:
        out.write("%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%s\n" % (
            r["total_size"], r["orders"], r["maxcomp"], r["dgraph"],
            r["subgraph"], r["forest"], r["total"], r["ratio"]))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="overlap",
        description="Identify overlap classes of a set family in linear time.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_cmd(name, func, help_, dot=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="family input file")
        p.add_argument("--json", action="store_true", help="JSON output")
        if dot:
            p.add_argument("--dot", action="store_true", help="DOT output")
        p.set_defaults(func=func)
        return p

    add_family_cmd("classes", cmd_classes, "overlap class of every set")
    add_family_cmd("max", cmd_max, "Max partner of every set")
    add_family_cmd("subgraph", cmd_subgraph,
                   "linear-size subgraph of the overlap graph", dot=True)
    add_family_cmd("forest", cmd_forest,
                   "spanning forest of the overlap classes", dot=True)

    p = sub.add_parser("verify", help="differential check against the brute-force oracle")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a family file")
    p.add_argument("kind", choices=["star", "nested", "random", "blocks"])
    p.add_argument("--m", type=int, default=10, help="number of sets")
    p.add_argument("--n", type=int, default=20, help="universe size")
    p.add_argument("--k", type=int, default=3, help="chain length (nested)")
    p.add_argument("--blocks", type=int, default=2, help="block count (blocks)")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="per-stage wall times over growing instances")
    p.add_argument("--sizes",
                   default="131072,262144,524288,1048576,2097152,4194304",
                   help="comma-separated |F| targets")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out if out is not None else sys.stdout)
    except SystemExit as exc:
        return exc.code


def entry():
    raise SystemExit(main())
