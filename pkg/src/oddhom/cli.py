"""Command-line front end.

Exit codes: 0 YES (or success), 1 NO, 2 usage or precondition error,
3 internal structural assertion.
"""

import argparse
import json
import sys

from . import formats
from .complexity import classify
from .dispatch import ALGORITHMS, solve
from .errors import HomError, Infeasible, StructuralAssertionFailed
from .hardness import build_hardness_instance, check_radius
from .oracle import DEFAULT_CAP, GeneratorConfig, brute_force_lhom, random_instance
from .reductions import reduce_exhaustively
from .report import (
    BENCH_FIELDS, CLASSIFY_FIELDS, bench_jobs, classify_rows, figure_path, plot_bench,
    plot_classify, run_bench, write_csv,
)
from .subexp import REGIONS, TreeLog

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _emit(obj, path=None):
    if path:
        formats.write_json(path, obj)
    else:
        json.dump(obj, sys.stdout, indent=1)
        sys.stdout.write("\n")


def _load(args):
    with open(args.instance) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise formats.FormatError(f"{args.instance}: {exc}") from None
    if getattr(args, "target_file", None):
        with open(args.target_file) as fh:
            t = json.load(fh)
        obj = {key: val for key, val in obj.items() if key != "k"}
        obj["target"] = t.get("target", t)
    return formats.instance_from_json(obj)


def cmd_solve(args):
    inst = _load(args)
    tree = TreeLog() if args.emit_tree else None
    rep = solve(inst, args.alg, force=args.force, cap=args.cap, region=args.region, tree=tree)
    for w in rep["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    if tree is not None:
        formats.write_json(args.emit_tree, {"nodes": tree.nodes})
    if rep["witness"] is not None:
        rep["witness"] = formats.witness_to_json(rep["witness"])
        if args.witness_out:
            formats.write_json(args.witness_out, rep["witness"])
    _emit(rep, args.out)
    return EXIT_YES if rep["answer"] == "YES" else EXIT_NO


def cmd_reduce(args):
    inst = _load(args)
    log = []
    try:
        red = reduce_exhaustively(inst, log=log)
    except Infeasible as exc:
        _emit({"answer": "NO", "rule": exc.rule, "detail": exc.detail, "changelog": log}, args.out)
        return EXIT_NO
    compacted, idx = formats.compact(red)
    mm = red.graph.merge_map()
    _emit({
        "instance": formats.instance_to_json(compacted),
        "vertex_map": {str(v): idx[r] for v, r in mm.items()},
        "changelog": log,
    }, args.out)
    return EXIT_YES


def cmd_classify(args):
    if args.k is not None and args.d is not None:
        print(classify(args.k, args.d).verdict)
        return EXIT_YES
    ks = range(1, args.max_k + 1)
    ds = range(2, args.max_d + 1)
    rows = classify_rows(ks, ds)
    width = max(len("eth_hard"), 3)
    print("k\\d " + " ".join(f"{d:>{width}}" for d in ds))
    for k in ks:
        cells = [r["verdict"] for r in rows if r["k"] == k]
        print(f"{k:<4}" + " ".join(f"{c:>{width}}" for c in cells))
    if args.csv:
        write_csv(args.csv, rows, CLASSIFY_FIELDS)
        plot_classify(rows, figure_path(args.csv))
    return EXIT_YES


def cmd_generate_hard(args):
    with open(args.cnf) as fh:
        phi = formats.parse_dimacs(fh.read())
    gadget = build_hardness_instance(phi, args.k)
    if not check_radius(gadget):
        raise StructuralAssertionFailed("generated gadget has radius above k+1 from v1")
    _emit(formats.instance_to_json(gadget.instance(), landmarks=gadget.landmarks), args.out)
    return EXIT_YES


def _config(args):
    return GeneratorConfig(n=args.n, edge_prob=args.edge_prob, min_diameter=args.min_diameter,
                           max_diameter=args.max_diameter, k=args.k, list_density=args.density,
                           seed=args.seed, planted=args.planted, max_attempts=args.max_attempts)


def cmd_generate_random(args):
    inst = random_instance(_config(args))
    _emit(formats.instance_to_json(inst), args.out)
    return EXIT_YES


def cmd_oracle(args):
    inst = _load(args)
    stats = {}
    w = brute_force_lhom(inst, cap=args.cap, force=args.force, stats=stats)
    out = {"answer": "YES" if w is not None else "NO", "nodes": stats.get("nodes", 0),
           "witness": formats.witness_to_json(w) if w is not None else None}
    _emit(out, args.out)
    return EXIT_YES if w is not None else EXIT_NO


def cmd_bench(args):
    if args.instances:
        jobs = bench_jobs(directory=args.instances)
    else:
        jobs = bench_jobs(args.count, _config(args))
    rows = run_bench(jobs, args.alg, args.region, check=not args.no_check, workers=args.jobs)
    write_csv(args.out, rows, BENCH_FIELDS)
    plot_bench(rows, figure_path(args.out))
    bad = sum(r["agreement"] == "MISMATCH" for r in rows)
    print(f"{len(rows)} rows -> {args.out} ({bad} mismatches)")
    return EXIT_INTERNAL if bad else EXIT_YES


def _add_generator_args(p):
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", type=float, default=0.3)
    p.add_argument("--min-diameter", type=int, default=0)
    p.add_argument("--max-diameter", type=int, default=10**9)
    p.add_argument("--density", type=float, default=1.0, help="probability of each color in a list")
    p.add_argument("--planted", action="store_true", help="keep only edges compatible with a hidden coloring")
    p.add_argument("--max-attempts", type=int, default=2000)


def build_parser():
    ap = argparse.ArgumentParser(prog="oddhom", description="List homomorphisms to odd cycles on bounded-diameter graphs.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("solve", help="decide an instance")
    p.add_argument("instance")
    p.add_argument("--alg", choices=ALGORITHMS, default="auto")
    p.add_argument("--target-file", help="JSON target graph {n, edges}, replaces the instance target")
    p.add_argument("--emit-tree", metavar="FILE", help="write the branching tree as JSON")
    p.add_argument("--region", choices=REGIONS, default="graph")
    p.add_argument("--force", action="store_true", help="let the oracle exceed its size cap")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out")
    p.add_argument("--witness-out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="apply the reduction rules and print the reduced instance")
    p.add_argument("instance")
    p.add_argument("--target-file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("classify", help="complexity of Hom(C_2k+1) on diameter-d graphs")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--max-d", type=int, default=12)
    p.add_argument("--csv", help="write the grid as CSV plus a PNG table next to it")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate-hard", help="gadget graph from a 3-CNF formula")
    p.add_argument("--cnf", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate_hard)

    p = sub.add_parser("generate-random", help="seeded random instance")
    _add_generator_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate_random)

    p = sub.add_parser("oracle", help="exhaustive search")
    p.add_argument("instance")
    p.add_argument("--target-file")
    p.add_argument("--force", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="run a batch and write CSV plus a PNG")
    _add_generator_args(p)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--instances", help="directory of instance JSON files (instead of generating)")
    p.add_argument("--alg", choices=ALGORITHMS, default="auto")
    p.add_argument("--region", choices=REGIONS, default="graph")
    p.add_argument("--no-check", action="store_true", help="skip the oracle agreement column")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="bench.csv")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StructuralAssertionFailed as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (HomError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
