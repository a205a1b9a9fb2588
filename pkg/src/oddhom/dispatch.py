"""Pick and run a solver for one instance, and package the outcome."""

import time

from .complexity import classify
from .errors import PreconditionViolated, StructuralAssertionFailed
from .graph import diameter
from .instance import CycleTarget, GeneralTarget
from .oracle import DEFAULT_CAP, brute_force_lhom, verify_hom
from .poly import solve_diameter_k_plus_1
from .subexp import solve_c5_diameter_5, solve_diameter_k_plus_2
from .trianglefree import check_target_size, solve_triangle_free

ALGORITHMS = ("auto", "poly", "subexp", "c5", "trifree", "oracle")


def component_diameter(g):
    """Largest diameter over the connected components (0 for an empty graph)."""
    best = 0
    for comp in g.components():
        best = max(best, diameter(g.subgraph(comp)))
    return best


def choose_algorithm(inst):
    """``(algorithm, warning or None)`` for ``--alg auto``."""
    d = component_diameter(inst.graph)
    t = inst.target
    if isinstance(t, GeneralTarget):
        if t.triangle_free and d <= 2:
            return "trifree", None
        return "oracle", "no dedicated algorithm for this target and diameter; using exhaustive search"
    k = t.k
    if k >= 2 and d <= k + 1:
        return "poly", None
    if k >= 2 and d == k + 2:
        return "subexp", None
    if k == 2 and d == 5:
        return "c5", None
    verdict = classify(k, max(d, 2)).verdict
    return "oracle", f"k={k}, d={d} is {verdict}; no algorithm implemented here, using exhaustive search"


def run_solver(inst, alg, force=False, cap=DEFAULT_CAP, region="graph", tree=None):
    """Returns ``(witness or None, stats)``; raises the solver's errors unchanged."""
    stats = {}
    if alg == "poly":
        w = solve_diameter_k_plus_1(inst, stats)
    elif alg == "subexp":
        w = solve_diameter_k_plus_2(inst, stats, tree, region)
    elif alg == "c5":
        w = solve_c5_diameter_5(inst, stats, tree, region)
    elif alg == "trifree":
        if not isinstance(inst.target, GeneralTarget):
            raise PreconditionViolated("trifree needs an explicit target graph (--target-file)")
        check_target_size(inst.target)
        w = solve_triangle_free(inst, stats)
    elif alg == "oracle":
        w = brute_force_lhom(inst, cap=cap, force=force, stats=stats)
    else:
        raise PreconditionViolated(f"unknown algorithm {alg!r}")
    return w, stats


def solve(inst, alg="auto", force=False, cap=DEFAULT_CAP, region="graph", tree=None):
    """Solve and return a report dict (witness kept as a dict)."""
    warnings = []
    chosen = alg
    if alg == "auto":
        chosen, warn = choose_algorithm(inst)
        if warn:
            warnings.append(warn)
    start = time.perf_counter()
    w, stats = run_solver(inst, chosen, force, cap, region, tree)
    elapsed = time.perf_counter() - start
    if w is not None and not verify_hom(inst.graph, inst.target, inst.lists, w):
        raise StructuralAssertionFailed(f"{chosen} returned an invalid witness")
    return {
        "answer": "YES" if w is not None else "NO",
        "witness": w,
        "algorithm": chosen,
        "requested": alg,
        "n": inst.graph.n,
        "k": inst.target.k if isinstance(inst.target, CycleTarget) else None,
        "diameter": component_diameter(inst.graph),
        "timings": {"solve_s": elapsed},
        "stats": stats,
        "warnings": warnings,
    }
