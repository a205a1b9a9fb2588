"""Batch benchmark runner and CSV/figure output."""

from concurrent.futures import ProcessPoolExecutor
import csv
import os
import time

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .complexity import VERDICTS, classify  # noqa: E402
from .dispatch import component_diameter, solve  # noqa: E402
from .errors import HomError  # noqa: E402
from .formats import load_instance  # noqa: E402
from .oracle import DEFAULT_CAP, GeneratorConfig, brute_force_lhom, random_instance  # noqa: E402

BENCH_FIELDS = ["index", "source", "n", "k", "d", "algorithm", "answer", "wall_s",
                "nodes_expanded", "mu_root", "agreement"]
CLASSIFY_FIELDS = ["k", "d", "verdict"]
VERDICT_COLORS = {"poly": "#b3e6b3", "subexp": "#b3ecf2", "open": "#ffffff", "eth_hard": "#f2b3b3"}


def bench_row(index, source, inst, alg="auto", region="graph", check=True, cap=DEFAULT_CAP):
    row = {"index": index, "source": source, "n": inst.graph.n,
           "k": getattr(inst.target, "k", ""), "d": component_diameter(inst.graph)}
    start = time.perf_counter()
    try:
        rep = solve(inst, alg, region=region, cap=cap)
    except HomError as exc:
        row.update(algorithm=alg, answer=f"error:{type(exc).__name__}",
                   wall_s=f"{time.perf_counter() - start:.6f}", nodes_expanded="", mu_root="",
                   agreement="skipped")
        return row
    wall = time.perf_counter() - start
    st = rep["stats"]
    row.update(algorithm=rep["algorithm"], answer=rep["answer"], wall_s=f"{wall:.6f}",
               nodes_expanded=st.get("nodes_expanded", st.get("nodes", "")),
               mu_root=st.get("mu_root", ""))
    if not check or inst.graph.n > cap:
        row["agreement"] = "skipped"
    elif rep["algorithm"] == "oracle":
        row["agreement"] = "self"
    else:
        truth = brute_force_lhom(inst, cap=cap) is not None
        row["agreement"] = "match" if truth == (rep["answer"] == "YES") else "MISMATCH"
    return row


def _job(args):
    index, source, cfg, alg, region, check = args
    inst = load_instance(source) if cfg is None else random_instance(cfg)
    return bench_row(index, source, inst, alg, region, check)


def bench_jobs(count=0, base=None, directory=None):
    """Job list: ``count`` generator configs with seeds base.seed..base.seed+count-1,
    or one job per ``*.json`` file in ``directory``."""
    if directory is not None:
        names = sorted(f for f in os.listdir(directory) if f.endswith(".json"))
        return [(i, os.path.join(directory, f), None) for i, f in enumerate(names)]
    base = base or GeneratorConfig()
    out = []
    for i in range(count):
        cfg = GeneratorConfig(**{**base.__dict__, "seed": base.seed + i})
        out.append((i, f"seed={cfg.seed}", cfg))
    return out


def run_bench(jobs, alg="auto", region="graph", check=True, workers=1):
    work = [(i, src, cfg, alg, region, check) for i, src, cfg in jobs]
    if workers > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_job, work))
    else:
        rows = [_job(w) for w in work]
    return sorted(rows, key=lambda r: r["index"])


def write_csv(path, rows, fields):
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields)
        w.writeheader()
        for r in rows:
            w.writerow({f: r.get(f, "") for f in fields})


def figure_path(csv_path):
    root, _ = os.path.splitext(csv_path)
    return root + ".png"


def plot_bench(rows, path):
    fig, ax = plt.subplots(figsize=(6, 4))
    algs = sorted({r["algorithm"] for r in rows})
    for alg in algs:
        pts = [(r["n"], float(r["wall_s"])) for r in rows if r["algorithm"] == alg]
        ax.scatter([p[0] for p in pts], [max(p[1], 1e-6) for p in pts], label=alg, s=14, alpha=0.7)
    ax.set_yscale("log")
    ax.set_xlabel("live vertices n")
    ax.set_ylabel("wall time [s]")
    if algs:
        ax.legend(frameon=False)
    else:
        ax.text(0.5, 0.5, "no instances", ha="center", va="center", transform=ax.transAxes)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def classify_rows(ks, ds):
    return [{"k": k, "d": d, "verdict": classify(k, d).verdict} for k in ks for d in ds]


def plot_classify(rows, path):
    ks = sorted({r["k"] for r in rows})
    ds = sorted({r["d"] for r in rows})
    cell = {(r["k"], r["d"]): r["verdict"] for r in rows}
    fig, ax = plt.subplots(figsize=(0.6 * len(ds) + 1.5, 0.5 * len(ks) + 1.2))
    for yi, k in enumerate(ks):
        for xi, d in enumerate(ds):
            v = cell[(k, d)]
            ax.add_patch(plt.Rectangle((xi, yi), 1, 1, facecolor=VERDICT_COLORS[v], edgecolor="#999999"))
            if v == "open":
                ax.text(xi + 0.5, yi + 0.5, "?", ha="center", va="center")
    ax.set_xlim(0, len(ds))
    ax.set_ylim(len(ks), 0)
    ax.set_xticks([x + 0.5 for x in range(len(ds))], [str(d) for d in ds])
    ax.set_yticks([y + 0.5 for y in range(len(ks))], [str(k) for k in ks])
    ax.set_xlabel("diameter d")
    ax.set_ylabel("k")
    handles = [plt.Rectangle((0, 0), 1, 1, facecolor=VERDICT_COLORS[v], edgecolor="#999999") for v in VERDICTS]
    ax.legend(handles, VERDICTS, ncol=4, frameon=False, loc="upper center", bbox_to_anchor=(0.5, -0.25))
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
