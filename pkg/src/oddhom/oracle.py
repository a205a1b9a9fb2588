"""Ground truth: exhaustive list-homomorphism search, a certificate checker and
seeded random instance generators.

The search shares no code with the solvers beyond the data types, so agreement
between the two is meaningful.
"""

from dataclasses import dataclass
import random

from .errors import CapExceeded, GenerationTimeout, PreconditionViolated
from .graph import Graph, diameter
from .instance import CycleTarget, LHomInstance

DEFAULT_CAP = 14


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_force_lhom(inst, cap=DEFAULT_CAP, force=False, stats=None):
    """A list homomorphism of the live vertices, or ``None``.

    Backtracking with full arc-consistency maintenance after each decision,
    branching on a smallest undecided list.
    """
    g = inst.graph
    if g.n > cap and not force:
        raise CapExceeded(g.n, cap)
    nbr = inst.target.nbr
    adj = {v: tuple(nb) for v, nb in g.adj.items()}

    def support(mask):
        s = 0
        for x in _bits(mask):
            s |= nbr[x]
        return s

    def revise(doms, seeds):
        work = list(seeds)
        while work:
            u = work.pop()
            s = support(doms[u])
            for w in adj[u]:
                d = doms[w]
                nd = d & s
                if nd != d:
                    if not nd:
                        return False
                    doms[w] = nd
                    work.append(w)
        return True

    doms = dict(inst.lists)
    if any(not m for m in doms.values()):
        return None
    if not revise(doms, list(doms)):
        return None
    nodes = [0]

    def search(doms):
        nodes[0] += 1
        best = None
        for v, d in doms.items():
            if d & (d - 1):
                if best is None or d.bit_count() < doms[best].bit_count():
                    best = v
        if best is None:
            return doms
        for x in _bits(doms[best]):
            child = dict(doms)
            child[best] = 1 << x
            if revise(child, [best]):
                found = search(child)
                if found is not None:
                    return found
        return None

    found = search(doms)
    if stats is not None:
        stats["nodes"] = nodes[0]
    if found is None:
        return None
    return {v: m.bit_length() - 1 for v, m in found.items()}


def verify_hom(g, target, lists, w):
    """True iff ``w`` respects every list and maps every edge of ``g`` to an edge."""
    for v in g.adj:
        if v not in w:
            return False
        c = w[v]
        if not (0 <= c < target.size):
            return False
        if lists is not None and not (lists[v] >> c & 1):
            return False
    for u, v in g.edges():
        if not target.adjacent(w[u], w[v]):
            return False
    return True


# -- random instances --------------------------------------------------------------

@dataclass
class GeneratorConfig:
    n: int = 8
    edge_prob: float = 0.3
    min_diameter: int = 0
    max_diameter: int = 10**9
    k: int = 2
    target: object = None          # GeneralTarget; overrides k when given
    list_density: float = 1.0      # probability that each color is in a list
    seed: int = 0
    planted: bool = False          # only keep edges compatible with a hidden coloring
    planted_colors: tuple = None   # colors the hidden coloring may use (default: all)
    allow_empty: bool = False
    connected: bool = True
    max_attempts: int = 2000


def _target_of(cfg):
    return cfg.target if cfg.target is not None else CycleTarget(cfg.k)


def random_graph(rng, n, p, connected=True, compatible=None):
    """Random spanning tree (if ``connected``) plus independent extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    if connected:
        for idx in range(1, n):
            v = order[idx]
            choices = [u for u in order[:idx] if compatible is None or compatible(u, v)]
            if not choices:
                return None
            u = rng.choice(choices)
            edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p and (compatible is None or compatible(u, v)):
                edges.add((u, v))
    return Graph(n, sorted(edges))


def _respects(target, hidden):
    return lambda u, v: target.adjacent(hidden[u], hidden[v])


def random_instance(cfg):
    """Seeded random instance whose graph diameter lies in the configured window."""
    if cfg.n < 1:
        raise PreconditionViolated("n must be positive")
    rng = random.Random(cfg.seed)
    target = _target_of(cfg)
    for _ in range(cfg.max_attempts):
        hidden = compatible = None
        if cfg.planted:
            pool = list(cfg.planted_colors) if cfg.planted_colors else list(range(target.size))
            hidden = [rng.choice(pool) for _ in range(cfg.n)]
            compatible = _respects(target, hidden)
        g = random_graph(rng, cfg.n, cfg.edge_prob, cfg.connected, compatible)
        if g is None:
            continue
        d = diameter(g)
        if not (cfg.min_diameter <= d <= cfg.max_diameter):
            continue
        lists = {}
        for v in range(cfg.n):
            m = 0
            for x in range(target.size):
                if rng.random() < cfg.list_density:
                    m |= 1 << x
            if hidden is not None:
                m |= 1 << hidden[v]
            if not m and not cfg.allow_empty:
                m = 1 << rng.randrange(target.size)
            lists[v] = m
        return LHomInstance(g, target, lists)
    raise GenerationTimeout(f"no graph with diameter in [{cfg.min_diameter}, {cfg.max_diameter}] "
                            f"after {cfg.max_attempts} attempts")


def relabel(inst, perm):
    """Copy of ``inst`` with vertex ``v`` renamed to ``perm[v]``."""
    g = Graph(inst.graph.n, [(perm[u], perm[v]) for u, v in inst.graph.edges()])
    return LHomInstance(g, inst.target, {perm[v]: m for v, m in inst.lists.items()})

