"""Branch-and-reduce list homomorphism to C_{2k+1} on graphs of diameter k+2,
and to C_5 on graphs of diameter 5.

After the color-avoidance checks and a cycle guess (shared with the polynomial
solver), every instance is explored by a depth-first recursion tree:

* reduce; a NO ends the branch, and an instance without lists of size >= 2 is a leaf
* B1: if some vertex with >= 2 colors has at least (mu ln mu)^(1/d) neighbors
  that also have >= 2 colors, branch on "v gets color a" versus "v avoids a"
* B2: otherwise color every multi-color vertex near one chosen vertex in all
  possible ways; the children are leaves

Leaves are decided by :func:`solve_leaf`, which handles lists of size <= 2 and
lists {i-2, i, i+2} through a width-2 binary CSP.
"""

from collections import Counter, deque
import math

from .consistency import arc_consistent, solve_bcsp_width2
from .errors import Infeasible, PreconditionViolated, StructuralAssertionFailed
from .graph import _bfs
from .instance import (
    LHomInstance, bcsp_from_lhom, colors_of, common_neighbor_in_list, mask_of, popcount,
    pull_back, type_center,
)
from .poly import (
    _require_cycle_target, check_diameter, iter_cycle_guesses, solve_avoiding_some_color,
    solve_per_component,
)
from .reductions import reduce_exhaustively

REGIONS = ("graph", "list_subgraph")


def budget(inst):
    """mu: sum of list sizes over vertices with at least two colors."""
    return inst.budget()


def b1_threshold(mu, d):
    if mu <= 1:
        return 0.0
    return (mu * math.log(mu)) ** (1.0 / d)


# -- B1 ------------------------------------------------------------------------------

def choose_b1(inst, d):
    """``(v, a)`` for the first branching rule, or ``None`` if no vertex is dense enough."""
    t = inst.target
    lists = inst.lists
    thr = b1_threshold(budget(inst), d)
    multi = {v for v, m in lists.items() if popcount(m) >= 2}
    for v in sorted(multi):
        nb = inst.graph.adj[v] & multi
        if len(nb) < thr:
            continue
        freq = Counter()
        for w in nb:
            m = lists[w]
            if popcount(m) == 2:
                j = type_center(m, (2,), t)
                if j is not None:
                    freq[t.add(j, 1)] += 1
        if freq:
            top = max(freq.values())
            j = min(c for c, n in freq.items() if n == top)
            a = min(c for c in colors_of(lists[v]) if c != j)
        else:
            a = min(colors_of(lists[v]))
        return v, a
    return None


def branch_b1(inst, v, a):
    """``(v colored a, v avoiding a)``."""
    m = inst.lists[v]
    if not (m >> a & 1) or popcount(m) < 2:
        raise PreconditionViolated(f"cannot branch on color {a} of {v}")
    take = inst.copy()
    take.lists[v] = 1 << a
    skip = inst.copy()
    skip.lists[v] = m & ~(1 << a)
    return take, skip


# -- B2 ------------------------------------------------------------------------------

def b2_region(inst, v, d, region="graph"):
    """Multi-color vertices within distance ``d-1`` of ``v``.

    ``region="graph"`` measures distance in G; ``"list_subgraph"`` measures it in
    the subgraph induced by multi-color vertices.
    """
    if region not in REGIONS:
        raise PreconditionViolated(f"unknown region {region!r}")
    multi = {u for u, m in inst.lists.items() if popcount(m) >= 2}
    if region == "graph":
        dist = _bfs(inst.graph, v)
    else:
        dist = _bfs(inst.graph, v, within=multi)
    return sorted(u for u, du in dist.items() if du <= d - 1 and u in multi)


def iter_b2_children(inst, region_vertices, prune=True):
    """Children of B2 in lexicographic (vertex, color) order.

    With ``prune`` the partial assignment is kept arc consistent and dead
    prefixes are skipped; every surviving child is still one full assignment.
    """
    verts = list(region_vertices)
    t = inst.target
    adj = inst.graph.adj

    def rec(idx, lists):
        if idx == len(verts):
            child = LHomInstance(inst.graph, t, lists)
            yield child
            return
        v = verts[idx]
        for c in colors_of(lists[v]):
            nxt = dict(lists)
            nxt[v] = 1 << c
            if prune and arc_consistent(adj, nxt, t.support, [v]) is not None:
                continue
            yield from rec(idx + 1, nxt)

    yield from rec(0, dict(inst.lists))


def branch_b2(inst, v, d, region="graph"):
    """All list-respecting colorings of the B2 region around ``v``, one child each."""
    children = []
    for child in iter_b2_children(inst, b2_region(inst, v, d, region), prune=False):
        children.append(LHomInstance(inst.graph.copy(), inst.target, child.lists))
    return children


def distance_to_set(g, sources):
    dist = {s: 0 for s in sources}
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def pick_b2_vertex(inst, cycle, d):
    """Smallest multi-color vertex at distance >= ceil(d/2) from the cycle, else the smallest one."""
    multi = sorted(v for v, m in inst.lists.items() if popcount(m) >= 2)
    if not multi:
        raise PreconditionViolated("no vertex has two or more colors")
    dist = distance_to_set(inst.graph, [inst.graph.find(c) for c in cycle])
    far = math.ceil(d / 2)
    for v in multi:
        if dist.get(v, math.inf) >= far:
            return v
    return multi[0]


# -- leaves ----------------------------------------------------------------------------

def _leaf_shape(lists, target):
    """Centers of the {i-2, i, i+2} lists; raises if some list has another shape."""
    centers = {}
    for v, m in lists.items():
        c = popcount(m)
        if c <= 2:
            continue
        start = type_center(m, (2, 2), target) if c == 3 else None
        if start is None:
            raise PreconditionViolated(f"list {colors_of(m)} of {v} is neither small nor of type (2,2)")
        centers[v] = target.add(start, 2)
    return centers


def solve_leaf(inst):
    """Coloring of the live vertices, or ``None``.

    Every list must have at most two colors or be of the form {i-2, i, i+2}
    (raises :class:`PreconditionViolated` otherwise).  Each such vertex gets
    pendant neighbors with lists {i-1, i+1}, {i-3, i+1} and {i-1, i+3} where
    missing; these never change the answer and make the extension to the
    three-color vertices unique.
    """
    t = inst.target
    if t.k < 2:
        raise PreconditionViolated("leaf solving needs k >= 2")
    g = inst.graph.copy()
    lists = dict(inst.lists)
    if any(not m for m in lists.values()):
        return None
    if arc_consistent(g.adj, lists, t.support) is not None:
        return None
    centers = _leaf_shape(lists, t)
    originals = set(lists)

    for v in sorted(centers):
        i = centers[v]
        wanted = [mask_of((t.add(i, -1), t.add(i, 1))),
                  mask_of((t.add(i, -3), t.add(i, 1))),
                  mask_of((t.add(i, -1), t.add(i, 3)))]
        present = {lists[w] for w in g.adj[v]}
        for m in wanted:
            if m not in present:
                u = g._add_vertex()
                g._add_edge(u, v)
                lists[u] = m

    low = sorted(v for v in lists if v not in centers)
    sub = LHomInstance(g.subgraph(low), t, {v: lists[v] for v in low})
    b = bcsp_from_lhom(sub)
    lowset = set(low)
    for v in centers:
        lv = lists[v]
        nb = sorted(w for w in g.adj[v] if w in lowset)
        for w in nb:
            if popcount(lists[w]) < 2:
                raise PreconditionViolated(f"three-color vertex {v} has a precolored neighbor {w}")
        for x in range(len(nb)):
            for y in range(x + 1, len(nb)):
                b.restrict_pairs(nb[x], nb[y],
                                 lambda a, c, lv=lv: common_neighbor_in_list((a, c), lv, t) is not None)
    for u in sorted(centers):
        i = centers[u]
        for v in g.adj[u]:
            if v not in centers:
                continue
            if centers[v] == t.add(i, -1):
                continue  # handled from the other endpoint
            if centers[v] != t.add(i, 1):
                raise PreconditionViolated(f"adjacent lists centered at {i} and {centers[v]}")
            removed = [(t.add(i, -3), t.add(i, 2)), (t.add(i, -1), t.add(i, 4)), (t.add(i, 3), t.add(i, -2))]
            for u2 in sorted(g.adj[u] & lowset):
                for v2 in sorted(g.adj[v] & lowset):
                    if u2 == v2:
                        for a, c in removed:
                            if a == c:
                                b.lists[u2] &= ~(1 << a)
                    else:
                        b.remove_pairs(u2, v2, removed)
    if any(not m for m in b.lists.values()):
        return None
    f = solve_bcsp_width2(b) if b.lists else {}
    if f is None:
        return None

    coloring = dict(f)
    for v in sorted(centers):
        cand = lists[v]
        for w in g.adj[v]:
            if w in f:
                cand &= t.nbr[f[w]]
        if not cand:
            raise StructuralAssertionFailed(f"no color left for three-color vertex {v}")
        coloring[v] = colors_of(cand)[0]
    for u, v in g.edges():
        if not t.adjacent(coloring[u], coloring[v]):
            raise StructuralAssertionFailed(f"leaf coloring breaks edge {u}{v}")
    return {v: c for v, c in coloring.items() if v in originals}


# -- recursion tree --------------------------------------------------------------------

class TreeLog:
    """Optional record of the explored recursion tree (node id, parent, rule, mu)."""

    def __init__(self):
        self.nodes = []

    def add(self, parent, rule, mu=None, **extra):
        node = {"id": len(self.nodes), "parent": parent, "rule": rule, "mu": mu}
        node.update(extra)
        self.nodes.append(node)
        return node["id"]


def iter_leaves(inst, cycle, d, region="graph", tree=None, parent=None, stats=None):
    """Depth-first walk of the recursion tree below ``inst``; yields reduced leaf instances."""
    if stats is not None:
        stats["nodes_expanded"] = stats.get("nodes_expanded", 0) + 1
    try:
        red = reduce_exhaustively(inst, cycle=cycle)
    except Infeasible as exc:
        if tree is not None:
            tree.add(parent, "no", reason=exc.rule)
        return
    cyc = [red.graph.find(c) for c in cycle]
    mu = budget(red)
    if mu == 0:
        if tree is not None:
            tree.add(parent, "leaf", mu)
        yield red
        return
    pick = choose_b1(red, d)
    if pick is not None:
        v, a = pick
        me = tree.add(parent, "B1", mu, vertex=v, color=a) if tree is not None else None
        take, skip = branch_b1(red, v, a)
        yield from iter_leaves(take, cyc, d, region, tree, me, stats)
        yield from iter_leaves(skip, cyc, d, region, tree, me, stats)
        return
    v = pick_b2_vertex(red, cyc, d)
    area = b2_region(red, v, d, region)
    me = tree.add(parent, "B2", mu, vertex=v, region=area) if tree is not None else None
    for child in iter_b2_children(red, area):
        if stats is not None:
            stats["nodes_expanded"] = stats.get("nodes_expanded", 0) + 1
        try:
            leaf = reduce_exhaustively(LHomInstance(red.graph.copy(), red.target, child.lists), cycle=cyc)
        except Infeasible as exc:
            if tree is not None:
                tree.add(me, "no", reason=exc.rule)
            continue
        if tree is not None:
            tree.add(me, "leaf", budget(leaf))
        yield leaf


def _solve_leaf_checked(leaf):
    try:
        return solve_per_component(leaf, lambda part, _stats: solve_leaf(part))
    except PreconditionViolated as exc:
        raise StructuralAssertionFailed(f"leaf does not have the expected list shapes: {exc}") from exc


def _connected_solver(d, region, tree):
    def solve(inst, stats):
        root = tree.add(None, "component", budget(inst), vertices=sorted(inst.lists)) if tree is not None else None
        if stats is not None:
            stats.setdefault("mu_root", budget(inst))
        w = solve_avoiding_some_color(inst)
        if w is not None:
            if tree is not None:
                tree.add(root, "avoid-color")
            return w
        for guess, cycle in iter_cycle_guesses(inst):
            if stats is not None:
                stats["guesses_tried"] = stats.get("guesses_tried", 0) + 1
            me = tree.add(root, "guess", budget(guess), cycle=cycle) if tree is not None else None
            for leaf in iter_leaves(guess, cycle, d, region, tree, me, stats):
                if stats is not None:
                    stats["leaves"] = stats.get("leaves", 0) + 1
                col = _solve_leaf_checked(leaf)
                if col is not None:
                    full = pull_back(leaf.graph, col)
                    return {v: full[v] for v in inst.graph.adj}
        return None
    return solve


def solve_recursion_tree(inst, d, stats=None, tree=None, region="graph"):
    """Run the branch-and-reduce driver with branching distance ``d`` (no diameter check)."""
    _require_cycle_target(inst)
    if stats is not None:
        for key in ("guesses_tried", "nodes_expanded", "leaves"):
            stats.setdefault(key, 0)
    return solve_per_component(inst, _connected_solver(d, region, tree), stats)


def solve_diameter_k_plus_2(inst, stats=None, tree=None, region="graph"):
    """List homomorphism to C_{2k+1} for graphs of diameter at most k+2, or ``None``."""
    _require_cycle_target(inst)
    d = inst.target.k + 2
    check_diameter(inst, d)
    return solve_recursion_tree(inst, d, stats, tree, region)


def solve_c5_diameter_5(inst, stats=None, tree=None, region="graph"):
    """List homomorphism to C_5 for graphs of diameter at most 5, or ``None``."""
    _require_cycle_target(inst)
    if inst.target.k != 2:
        raise PreconditionViolated("the diameter-5 driver is specific to C_5")
    check_diameter(inst, 5)
    return solve_recursion_tree(inst, 5, stats, tree, region)
