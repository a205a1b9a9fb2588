"""Polynomial list-homomorphism solver to C_{2k+1} on graphs of diameter at most k+1.

Outline for one connected component:

1. If some color can be avoided, the problem is a list homomorphism to a path.
2. Otherwise every homomorphism is onto, so we guess vertices c_0..c_2k that
   take colors 0..2k, add the cycle edges between them and reduce.
3. In the reduced instance all lists have at most three colors and every
   3-list is {i-1, i, i+1}.  In each component S of G[V3], whether a vertex
   takes its middle color decides the same for all of S; this splits S into two
   parts and gives two width-2 subinstances I_1(S), I_2(S).
4. A width-2 binary CSP over V1 and V2 with extra constraints encodes which
   side each S realizes, and is solved through 2-SAT.
"""

from .consistency import PathTarget, solve_bcsp_width2, solve_lhom_path
from .errors import DiameterTooLarge, Infeasible, PreconditionViolated, StructuralAssertionFailed
from .graph import diameter
from .instance import (
    CycleTarget, LHomInstance, bcsp_from_lhom, colors_of, common_neighbor_in_list, mask_of,
    middle_color, popcount, pull_back,
)
from .reductions import iter_anchorings, reduce_exhaustively


def _require_cycle_target(inst, min_k=2):
    if not isinstance(inst.target, CycleTarget):
        raise PreconditionViolated("this solver needs an odd-cycle target")
    if inst.target.k < min_k:
        raise PreconditionViolated(
            f"k={inst.target.k} is not supported: a polynomial algorithm here would also "
            "decide 3-coloring on graphs of bounded diameter")


def check_diameter(inst, bound):
    """Raise :class:`DiameterTooLarge` if some component is wider than ``bound``."""
    for comp in inst.graph.components():
        d = diameter(inst.graph.subgraph(comp))
        if d > bound:
            raise DiameterTooLarge(d, bound)


# -- step 1: color avoidance -------------------------------------------------------

def check_color_avoidance(inst, i):
    """A list homomorphism that never uses color ``i``, or ``None``.

    Removing ``i`` from C_{2k+1} leaves the path i+1, i+2, ..., i+2k.
    """
    t = inst.target
    path = PathTarget(t.size - 1)
    lists = {}
    for v, m in inst.lists.items():
        p = 0
        for c in colors_of(m):
            if c != i:
                p |= 1 << ((c - i - 1) % t.size)
        lists[v] = p
    found = solve_lhom_path(inst.graph, lists, path)
    if found is None:
        return None
    return {v: (i + 1 + p) % t.size for v, p in found.items()}


def solve_avoiding_some_color(inst):
    for i in inst.target.colors():
        w = check_color_avoidance(inst, i)
        if w is not None:
            return w
    return None


# -- step 2: cycle guesses -----------------------------------------------------------

def iter_cycle_guesses(inst):
    """Yield ``(instance, cycle)`` for every guess of vertices colored 0..2k.

    Meant for instances where every homomorphism is onto, so some homomorphism
    always survives in one of the guesses (see :func:`iter_anchorings`).
    """
    for guess, anchors in iter_anchorings(inst, inst.target.colors()):
        yield guess, [anchors[j] for j in inst.target.colors()]


# -- step 3: components of G[V3] -----------------------------------------------------

def middle_partition(g, component, lists, target):
    """Split a connected set of {i-1,i,i+1}-list vertices into two parts.

    Returns ``{v: 1 or 2}`` such that in every list homomorphism either all of
    part 1 take their middle color and none of part 2 does, or the reverse.
    Neighbors with the same list go to opposite parts, neighbors whose list is
    shifted by one go to the same part.  Returns ``None`` if no consistent
    labelling exists (then there is no homomorphism).
    """
    comp = set(component)
    start = min(comp)
    part = {start: 1}
    order = [start]
    mids = {v: middle_color(lists[v], target) for v in comp}
    for v, mid in mids.items():
        if mid is None:
            raise StructuralAssertionFailed(f"list of {v} is not three consecutive colors")
    idx = 0
    while idx < len(order):
        u = order[idx]
        idx += 1
        for w in sorted(g.adj[u] & comp):
            rel = _relation(mids[u], mids[w], target)
            want = part[u] if rel == "shift" else 3 - part[u]
            if w not in part:
                part[w] = want
                order.append(w)
            elif part[w] != want:
                return None
    return part


def _relation(a, b, target):
    if a == b:
        return "same"
    if target.add(a, 1) == b or target.add(b, 1) == a:
        return "shift"
    raise StructuralAssertionFailed(f"adjacent 3-lists with middles {a} and {b}")


def component_subinstances(inst, component, part):
    """``(I_1, I_2)``: in ``I_p`` part ``p`` takes middle colors and the other part avoids them."""
    t = inst.target
    g = inst.graph.subgraph(component)
    out = []
    for p in (1, 2):
        lists = {}
        for v in component:
            mid = middle_color(inst.lists[v], t)
            if part[v] == p:
                lists[v] = 1 << mid
            else:
                lists[v] = mask_of((t.add(mid, -1), t.add(mid, 1)))
        out.append(LHomInstance(g, t, lists))
    return tuple(out)


def solve_width2(inst):
    """Coloring of an instance whose lists have at most two colors, or ``None``."""
    if not inst.lists:
        return {}
    if any(not m for m in inst.lists.values()):
        return None
    return solve_bcsp_width2(bcsp_from_lhom(inst))


# -- step 4: the binary CSP ----------------------------------------------------------

def build_poly_bcsp(inst, components, parts, feasible):
    """Binary CSP over V1 and V2 equivalent to the reduced instance.

    ``feasible[s]`` is a pair of booleans telling whether ``I_1`` / ``I_2`` of
    component ``s`` have a solution.  Returns ``None`` if a list runs empty.
    """
    t = inst.target
    lists = inst.lists
    g = inst.graph
    low = [v for v in sorted(lists) if popcount(lists[v]) <= 2]
    sub = LHomInstance(g.subgraph(low), t, {v: lists[v] for v in low})
    b = bcsp_from_lhom(sub)
    v2 = {v for v in low if popcount(lists[v]) == 2}

    def v2_nbrs(v):
        return sorted(g.adj[v] & v2)

    for comp in components:
        for v in comp:
            nb = v2_nbrs(v)
            for x in range(len(nb)):
                for y in range(x + 1, len(nb)):
                    lv = lists[v]
                    b.restrict_pairs(nb[x], nb[y],
                                     lambda a, c, lv=lv: common_neighbor_in_list((a, c), lv, t) is not None)

    for s, comp in enumerate(components):
        part = parts[s]
        mid = {v: middle_color(lists[v], t) for v in comp}
        for p in (1, 2):
            if feasible[s][p - 1]:
                continue
            for v in comp:
                i = mid[v]
                if part[v] == p:
                    drop = mask_of((t.add(i, -1), t.add(i, 1)))
                else:
                    drop = 1 << i
                for w in v2_nbrs(v):
                    b.lists[w] &= ~drop
        for u in comp:
            j = mid[u]
            nu = v2_nbrs(u)
            if not nu:
                continue
            for v in comp:
                i = mid[v]
                nv = v2_nbrs(v)
                if part[u] == part[v]:
                    removed = [(j, t.add(i, 1)), (j, t.add(i, -1)), (t.add(j, -1), i), (t.add(j, 1), i)]
                else:
                    removed = [(j, i)] + [(t.add(j, dj), t.add(i, di)) for dj in (-1, 1) for di in (-1, 1)]
                for u2 in nu:
                    for v2_ in nv:
                        if u2 == v2_:
                            for a, c in removed:
                                if a == c:
                                    b.lists[u2] &= ~(1 << a)
                        else:
                            b.remove_pairs(u2, v2_, removed)

    if any(not m for m in b.lists.values()):
        return None
    return b


def solve_reduced_with_cycle(inst):
    """Decide a reduced instance that contains a precolored (2k+1)-cycle.

    Returns a coloring of the live vertices or ``None``.  Raises
    :class:`StructuralAssertionFailed` if the list structure the method relies
    on does not hold.
    """
    t = inst.target
    g = inst.graph
    lists = inst.lists
    v3 = []
    for v in sorted(lists):
        c = popcount(lists[v])
        if c > 3:
            raise StructuralAssertionFailed(f"vertex {v} has {c} colors left")
        if c == 3:
            if middle_color(lists[v], t) is None:
                raise StructuralAssertionFailed(f"list {colors_of(lists[v])} of {v} is not consecutive")
            v3.append(v)
    v3set = set(v3)
    for v in v3:
        i = middle_color(lists[v], t)
        ok = (mask_of((t.add(i, -1), i)), mask_of((i, t.add(i, 1))))
        for w in g.adj[v]:
            if w in v3set:
                continue
            if lists[w] not in ok:
                raise StructuralAssertionFailed(
                    f"neighbor {w} of {v} has list {colors_of(lists[w])} next to middle {i}")

    components = g.subgraph(v3).components() if v3 else []
    parts = []
    sols = []
    feasible = []
    for comp in components:
        part = middle_partition(g, comp, lists, t)
        if part is None:
            return None
        i1, i2 = component_subinstances(inst, comp, part)
        s1, s2 = solve_width2(i1), solve_width2(i2)
        if s1 is None and s2 is None:
            return None
        parts.append(part)
        sols.append((s1, s2))
        feasible.append((s1 is not None, s2 is not None))

    b = build_poly_bcsp(inst, components, parts, feasible)
    if b is None:
        return None
    f = solve_bcsp_width2(b) if b.lists else {}
    if f is None:
        return None

    coloring = dict(f)
    for s, comp in enumerate(components):
        realized = None
        for v in comp:
            nb = [w for w in g.adj[v] if w in f]
            if nb:
                i = middle_color(lists[v], t)
                is_middle = f[nb[0]] != i
                realized = parts[s][v] if is_middle else 3 - parts[s][v]
                break
        if realized is None:
            realized = 1 if feasible[s][0] else 2
        sol = sols[s][realized - 1]
        if sol is None:
            raise StructuralAssertionFailed("realized side of a 3-list component has no solution")
        coloring.update(sol)

    for v, m in lists.items():
        if not (m >> coloring[v] & 1):
            raise StructuralAssertionFailed(f"assembled coloring breaks the list of {v}")
    for u, v in g.edges():
        if not t.adjacent(coloring[u], coloring[v]):
            raise StructuralAssertionFailed(f"assembled coloring breaks edge {u}{v}")
    return coloring


# -- drivers -------------------------------------------------------------------------

def solve_per_component(inst, solve_connected, stats=None):
    """Run ``solve_connected`` on each component and merge the witnesses."""
    witness = {}
    for comp in inst.graph.components():
        part = inst.restrict(comp)
        w = solve_connected(part, stats)
        if w is None:
            return None
        witness.update(w)
    return witness


def _solve_connected_poly(inst, stats):
    w = solve_avoiding_some_color(inst)
    if w is not None:
        return w
    for guess, cycle in iter_cycle_guesses(inst):
        if stats is not None:
            stats["guesses_tried"] = stats.get("guesses_tried", 0) + 1
        try:
            red = reduce_exhaustively(guess, cycle=cycle)
        except Infeasible:
            continue
        col = solve_reduced_with_cycle(red)
        if col is not None:
            full = pull_back(red.graph, col)
            return {v: full[v] for v in inst.graph.adj}
    return None


def solve_diameter_k_plus_1(inst, stats=None):
    """List homomorphism to C_{2k+1} for graphs of diameter at most k+1, or ``None``.

    The witness covers every live vertex of ``inst``.  ``stats`` (a dict) gets
    the number of cycle guesses examined.
    """
    _require_cycle_target(inst)
    check_diameter(inst, inst.target.k + 1)
    if stats is not None:
        stats.setdefault("guesses_tried", 0)
    return solve_per_component(inst, _solve_connected_poly, stats)
