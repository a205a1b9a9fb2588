"""Safe reduction rules for list homomorphism to odd cycles.

Every rule either shrinks the instance (fewer vertices or smaller lists) into an
equivalent one, or proves that no list homomorphism exists, in which case it
raises :class:`Infeasible`.

R1  an odd cycle of length at most 2k-1 means NO
R2  two (2k+1)-cycles sharing c0 and another vertex get identified along the
    forced rotation or reflection
R3  drop colors with no neighbor in an adjacent list (arc consistency)
R4  an empty list means NO
R5  drop a color dominated by another color of the same list
R6  merge two non-adjacent vertices with the same singleton list

The public ``apply_*`` helpers work on copies.  ``reduce_exhaustively`` runs all
of them to a fixpoint on a private copy.
"""

from .consistency import arc_consistent
from .errors import AdjacentIdentification, Infeasible, PreconditionViolated
from .graph import bfs_tree, shortest_odd_cycle, tree_path
from .instance import CycleTarget, colors_of, popcount


class _Reducer:
    """Mutable working state; owns ``inst`` outright."""

    def __init__(self, inst, cycle=None, log=None):
        self.inst = inst
        self.g = inst.graph
        self.lists = inst.lists
        self.target = inst.target
        self.cycle = list(cycle) if cycle is not None else None
        self.log = log
        self.dirty = set(self.g.adj)
        self.graph_changed = True

    def note(self, **entry):
        if self.log is not None:
            self.log.append(entry)

    # -- R3 / R4 --------------------------------------------------------------

    def propagate(self):
        for v, m in self.lists.items():
            if not m:
                raise Infeasible("R4", f"empty list at {v}")
        if not self.dirty:
            return
        queue = sorted(v for v in self.dirty if v in self.lists)
        self.dirty = set()
        before = dict(self.lists) if self.log is not None else None
        bad = arc_consistent(self.g.adj, self.lists, self.target.support, queue)
        if before is not None:
            for v in sorted(self.lists):
                if self.lists[v] != before[v]:
                    self.note(rule="R3", vertex=v, removed=colors_of(before[v] & ~self.lists[v]))
        if bad is not None:
            raise Infeasible("R4", f"empty list at {bad}")

    # -- identification helper ------------------------------------------------

    def merge(self, u, v, rule):
        u, v = self.g.find(u), self.g.find(v)
        if u == v:
            return u
        try:
            keep = self.g._identify(u, v)
        except AdjacentIdentification as exc:
            raise Infeasible(rule, f"would identify adjacent vertices {u} and {v}") from exc
        gone = v if keep == u else u
        lm = self.lists[u] & self.lists[v]
        del self.lists[gone]
        self.lists[keep] = lm
        self.note(rule=rule, merged=gone, into=keep)
        if not lm:
            raise Infeasible("R4", f"empty list after identifying {u} and {v}")
        self.dirty.add(keep)
        self.dirty.update(self.g.adj[keep])
        self.graph_changed = True
        return keep

    # -- R6 -------------------------------------------------------------------

    def merge_singletons(self):
        by_color = {}
        for v in sorted(self.lists):
            m = self.lists[v]
            if popcount(m) == 1:
                by_color.setdefault(m, []).append(v)
        changed = False
        for m, group in by_color.items():
            if len(group) < 2:
                continue
            for v in group[1:]:
                a, b = self.g.find(group[0]), self.g.find(v)
                if b in self.g.adj[a]:
                    raise Infeasible("R6", f"adjacent vertices {a}, {b} share singleton list {colors_of(m)}")
                self.merge(a, b, "R6")
                changed = True
        return changed

    # -- R1 / R2 ----------------------------------------------------------------

    def short_odd_cycle(self):
        if not isinstance(self.target, CycleTarget) or not self.graph_changed:
            return
        self.graph_changed = False
        if self.target.k < 2:
            return
        length = shortest_odd_cycle(self.g)
        if length is not None and length <= 2 * self.target.k - 1:
            raise Infeasible("R1", f"odd cycle of length {length}")

    def cycle_conflicts(self):
        """Look for a vertex that closes a short or competing odd cycle with C."""
        if self.cycle is None:
            return False
        k = self.target.k
        cyc = [self.g.find(c) for c in self.cycle]
        self.cycle = cyc
        on_cycle = set(cyc)
        for v in sorted(self.g.adj):
            if v in on_cycle:
                continue
            found = discover_conflicting_cycle(self.g, cyc, v, k)
            if found is None:
                continue
            i, other = found
            if len(other) < 2 * k + 1:
                raise Infeasible("R1", f"odd cycle of length {len(other)} through {v}")
            rotated = cyc[i:] + cyc[:i]
            self._identify_cycles(rotated, other)
            return True
        return False

    def _identify_cycles(self, ca, cb):
        plan = r2_plan(ca, cb)
        for a, b in plan:
            self.merge(a, b, "R2")
        self.cycle = [self.g.find(c) for c in self.cycle]

    # -- R5 -------------------------------------------------------------------

    def dominated_colors(self):
        changed = False
        nbr = self.target.nbr
        for u in sorted(self.lists):
            lu = self.lists[u]
            if popcount(lu) < 2:
                continue
            nb_lists = [self.lists[w] for w in self.g.adj[u]]
            for x in colors_of(lu):
                if not (self.lists[u] >> x & 1):
                    continue
                for y in colors_of(self.lists[u]):
                    if y == x:
                        continue
                    if all(nbr[x] & lw & ~nbr[y] == 0 for lw in nb_lists):
                        self.lists[u] &= ~(1 << x)
                        self.note(rule="R5", vertex=u, removed=[x], dominated_by=y)
                        self.dirty.add(u)
                        changed = True
                        break
        return changed

    def run(self):
        while True:
            self.propagate()
            if self.merge_singletons():
                continue
            self.short_odd_cycle()
            if self.cycle_conflicts():
                continue
            if self.dominated_colors():
                continue
            return self.inst


def discover_conflicting_cycle(g, cycle, v, k):
    """Odd cycle through ``v`` competing with the precolored cycle, or ``None``.

    Searches for ``i`` with ``dist(v, c_i) == dist(v, c_{i+1}) <= k``.  The two
    BFS-tree paths meet at a last common vertex ``u``; together with the edge
    ``c_i c_{i+1}`` they form an odd cycle.  Returns ``(i, cycle)`` where the
    cycle starts ``c_i, c_{i+1}`` and continues along the path back to ``c_i``.
    """
    n = len(cycle)
    dist, parent = bfs_tree(g, v)
    for i in range(n):
        a, b = cycle[i], cycle[(i + 1) % n]
        da, db = dist.get(a), dist.get(b)
        if da is None or da != db or da > k:
            continue
        pa = tree_path(parent, a)
        pb = tree_path(parent, b)
        t = 0
        while t + 1 < len(pa) and t + 1 < len(pb) and pa[t + 1] == pb[t + 1]:
            t += 1
        # pa[t] == pb[t] is the last common vertex
        down_b = pb[t:]              # u .. c_{i+1}
        down_a = pa[t:]              # u .. c_i
        out = [a] + list(reversed(down_b)) + down_a[1:-1]
        # out: c_i, c_{i+1}, ..., u, ..., (just before c_i)
        return i, out
    return None


def r2_plan(ca, cb):
    """Vertex pairs to identify for two odd cycles of equal length sharing ``ca[0] == cb[0]``.

    Raises :class:`Infeasible` when the shared vertices force incompatible maps.
    """
    n = len(ca)
    if len(cb) != n or n % 2 == 0:
        raise PreconditionViolated("R2 needs two odd cycles of the same length")
    if ca[0] != cb[0]:
        raise PreconditionViolated("R2 needs cycles sharing their first vertex")
    pos_b = {c: j for j, c in enumerate(cb)}
    shared = [(i, pos_b[c]) for i, c in enumerate(ca) if i and c in pos_b and pos_b[c]]
    if not shared:
        raise PreconditionViolated("R2 needs a second shared vertex")
    i, j = shared[0]
    if i == j:
        return [(ca[t], cb[t]) for t in range(1, n)]
    if (i + j) % n == 0:
        return [(ca[t], cb[(-t) % n]) for t in range(1, n)]
    raise Infeasible("R2", f"shared vertex sits at positions {i} and {j}")


# -- public single-rule helpers ----------------------------------------------------

def _copy(inst):
    return _Reducer(inst.copy())


def apply_r1(inst):
    if not isinstance(inst.target, CycleTarget):
        raise PreconditionViolated("R1 applies to odd-cycle targets")
    r = _copy(inst)
    r.short_odd_cycle()
    return r.inst


def apply_r2(inst, cycle_a, cycle_b):
    r = _copy(inst)
    for c in list(cycle_a) + list(cycle_b):
        if c not in r.g.adj:
            raise PreconditionViolated(f"{c} is not a live vertex")
    n = len(cycle_a)
    for cyc in (cycle_a, cycle_b):
        for t in range(n):
            if not r.g.has_edge(cyc[t], cyc[(t + 1) % n]):
                raise PreconditionViolated(f"{list(cyc)} is not a cycle of the graph")
    for a, b in r2_plan(list(cycle_a), list(cycle_b)):
        r.merge(a, b, "R2")
    return r.inst


def apply_r3(inst):
    r = _copy(inst)
    r.propagate()
    return r.inst


def apply_r4(inst):
    for v, m in inst.lists.items():
        if not m:
            raise Infeasible("R4", f"empty list at {v}")
    return inst.copy()


def apply_r5(inst):
    r = _copy(inst)
    while r.dominated_colors():
        pass
    return r.inst


def apply_r6(inst):
    r = _copy(inst)
    while r.merge_singletons():
        pass
    return r.inst


def reduce_exhaustively(inst, cycle=None, log=None):
    """Equivalent reduced copy of ``inst``; raises :class:`Infeasible` on NO.

    ``cycle`` lists the vertices ``c_0..c_2k`` of a precolored cycle in the
    graph; when given, competing short cycles found by BFS from each vertex
    trigger R1/R2.  Applied rules are appended to ``log`` if it is a list.
    """
    return _Reducer(inst.copy(), cycle, log).run()


def current_cycle(inst, cycle):
    """Representatives of the precolored cycle after identifications."""
    return [inst.graph.find(c) for c in cycle]


def is_reduced(inst):
    """Arc consistent, no empty lists, no equal singletons, no dominated colors."""
    lists = dict(inst.lists)
    if any(not m for m in lists.values()):
        return False
    if arc_consistent(inst.graph.adj, lists, inst.target.support) is not None or lists != inst.lists:
        return False
    singles = [m for m in lists.values() if popcount(m) == 1]
    if len(singles) != len(set(singles)):
        return False
    nbr = inst.target.nbr
    for u, lu in lists.items():
        for x in colors_of(lu):
            for y in colors_of(lu):
                if x != y and all(nbr[x] & lists[w] & ~nbr[y] == 0 for w in inst.graph.adj[u]):
                    return False
    return True



def iter_anchorings(inst, colors):
    """Yield ``(instance, anchors)`` for each way to pick one vertex per color.

    Each picked vertex gets a singleton list and edges to the already picked
    vertices of adjacent colors, then the instance is reduced.  Colors are
    handled fail-first: a vertex whose list already is ``{x}`` is taken without
    branching, otherwise the color with the fewest candidate vertices is
    branched on.  ``anchors`` maps color to live vertex.

    If every homomorphism of ``inst`` uses all of ``colors``, then so does every
    homomorphism of every reduced child, so a vertex of each missing color is
    always among the candidates: the enumeration loses no solution.
    """
    try:
        root = reduce_exhaustively(inst)
    except Infeasible:
        return
    yield from _extend_anchors(root, list(colors), {})


def _extend_anchors(inst, colors, anchors):
    t = inst.target
    g = inst.graph
    anchors = {x: g.find(v) for x, v in anchors.items()}
    if len(anchors) == len(colors):
        yield inst, anchors
        return
    taken = set(anchors.values())
    choice = None
    cands = {}
    for x in colors:
        if x in anchors:
            continue
        cx = [v for v in sorted(inst.lists) if v not in taken and inst.lists[v] >> x & 1]
        if not cx:
            return
        forced = [v for v in cx if inst.lists[v] == 1 << x]
        if forced:
            choice = (x, forced[:1])
            break
        cands[x] = cx
    if choice is None:
        x = min(cands, key=lambda c: (len(cands[c]), c))
        choice = (x, cands[x])
    x, options = choice
    for v in options:
        child = inst.copy()
        child.lists[v] = 1 << x
        for y, w in anchors.items():
            if t.adjacent(x, y) and w not in child.graph.adj[v]:
                child.graph._add_edge(v, w)
        try:
            red = reduce_exhaustively(child)
        except Infeasible:
            continue
        new = dict(anchors)
        new[x] = v
        yield from _extend_anchors(red, colors, new)
