"""Polynomial engines used as black boxes by the solvers.

* 2-SAT via the implication graph and strongly connected components.
* Binary CSPs whose lists have at most two values, encoded into 2-SAT.
* List homomorphism to a path, via arc consistency and minimum choice.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import PreconditionViolated
from .graph import bipartition
from .instance import _Target, colors_of, lowest, mask_of


def arc_consistent(adj, lists, support, queue=None):
    """Prune ``lists`` in place until every color has a neighbor in every adjacent list.

    ``support(mask)`` returns the union of neighborhoods of a color set.  Returns
    the first vertex whose list became empty, or ``None``.  ``queue`` seeds the
    vertices whose lists changed; by default every vertex is examined.
    """
    pending = deque(adj if queue is None else queue)
    queued = set(pending)
    while pending:
        u = pending.popleft()
        queued.discard(u)
        sup = support(lists[u])
        for w in adj[u]:
            lw = lists[w]
            nw = lw & sup
            if nw != lw:
                lists[w] = nw
                if not nw:
                    return w
                if w not in queued:
                    queued.add(w)
                    pending.append(w)
    return None


# -- 2-SAT -------------------------------------------------------------------------

@dataclass
class TwoSatFormula:
    """Clauses over variables ``1..n_vars``; literal ``-i`` negates variable ``i``."""

    n_vars: int
    clauses: list = field(default_factory=list)

    def add(self, a, b):
        if not (0 < abs(a) <= self.n_vars and 0 < abs(b) <= self.n_vars):
            raise PreconditionViolated(f"literal out of range in ({a}, {b})")
        self.clauses.append((a, b))

    def to_dimacs(self):
        lines = [f"p cnf {self.n_vars} {len(self.clauses)}"]
        lines += [f"{a} {b} 0" for a, b in self.clauses]
        return "\n".join(lines) + "\n"


def _node(lit):
    return 2 * (abs(lit) - 1) + (lit < 0)


def solve_twosat(formula):
    """Satisfying assignment as a list of booleans (index 0 is variable 1), or ``None``."""
    n = 2 * formula.n_vars
    succ = [[] for _ in range(n)]
    for a, b in formula.clauses:
        # a or b  ==  (-a -> b) and (-b -> a)
        succ[_node(-a)].append(_node(b))
        succ[_node(-b)].append(_node(a))

    # iterative Tarjan; components are numbered in reverse topological order
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack = []
    counter = 0
    n_comp = 0
    # negative literals first, so unconstrained variables come out false
    for root in sorted(range(n), key=lambda x: (x // 2, -(x % 2))):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1

    assignment = []
    for i in range(formula.n_vars):
        pos, neg = comp[2 * i], comp[2 * i + 1]
        if pos == neg:
            return None
        assignment.append(pos < neg)
    return assignment


# -- width-2 binary CSP ------------------------------------------------------------

def encode_bcsp_width2(b):
    """2-SAT encoding: variable ``x_v`` is true iff ``v`` takes the larger of its two values."""
    variables = b.variables
    index = {v: i + 1 for i, v in enumerate(variables)}
    values = {}
    for v in variables:
        vals = colors_of(b.lists[v])
        if not 1 <= len(vals) <= 2:
            raise PreconditionViolated(f"list of {v} has {len(vals)} values, expected 1 or 2")
        values[v] = vals

    def lit(v, a):
        return -index[v] if values[v][0] == a else index[v]

    f = TwoSatFormula(len(variables))
    for v in variables:
        if len(values[v]) == 1:
            f.add(-index[v], -index[v])
    for u, v in b.constrained_pairs():
        c = b.constraints[(u, v)]
        for a in values[u]:
            for bb in values[v]:
                if (a, bb) not in c:
                    f.add(-lit(u, a), -lit(v, bb))
    return f, values


def solve_bcsp_width2(b):
    """Assignment ``{variable: value}`` satisfying a BCSP with lists of size <= 2, or ``None``."""
    f, values = encode_bcsp_width2(b)
    sol = solve_twosat(f)
    if sol is None:
        return None
    return {v: values[v][1] if sol[i] else values[v][0]
            for i, v in enumerate(b.variables)}


# -- list homomorphism to paths ----------------------------------------------------

class PathTarget(_Target):
    """The path on positions ``0..t-1``."""

    def __init__(self, t):
        if t < 1:
            raise PreconditionViolated("a path has at least one vertex")
        self.t = self.size = t
        self.nbr = tuple(mask_of(y for y in (x - 1, x + 1) if 0 <= y < t) for x in range(t))
        self._support_cache = {}


def solve_lhom_path(g, lists, path):
    """List homomorphism from ``g`` to ``path``, or ``None``.

    Positions of a path split into even and odd ones, and the natural order on
    each side is a bipartite min-ordering.  So for each component we fix which
    side of its bipartition goes to even positions, enforce arc consistency,
    and map every vertex to the smallest surviving position.
    """
    even = mask_of(range(0, path.t, 2))
    odd = path.full & ~even
    out = {}
    for comp in g.components():
        side = bipartition(g, comp)
        if side is None:
            return None
        sub = {v: g.adj[v] for v in comp}
        for parity in (0, 1):
            trial = {}
            for v in comp:
                allowed = even if side[v] == parity else odd
                trial[v] = lists[v] & allowed
            if any(not m for m in trial.values()):
                continue
            if arc_consistent(sub, trial, path.support) is None:
                for v in comp:
                    out[v] = lowest(trial[v])
                break
        else:
            return None
    return out
