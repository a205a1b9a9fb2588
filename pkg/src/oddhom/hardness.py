"""From a 3-CNF formula to a graph of radius k+1 that maps to C_{2k+1} iff the
formula is satisfiable.

Layout, for k >= 2:

* a base cycle v_0..v_2k;
* per variable x_i a cycle x_i^0..x_i^2k with x_i^0 = v_0; in a homomorphism
  with v_t -> t the cycle either has x_i^2k -> 2k (x_i true) or x_i^2k -> 1;
* per clause a cycle a, b, c^1..c^{2k-1} with edges v_1 a and b v_2, and one
  connector path per literal.  The first literal's path starts at a and has
  2k+1 vertices, its l-th vertex adjacent to v_l; the second starts at b and has
  3 vertices, the middle one adjacent to v_1; the third starts at c^k and has
  k+2 vertices, the (k+1)-th adjacent to v_1.  A path ends at x^2k for a
  positive first literal and at x^1 for a positive second or third literal;
  negated literals swap the two.
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import PreconditionViolated
from .graph import Graph, eccentricity
from .instance import CycleTarget, LHomInstance


@dataclass
class CnfFormula:
    n_vars: int
    clauses: list = field(default_factory=list)   # triples of nonzero signed ints

    def __post_init__(self):
        self.clauses = [tuple(c) for c in self.clauses]
        self.validate()

    def validate(self):
        if self.n_vars < 0:
            raise PreconditionViolated("negative variable count")
        for j, c in enumerate(self.clauses):
            if len(c) != 3:
                raise PreconditionViolated(f"clause {j + 1} has {len(c)} literals, expected 3")
            for lit in c:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.n_vars:
                    raise PreconditionViolated(f"clause {j + 1}: literal {lit!r} out of range")
            if len({abs(lit) for lit in c}) != 3:
                raise PreconditionViolated(f"clause {j + 1} repeats a variable")

    def satisfied_by(self, assignment):
        """``assignment[i]`` is the value of variable ``i`` (1-based; index 0 unused)."""
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)

    def is_satisfiable(self):
        for bits in product((False, True), repeat=self.n_vars):
            if self.satisfied_by((None,) + bits):
                return True
        return False


@dataclass
class GadgetGraph:
    graph: Graph
    k: int
    formula: CnfFormula
    landmarks: dict = field(default_factory=dict)   # label -> vertex id
    paths: dict = field(default_factory=dict)       # (clause, variable) -> vertex ids, ends included

    def instance(self):
        return LHomInstance(self.graph, CycleTarget(self.k))

    @property
    def n(self):
        return self.graph.n


def hardness_vertex_count(n_vars, m_clauses, k):
    return 1 + 2 * k + m_clauses * (2 * k + 1) + n_vars * 2 * k + m_clauses * (3 * k)


def build_hardness_instance(phi, k):
    if k < 2:
        raise PreconditionViolated("the construction needs k >= 2")
    phi.validate()
    size = 2 * k + 1
    g = Graph()
    marks = {}
    paths = {}

    def new(label=None):
        v = g._add_vertex()
        if label is not None:
            marks[label] = v
        return v

    base = [new(f"v{t}") for t in range(size)]
    for t in range(size):
        g._add_edge(base[t], base[(t + 1) % size])

    xs = {}
    for i in range(1, phi.n_vars + 1):
        cyc = [base[0]] + [new(f"x{i}^{t}") for t in range(1, size)]
        marks[f"x{i}^0"] = base[0]
        for t in range(size):
            g._add_edge(cyc[t], cyc[(t + 1) % size])
        xs[i] = cyc

    def attach(clause, lit, start, n_internal, hooks, positive_end):
        i = abs(lit)
        end = xs[i][positive_end if lit > 0 else (2 * k + 1 - positive_end)]
        verts = [start] + [new(f"p{clause}_{i}^{t}") for t in range(1, n_internal + 1)] + [end]
        for a, b in zip(verts, verts[1:]):
            g._add_edge(a, b)
        for pos, v in hooks:
            g._add_edge(verts[pos - 1], base[v])
        paths[(clause, i)] = verts

    for j, clause in enumerate(phi.clauses, start=1):
        a = new(f"a{j}")
        b = new(f"b{j}")
        cs = [new(f"c{j}^{t}") for t in range(1, 2 * k)]
        ring = [a, b] + cs
        for t in range(size):
            g._add_edge(ring[t], ring[(t + 1) % size])
        g._add_edge(base[1], a)
        g._add_edge(b, base[2])
        l1, l2, l3 = clause
        attach(j, l1, a, 2 * k - 1, [(l, l) for l in range(2, 2 * k + 1)], 2 * k)
        attach(j, l2, b, 1, [(2, 1)], 1)
        attach(j, l3, cs[k - 1], k, [(k + 1, 1)], 1)

    return GadgetGraph(g, k, phi, marks, paths)


def check_radius(gadget, k=None):
    """True iff every vertex is within distance k+1 of v_1."""
    if k is None:
        k = gadget.k
    return eccentricity(gadget.graph, gadget.landmarks["v1"]) <= k + 1
