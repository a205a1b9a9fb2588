"""Targets, list assignments, list types and the binary CSP view of an instance.

Lists are stored as integer bitmasks over the target's colors: bit ``x`` is set
iff color ``x`` is allowed.
"""

from dataclasses import dataclass, field

from .errors import PreconditionViolated
from .graph import Graph, diameter


def mask_of(colors):
    m = 0
    for c in colors:
        m |= 1 << c
    return m


def colors_of(mask):
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def popcount(mask):
    return mask.bit_count()


def lowest(mask):
    return (mask & -mask).bit_length() - 1


class _Target:
    """Shared mask arithmetic for loopless targets."""

    size: int
    nbr: tuple

    @property
    def full(self):
        return (1 << self.size) - 1

    def colors(self):
        return range(self.size)

    def adjacent(self, x, y):
        return bool(self.nbr[x] >> y & 1)

    def support(self, mask):
        """Union of the neighborhoods of the colors in ``mask``."""
        cache = self._support_cache
        s = cache.get(mask)
        if s is None:
            s = 0
            for x in colors_of(mask):
                s |= self.nbr[x]
            cache[mask] = s
        return s


class CycleTarget(_Target):
    """The odd cycle on colors ``0..2k`` with arithmetic modulo ``2k+1``."""

    def __init__(self, k):
        if k < 1:
            raise PreconditionViolated("k must be at least 1")
        self.k = k
        self.size = 2 * k + 1
        self.nbr = tuple(mask_of({(x - 1) % self.size, (x + 1) % self.size})
                         for x in range(self.size))
        self._support_cache = {}

    def add(self, x, d):
        return (x + d) % self.size

    def __eq__(self, other):
        return isinstance(other, CycleTarget) and other.k == self.k

    def __hash__(self):
        return hash(("cycle", self.k))

    def __repr__(self):
        return f"CycleTarget(k={self.k})"


class GeneralTarget(_Target):
    """An explicit loopless target graph given by its edge list."""

    def __init__(self, n, edges):
        self.size = n
        nbr = [0] * n
        for x, y in edges:
            if x == y:
                raise PreconditionViolated("targets must be loopless")
            nbr[x] |= 1 << y
            nbr[y] |= 1 << x
        self.nbr = tuple(nbr)
        self.edges = sorted({(min(x, y), max(x, y)) for x, y in edges})
        self.triangle_free = not any(self.nbr[x] & self.nbr[y] for x, y in self.edges)
        self.diameter = diameter(self.as_graph())
        self._support_cache = {}

    @classmethod
    def from_graph(cls, g):
        return cls(g.n, g.edges())

    def as_graph(self):
        return Graph(self.size, self.edges)

    def __eq__(self, other):
        return isinstance(other, GeneralTarget) and other.edges == self.edges and other.size == self.size

    def __hash__(self):
        return hash(("general", self.size, tuple(self.edges)))

    def __repr__(self):
        return f"GeneralTarget(n={self.size}, m={len(self.edges)})"


@dataclass
class LHomInstance:
    """A graph, a fixed target and one color list per live vertex."""

    graph: Graph
    target: _Target
    lists: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.lists:
            self.lists = dict.fromkeys(self.graph.adj, self.target.full)

    @classmethod
    def build(cls, graph, target, lists=None):
        """Build from plain color collections (``None`` means full lists)."""
        if lists is None:
            masks = dict.fromkeys(graph.adj, target.full)
        else:
            masks = {v: mask_of(lists[v]) for v in graph.adj}
        inst = cls(graph, target, masks)
        inst.check()
        return inst

    def copy(self):
        return LHomInstance(self.graph.copy(), self.target, dict(self.lists))

    def check(self):
        if set(self.lists) != set(self.graph.adj):
            raise PreconditionViolated("lists must be defined exactly on the live vertices")
        full = self.target.full
        for v, m in self.lists.items():
            if m & ~full:
                raise PreconditionViolated(f"list of {v} uses colors outside the target")

    def list_colors(self, v):
        return colors_of(self.lists[v])

    def size_classes(self):
        """``{i: V_i}`` grouping live vertices by list size."""
        out = {}
        for v in sorted(self.lists):
            out.setdefault(popcount(self.lists[v]), []).append(v)
        return out

    def at_least(self, i):
        return [v for v in sorted(self.lists) if popcount(self.lists[v]) >= i]

    def restrict(self, vertices):
        g = self.graph.subgraph(vertices)
        return LHomInstance(g, self.target, {v: self.lists[v] for v in g.adj})

    def budget(self):
        """``sum of l * |V_l|`` over list sizes ``l >= 2``."""
        total = 0
        for m in self.lists.values():
            c = popcount(m)
            if c >= 2:
                total += c
        return total


Witness = dict  # original vertex id -> color


def pull_back(graph, coloring, limit=None):
    """Extend a coloring of live vertices to every id merged into them."""
    limit = graph.id_space if limit is None else limit
    out = {}
    for v in range(limit):
        r = graph.find(v)
        if r in coloring:
            out[v] = coloring[r]
    return out


# -- list types on odd cycles ------------------------------------------------------

def has_type(colors, steps, target):
    """True iff the colors can be ordered ``c0..cr`` with ``c(i+1) = c(i) + steps[i]``."""
    colors = set(colors)
    if len(colors) != len(steps) + 1:
        raise PreconditionViolated("a list of type (l1..lr) has exactly r+1 colors")
    for start in colors:
        seq = [start]
        for s in steps:
            seq.append(target.add(seq[-1], s))
        if set(seq) == colors:
            return True
    return False


def type_center(mask, steps, target):
    """The ``c0`` of an ordering witnessing the type, or ``None``."""
    colors = set(colors_of(mask))
    if len(colors) != len(steps) + 1:
        return None
    for start in sorted(colors):
        seq = [start]
        for s in steps:
            seq.append(target.add(seq[-1], s))
        if set(seq) == colors:
            return start
    return None


def middle_color(mask, target):
    """Middle color ``j`` of a type-(1,1) list ``{j-1, j, j+1}``, else ``None``."""
    start = type_center(mask, (1, 1), target)
    return None if start is None else target.add(start, 1)


def allowed_colors_at_distance(i, d, target):
    """Colors ``{i-d, i-d+2, ..., i+d}`` reachable by a walk of length ``d`` from ``i``."""
    if d < 0:
        raise PreconditionViolated("distance must be non-negative")
    return mask_of(target.add(i, d - 2 * t) for t in range(d + 1))


def allowed_colors_two_anchors(i, ell, target):
    """Interval ``{i+k-ell+1, ..., i+k+ell+1}`` for a vertex at distance ``k+ell``
    from two adjacent vertices precolored ``i`` and ``i+1``."""
    if ell < 0:
        raise PreconditionViolated("ell must be non-negative")
    k = target.k
    return mask_of(target.add(i, k + 1 + t) for t in range(-ell, ell + 1))


def common_neighbor_in_list(colors, list_mask, target):
    """Smallest color of ``list_mask`` adjacent to every color in ``colors``."""
    cand = list_mask
    for a in colors:
        cand &= target.nbr[a]
    return lowest(cand) if cand else None


# -- binary CSP --------------------------------------------------------------------

class BcspInstance:
    """Variables with lists and allowed value pairs for ordered variable pairs.

    A missing pair means every value pair is allowed.  ``C(u, v)`` and
    ``C(v, u)`` are always kept as transposes of each other.
    """

    def __init__(self, domain_size, lists):
        self.domain_size = domain_size
        self.lists = dict(lists)
        self.constraints = {}

    @property
    def variables(self):
        return sorted(self.lists)

    def allowed(self, u, v, a, b):
        c = self.constraints.get((u, v))
        return c is None or (a, b) in c

    def pairs(self, u, v):
        c = self.constraints.get((u, v))
        if c is None:
            d = range(self.domain_size)
            return {(a, b) for a in d for b in d}
        return set(c)

    def _ensure(self, u, v):
        if u == v:
            raise PreconditionViolated("constraints relate two distinct variables")
        if (u, v) not in self.constraints:
            d = range(self.domain_size)
            full = {(a, b) for a in d for b in d}
            self.constraints[(u, v)] = full
            self.constraints[(v, u)] = {(b, a) for a, b in full}
        return self.constraints[(u, v)]

    def intersect(self, u, v, allowed_pairs):
        cuv = self._ensure(u, v)
        cuv &= set(allowed_pairs)
        self.constraints[(v, u)] = {(b, a) for a, b in cuv}

    def remove_pairs(self, u, v, pairs):
        cuv = self._ensure(u, v)
        cvu = self.constraints[(v, u)]
        for a, b in pairs:
            cuv.discard((a, b))
            cvu.discard((b, a))

    def restrict_pairs(self, u, v, keep):
        """Keep only the pairs ``(a, b)`` of ``L(u) x L(v)`` for which ``keep(a, b)``."""
        drop = [(a, b) for a in colors_of(self.lists[u]) for b in colors_of(self.lists[v])
                if not keep(a, b)]
        if drop:
            self.remove_pairs(u, v, drop)

    def constrained_pairs(self):
        return sorted((u, v) for u, v in self.constraints if u < v)

    def satisfied_by(self, assignment):
        for v, m in self.lists.items():
            if not (m >> assignment[v] & 1):
                return False
        for (u, v), c in self.constraints.items():
            if (assignment[u], assignment[v]) not in c:
                return False
        return True


def bcsp_from_lhom(inst):
    """Every edge gets the target's adjacency pairs; non-edges stay unconstrained."""
    b = BcspInstance(inst.target.size, inst.lists)
    edge_pairs = {(x, y) for x in inst.target.colors() for y in colors_of(inst.target.nbr[x])}
    for u, v in inst.graph.edges():
        b.constraints[(u, v)] = set(edge_pairs)
        b.constraints[(v, u)] = set(edge_pairs)
    return b
