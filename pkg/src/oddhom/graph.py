"""Simple undirected graphs with vertex identification.

Vertices are dense integer ids.  Identifying two vertices keeps the smaller id
as the live representative and records the merge in a union-find array, so a
coloring of the live vertices can always be pulled back to every original id.

Public transforms (``identify``, ``with_edge``, ``subgraph``) return new graphs.
Methods prefixed with an underscore mutate in place and are meant for code that
owns a private copy (the reduction engine, gadget builders).
"""

from collections import deque
import math

from .errors import AdjacentIdentification, PreconditionViolated

INF = math.inf


class Graph:
    __slots__ = ("adj", "parent")

    def __init__(self, n=0, edges=()):
        self.adj = {v: set() for v in range(n)}
        self.parent = list(range(n))
        for u, v in edges:
            self._add_edge(u, v)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def cycle(cls, n):
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n):
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete(cls, n):
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def petersen(cls):
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls(10, outer + spokes + inner)

    @classmethod
    def grotzsch(cls):
        # Mycielskian of C5: outer cycle 0-4, shadows 5-9, apex 10.
        edges = [(i, (i + 1) % 5) for i in range(5)]
        for i in range(5):
            edges.append((5 + i, (i + 1) % 5))
            edges.append((5 + i, (i - 1) % 5))
            edges.append((5 + i, 10))
        return cls(11, edges)

    def copy(self):
        g = Graph.__new__(Graph)
        g.adj = {v: set(nb) for v, nb in self.adj.items()}
        g.parent = list(self.parent)
        return g

    # -- queries ----------------------------------------------------------------

    @property
    def n(self):
        """Number of live vertices."""
        return len(self.adj)

    @property
    def m(self):
        return sum(len(nb) for nb in self.adj.values()) // 2

    @property
    def id_space(self):
        """Number of ids ever allocated (live or merged)."""
        return len(self.parent)

    def vertices(self):
        return sorted(self.adj)

    def edges(self):
        return [(u, v) for u in sorted(self.adj) for v in sorted(self.adj[u]) if u < v]

    def neighbors(self, v):
        return self.adj[v]

    def has_edge(self, u, v):
        return v in self.adj.get(u, ())

    def degree(self, v):
        return len(self.adj[v])

    def is_live(self, v):
        return v in self.adj

    def find(self, v):
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def members(self, rep):
        """All ids whose representative is ``rep``."""
        return [v for v in range(len(self.parent)) if self.find(v) == rep]

    def merge_map(self):
        """Map each id to its live representative."""
        return {v: self.find(v) for v in range(len(self.parent))}

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- transforms -------------------------------------------------------------

    def with_edge(self, u, v):
        g = self.copy()
        g._add_edge(u, v)
        return g

    def identify(self, u, v):
        g = self.copy()
        g._identify(u, v)
        return g

    def subgraph(self, vertices):
        """Induced subgraph on ``vertices``; the id space and merge map are kept."""
        keep = set(vertices)
        g = Graph.__new__(Graph)
        g.adj = {v: self.adj[v] & keep for v in keep}
        g.parent = list(self.parent)
        return g

    def _add_edge(self, u, v):
        if u == v:
            raise PreconditionViolated(f"self-loop at {u}")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def _add_vertex(self):
        v = len(self.parent)
        self.parent.append(v)
        self.adj[v] = set()
        return v

    def _identify(self, u, v):
        """Merge ``u`` and ``v`` into ``min(u, v)``; return the survivor."""
        if u == v or u not in self.adj or v not in self.adj:
            raise PreconditionViolated(f"cannot identify {u} and {v}")
        if v in self.adj[u]:
            raise AdjacentIdentification(u, v)
        keep, gone = (u, v) if u < v else (v, u)
        for w in self.adj.pop(gone):
            self.adj[w].discard(gone)
            self.adj[w].add(keep)
            self.adj[keep].add(w)
        self.parent[gone] = keep
        return keep

    # -- connectivity -----------------------------------------------------------

    def components(self):
        seen = set()
        comps = []
        for s in sorted(self.adj):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return len(self.components()) <= 1


def bfs_distances(g, source):
    """Shortest-path distances from ``source``; unreachable vertices map to ``INF``."""
    dist = dict.fromkeys(g.adj, INF)
    dist.update(_bfs(g, source))
    return dist


def _bfs(g, source, within=None):
    # sparse: unreachable vertices are simply absent
    if source not in g.adj:
        raise PreconditionViolated(f"{source} is not a live vertex")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if w not in dist and (within is None or w in within):
                dist[w] = du
                queue.append(w)
    return dist


def distance(g, u, v):
    return _bfs(g, u).get(v, INF)


def eccentricity(g, v):
    dist = _bfs(g, v)
    if len(dist) < g.n:
        return INF
    return max(dist.values())


def diameter(g):
    if g.n == 0:
        return 0
    return max(eccentricity(g, v) for v in g.adj)


def radius(g):
    if g.n == 0:
        return 0
    return min(eccentricity(g, v) for v in g.adj)


def is_bipartite(g):
    side = {}
    for s in g.adj:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def bipartition(g, vertices):
    """Two-color a connected vertex set; ``None`` if it contains an odd cycle."""
    vertices = set(vertices)
    s = min(vertices)
    side = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in vertices:
                continue
            if w not in side:
                side[w] = 1 - side[u]
                queue.append(w)
            elif side[w] == side[u]:
                return None
    return side


def shortest_odd_cycle(g):
    """Length of a shortest odd cycle, or ``None`` if ``g`` is bipartite.

    Runs BFS from every ``(s, 0)`` in the bipartite double cover; the distance
    to ``(s, 1)`` is the shortest odd closed walk through ``s``, and the
    minimum over ``s`` is the odd girth.
    """
    best = None
    for s in g.adj:
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        found = None
        while queue:
            u, p = queue.popleft()
            d = dist[(u, p)]
            if best is not None and d + 1 >= best:
                break
            for w in g.adj[u]:
                state = (w, 1 - p)
                if state not in dist:
                    dist[state] = d + 1
                    if state == (s, 1):
                        found = d + 1
                        break
                    queue.append(state)
            if found is not None:
                break
        if found is not None and (best is None or found < best):
            best = found
    return best


def equal_distance_pair(g, cycle, v):
    """Smallest ``i`` with ``dist(v, c_i) == dist(v, c_{i+1})`` around an odd cycle."""
    length = len(cycle)
    if length % 2 == 0 or v in cycle:
        raise PreconditionViolated("need an odd cycle and a vertex outside it")
    for i in range(length):
        if not g.has_edge(cycle[i], cycle[(i + 1) % length]):
            raise PreconditionViolated(f"{cycle} is not a cycle of the graph")
    dist = _bfs(g, v)
    for i in range(length):
        a = dist.get(cycle[i])
        if a is not None and a == dist.get(cycle[(i + 1) % length]):
            return i
    raise PreconditionViolated(f"vertex {v} does not reach the cycle")


def bfs_tree(g, source):
    """Distances and BFS parents from ``source`` (parents follow smallest ids first)."""
    dist = {source: 0}
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adj[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def tree_path(parent, target):
    """Path from the BFS root to ``target`` following parent pointers."""
    path = []
    while target is not None:
        path.append(target)
        target = parent[target]
    path.reverse()
    return path
