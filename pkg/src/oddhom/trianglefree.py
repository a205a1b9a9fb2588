"""List homomorphism to a fixed triangle-free target on graphs of diameter 2.

The image of a diameter-2 graph induces a subgraph of diameter at most 2 in the
target.  For each such candidate image X, lists are cut down to X, one vertex
per color of X is anchored (with the target's edges added between anchors) and
the instance is reduced.  A guess succeeds when the reduction collapses the
graph onto the anchors.
"""

from itertools import combinations

from .errors import DiameterTooLarge, PreconditionViolated
from .graph import _bfs, diameter
from .instance import GeneralTarget, mask_of, pull_back
from .reductions import iter_anchorings

MAX_TARGET_SIZE = 16


def enumerate_subtargets(target):
    """Vertex sets of the target inducing a connected subgraph of diameter <= 2.

    Ordered by size, then lexicographically.
    """
    g = target.as_graph()
    out = []
    for r in range(1, target.size + 1):
        for subset in combinations(range(target.size), r):
            keep = set(subset)
            ok = True
            for s in subset:
                dist = _bfs(g, s, within=keep)
                if len(dist) < r or max(dist.values()) > 2:
                    ok = False
                    break
            if ok:
                out.append(subset)
    return out


def solve_triangle_free(inst, stats=None):
    """A list homomorphism as ``{vertex: color}``, or ``None``.

    ``stats`` (a dict) receives ``subtargets_tried``, ``guesses_tried`` and
    ``uncollapsed`` (guesses that reduced without collapsing; counted as NO).
    """
    t = inst.target
    if not isinstance(t, GeneralTarget):
        raise PreconditionViolated("the triangle-free solver needs an explicit target graph")
    if not t.triangle_free:
        raise PreconditionViolated("the target graph contains a triangle")
    g = inst.graph
    if g.n == 0:
        return {}
    d = diameter(g)
    if d > 2:
        raise DiameterTooLarge(d, 2)
    if stats is not None:
        for key in ("subtargets_tried", "guesses_tried", "uncollapsed"):
            stats.setdefault(key, 0)
    for subset in enumerate_subtargets(t):
        if len(subset) > g.n:
            break
        xmask = mask_of(subset)
        restricted = inst.copy()
        for v in restricted.lists:
            restricted.lists[v] &= xmask
        if any(not m for m in restricted.lists.values()):
            continue
        if stats is not None:
            stats["subtargets_tried"] += 1
        for guess, anchors in iter_anchorings(restricted, subset):
            if stats is not None:
                stats["guesses_tried"] += 1
            live = set(guess.graph.adj)
            if live != set(anchors.values()):
                if stats is not None:
                    stats["uncollapsed"] += 1
                continue
            coloring = {v: x for x, v in anchors.items()}
            full = pull_back(guess.graph, coloring)
            return {v: full[v] for v in g.adj}
    return None


def check_target_size(target):
    if target.size > MAX_TARGET_SIZE:
        raise PreconditionViolated(f"target has {target.size} vertices; at most {MAX_TARGET_SIZE} supported")
    return target

