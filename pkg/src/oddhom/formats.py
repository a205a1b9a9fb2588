"""Reading and writing graphs, instances, witnesses and DIMACS CNF."""

import json

from .errors import PreconditionViolated
from .graph import Graph
from .hardness import CnfFormula
from .instance import CycleTarget, GeneralTarget, LHomInstance, colors_of, mask_of


class FormatError(PreconditionViolated):
    pass


# -- graphs --------------------------------------------------------------------------

def parse_graph_text(text):
    """``n m`` on the first line, then ``m`` lines ``u v`` (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise FormatError("graph text must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise FormatError(f"bad graph line: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return _graph(n, edges)


def graph_to_text(g):
    edges = g.edges()
    return "\n".join([f"{g.id_space} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def _graph(n, edges):
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range for n={n}")
    return Graph(n, edges)


def graph_from_json(obj):
    try:
        return _graph(int(obj["n"]), [tuple(e) for e in obj.get("edges", [])])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph object: {exc}") from None


def graph_to_json(g):
    return {"n": g.id_space, "edges": [list(e) for e in g.edges()]}


def load_graph(path):
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_graph_text(text)


# -- targets and instances -----------------------------------------------------------

def target_from_json(obj):
    g = graph_from_json(obj)
    return GeneralTarget(g.n, g.edges())


def target_to_json(t):
    if isinstance(t, CycleTarget):
        return {"n": t.size, "edges": [[x, (x + 1) % t.size] for x in range(t.size)]}
    return {"n": t.size, "edges": [list(e) for e in t.edges]}


def instance_from_json(obj):
    """``{"k"|"target", "graph", "lists"?}``; missing lists mean full lists."""
    try:
        if "target" in obj:
            target = target_from_json(obj["target"])
        elif "k" in obj:
            target = CycleTarget(int(obj["k"]))
        else:
            raise FormatError("instance needs a 'k' or a 'target' entry")
        g = graph_from_json(obj["graph"])
    except KeyError as exc:
        raise FormatError(f"missing field {exc}") from None
    raw = obj.get("lists")
    if raw is None:
        return LHomInstance(g, target)
    if len(raw) != g.n:
        raise FormatError(f"{len(raw)} lists for {g.n} vertices")
    lists = {}
    for v, cols in enumerate(raw):
        for c in cols:
            if not (isinstance(c, int) and 0 <= c < target.size):
                raise FormatError(f"vertex {v}: color {c!r} outside the target")
        lists[v] = mask_of(cols)
    return LHomInstance(g, target, lists)


def instance_to_json(inst, landmarks=None):
    """Serialize an instance whose live vertices are exactly 0..n-1."""
    g = inst.graph
    if sorted(g.adj) != list(range(g.id_space)):
        inst, _ = compact(inst)
        g = inst.graph
    obj = {}
    if isinstance(inst.target, CycleTarget):
        obj["k"] = inst.target.k
    else:
        obj["target"] = target_to_json(inst.target)
    obj["graph"] = graph_to_json(g)
    obj["lists"] = [colors_of(inst.lists[v]) for v in range(g.n)]
    if landmarks:
        obj["landmarks"] = landmarks
    return obj


def compact(inst):
    """Relabel the live vertices to 0..n-1; returns ``(instance, {old: new})``."""
    live = sorted(inst.graph.adj)
    idx = {v: i for i, v in enumerate(live)}
    g = Graph(len(live), [(idx[u], idx[v]) for u, v in inst.graph.edges()])
    return LHomInstance(g, inst.target, {idx[v]: inst.lists[v] for v in live}), idx


def load_instance(path):
    with open(path) as fh:
        try:
            return instance_from_json(json.load(fh))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from None


def load_target(path):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from None
    return target_from_json(obj.get("target", obj))


def write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


# -- witnesses -----------------------------------------------------------------------

def witness_to_json(w):
    return [{"vertex": v, "color": w[v]} for v in sorted(w)]


def witness_from_json(rows):
    try:
        return {int(r["vertex"]): int(r["color"]) for r in rows}
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad witness row: {exc}") from None


# -- DIMACS CNF ----------------------------------------------------------------------

def parse_dimacs(text):
    """Parse DIMACS CNF into a :class:`CnfFormula` (clauses must have 3 literals)."""
    n_vars = n_clauses = None
    clauses = []
    current = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("c") or ln.startswith("%"):
            continue
        if ln.startswith("p"):
            parts = ln.split()
            if len(parts) != 4 or parts[1] != "cnf" or not all(x.isdigit() for x in parts[2:]):
                raise FormatError(f"bad problem line: {ln!r}")
            n_vars, n_clauses = int(parts[2]), int(parts[3])
            continue
        if n_vars is None:
            raise FormatError("clause before the 'p cnf' line")
        for tok in ln.split():
            try:
                lit = int(tok)
            except ValueError:
                raise FormatError(f"bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if n_vars is None:
        raise FormatError("missing 'p cnf' line")
    if len(clauses) != n_clauses:
        raise FormatError(f"header announces {n_clauses} clauses, found {len(clauses)}")
    return CnfFormula(n_vars, clauses)


def formula_to_dimacs(phi):
    lines = [f"p cnf {phi.n_vars} {len(phi.clauses)}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in phi.clauses]
    return "\n".join(lines) + "\n"
