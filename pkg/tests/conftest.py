import os
import random

from hypothesis import HealthCheck, settings

from oddhom.graph import Graph
from oddhom.instance import CycleTarget, LHomInstance, mask_of

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def cycle_instance(n, k, lists=None):
    g = Graph.cycle(n)
    t = CycleTarget(k)
    if lists is None:
        return LHomInstance(g, t)
    return LHomInstance(g, t, {v: mask_of(c) for v, c in lists.items()})


def random_graph_edges(rng, n, p):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def rng_for(seed):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    from acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
