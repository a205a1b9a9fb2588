"""Shared state for the acceptance suite: one result line per criterion and every YES witness."""

import time

from oddhom.oracle import verify_hom

RESULTS = []     # (name, passed, detail)
WITNESSES = []   # (suite, instance, witness)


class Criterion:
    def __init__(self, name, limit_s):
        self.name = name
        self.limit_s = limit_s
        self.start = time.perf_counter()

    def finish(self, failures, detail):
        elapsed = time.perf_counter() - self.start
        ok = failures == 0 and elapsed < self.limit_s
        RESULTS.append((self.name, ok, f"{detail}; {elapsed:.1f}s (limit {self.limit_s:g}s)"))
        return ok, elapsed


def keep_witness(suite, inst, w):
    """Record a YES witness; returns whether it verifies against ``inst``."""
    WITNESSES.append((suite, inst, w))
    return verify_hom(inst.graph, inst.target, inst.lists, w)
