"""Exception hierarchy shared by the solvers and the CLI."""


class HomError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionViolated(HomError, ValueError):
    """An input does not satisfy the documented contract of an operation."""


class AdjacentIdentification(HomError):
    """Identifying two adjacent vertices would create a self-loop."""

    def __init__(self, u, v):
        super().__init__(f"vertices {u} and {v} are adjacent")
        self.u = u
        self.v = v


class Infeasible(HomError):
    """A reduction rule proved that the instance has no list homomorphism."""

    def __init__(self, rule, detail=""):
        super().__init__(f"{rule}: {detail}" if detail else rule)
        self.rule = rule
        self.detail = detail


class DiameterTooLarge(HomError):
    def __init__(self, diameter, bound):
        super().__init__(f"diameter {diameter} exceeds the supported bound {bound}")
        self.diameter = diameter
        self.bound = bound


class StructuralAssertionFailed(HomError):
    """A structural property that the algorithm relies on did not hold.

    Raised instead of returning an answer that could be wrong.
    """


class CapExceeded(HomError):
    def __init__(self, n, cap):
        super().__init__(f"instance has {n} vertices, oracle cap is {cap} (use force)")
        self.n = n
        self.cap = cap


class GenerationTimeout(HomError):
    pass
