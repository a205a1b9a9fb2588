"""Known complexity of Hom(C_{2k+1}) on graphs of diameter d."""

from dataclasses import dataclass

from .errors import PreconditionViolated

VERDICTS = ("poly", "subexp", "open", "eth_hard")


@dataclass(frozen=True)
class ComplexityCell:
    k: int
    d: int
    verdict: str


def classify(k, d):
    if k < 1 or d < 2:
        raise PreconditionViolated("classify needs k >= 1 and d >= 2")
    if k >= 2 and d <= k + 1:
        v = "poly"
    elif (k >= 2 and d == k + 2) or (k == 2 and d == 5) or (k == 1 and d in (2, 3)):
        v = "subexp"
    elif d >= 2 * k + 2 or (k == 1 and d >= 4):
        v = "eth_hard"
    else:
        v = "open"
    return ComplexityCell(k, d, v)


def table(ks=range(1, 6), ds=range(2, 13)):
    return [[classify(k, d) for d in ds] for k in ks]
