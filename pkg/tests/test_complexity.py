from hypothesis import given, strategies as st
import pytest

from oddhom.complexity import VERDICTS, classify, table
from oddhom.errors import PreconditionViolated

# rows k = 1..5, columns d = 2..12; P poly, S subexponential, ? open, H ETH-hard
GOLDEN = {
    1: "SSHHHHHHHHH",
    2: "PPSSHHHHHHH",
    3: "PPPS??HHHHH",
    4: "PPPPS???HHH",
    5: "PPPPPS????H",
}
CODES = {"P": "poly", "S": "subexp", "?": "open", "H": "eth_hard"}


def test_golden_grid():
    for k, row in GOLDEN.items():
        assert [classify(k, d).verdict for d in range(2, 13)] == [CODES[c] for c in row]


def test_table_shape():
    t = table()
    assert len(t) == 5 and all(len(r) == 11 for r in t)
    assert t[1][3].k == 2 and t[1][3].d == 5 and t[1][3].verdict == "subexp"


def test_examples():
    assert classify(2, 3).verdict == "poly"
    assert classify(3, 5).verdict == "subexp"
    assert classify(3, 6).verdict == "open"
    assert classify(3, 8).verdict == "eth_hard"


def test_bad_arguments():
    with pytest.raises(PreconditionViolated):
        classify(0, 3)
    with pytest.raises(PreconditionViolated):
        classify(2, 1)


@given(st.integers(1, 30), st.integers(2, 80))
def test_verdicts_monotone_in_d(k, d):
    rank = {v: i for i, v in enumerate(VERDICTS)}
    a, b = classify(k, d).verdict, classify(k, d + 1).verdict
    assert rank[a] <= rank[b]


@given(st.integers(2, 30))
def test_row_structure(k):
    row = [classify(k, d).verdict for d in range(2, 2 * k + 4)]
    assert row.count("poly") == k
    assert row.count("subexp") == (2 if k == 2 else 1)
    assert row.count("open") == (0 if k == 2 else k - 1)
    assert classify(k, 2 * k + 2).verdict == "eth_hard"
