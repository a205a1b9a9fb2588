from itertools import combinations, combinations_with_replacement

from hypothesis import given, strategies as st
import pytest

from oddhom.errors import PreconditionViolated
from oddhom.graph import Graph
from oddhom.instance import (
    BcspInstance, CycleTarget, GeneralTarget, LHomInstance, allowed_colors_at_distance,
    allowed_colors_two_anchors, bcsp_from_lhom, colors_of, common_neighbor_in_list, has_type,
    mask_of, middle_color, pull_back,
)


def walk_reachable(t, i, d):
    cur = {i}
    for _ in range(d):
        cur = {y for x in cur for y in colors_of(t.nbr[x])}
    return mask_of(cur)


def test_cycle_target_neighbors():
    for k in range(1, 6):
        t = CycleTarget(k)
        assert t.size == 2 * k + 1
        for x in t.colors():
            assert colors_of(t.nbr[x]) == sorted({(x - 1) % t.size, (x + 1) % t.size})


def test_general_target_triangle_flag():
    assert GeneralTarget.from_graph(Graph.petersen()).triangle_free
    assert GeneralTarget.from_graph(Graph.grotzsch()).triangle_free
    assert not GeneralTarget.from_graph(Graph.complete(3)).triangle_free
    with pytest.raises(PreconditionViolated):
        GeneralTarget(2, [(0, 0)])


def test_instance_lists_must_match_vertices():
    g = Graph.path(2)
    t = CycleTarget(2)
    with pytest.raises(PreconditionViolated):
        LHomInstance(g, t, {0: 1}).check()
    with pytest.raises(PreconditionViolated):
        LHomInstance(g, t, {0: 1, 1: 1 << 7}).check()


def test_size_classes_partition():
    t = CycleTarget(2)
    inst = LHomInstance(Graph(4), t, {0: 1, 1: 3, 2: 7, 3: 3})
    assert inst.size_classes() == {1: [0], 2: [1, 3], 3: [2]}
    assert inst.at_least(2) == [1, 2, 3]
    assert inst.budget() == 2 + 3 + 2


def test_has_type_examples():
    t = CycleTarget(4)
    assert has_type({1, 4, 6, 7}, (3, 2, 1), t)
    for k in (2, 3, 4):
        tk = CycleTarget(k)
        for x in tk.colors():
            assert has_type({tk.add(x, -1), x, tk.add(x, 1)}, (1, 1), tk)
    assert has_type({0, 2, 4}, (2, 2), CycleTarget(2))


@given(st.integers(2, 5), st.data())
def test_has_type_rotation_invariant(k, data):
    t = CycleTarget(k)
    r = data.draw(st.integers(1, 3))
    cols = data.draw(st.sets(st.integers(0, t.size - 1), min_size=r + 1, max_size=r + 1))
    steps = tuple(data.draw(st.integers(1, t.size - 1)) for _ in range(r))
    shift = data.draw(st.integers(0, t.size - 1))
    shifted = {t.add(c, shift) for c in cols}
    assert has_type(cols, steps, t) == has_type(shifted, steps, t)


def test_middle_color():
    t = CycleTarget(2)
    assert middle_color(mask_of((4, 0, 1)), t) == 0
    assert middle_color(mask_of((0, 2, 4)), t) is None


def test_allowed_colors_at_distance_examples():
    for k in (1, 2, 3):
        t = CycleTarget(k)
        assert allowed_colors_at_distance(0, 1, t) == mask_of((2 * k, 1))
        assert allowed_colors_at_distance(0, 0, t) == mask_of((0,))
    assert allowed_colors_at_distance(0, 2, CycleTarget(2)) == mask_of((3, 0, 2))


def test_allowed_colors_two_anchors_examples():
    t = CycleTarget(2)
    assert allowed_colors_two_anchors(0, 0, t) == mask_of((3,))
    assert allowed_colors_two_anchors(0, 1, t) == mask_of((2, 3, 4))
    assert allowed_colors_two_anchors(0, 2, t) == t.full


def test_distance_sets_match_walks_small():
    for k in range(1, 6):
        t = CycleTarget(k)
        for i in t.colors():
            for d in range(2 * k + 3):
                assert allowed_colors_at_distance(i, d, t) == walk_reachable(t, i, d)


def test_common_neighbor_examples():
    t = CycleTarget(2)
    assert common_neighbor_in_list((0, 2), mask_of((1,)), t) == 1
    assert common_neighbor_in_list((0,), t.full, t) == 1
    assert common_neighbor_in_list((0, 1), t.full, t) is None


def test_common_neighbor_pairwise_to_global_small():
    for k in (2, 3):
        t = CycleTarget(k)
        for lst in range(1, t.full + 1):
            for r in (3, 4):
                for a in combinations(t.colors(), r):
                    pairwise = all(common_neighbor_in_list((x, y), lst, t) is not None
                                   for x, y in combinations_with_replacement(a, 2))
                    if pairwise:
                        assert common_neighbor_in_list(a, lst, t) is not None


def test_bcsp_from_lhom_examples():
    t = CycleTarget(2)
    b = bcsp_from_lhom(LHomInstance(Graph.path(2), t))
    assert len(b.pairs(0, 1)) == 10
    b = bcsp_from_lhom(LHomInstance(Graph(2), t))
    assert len(b.pairs(0, 1)) == 25
    assert b.constrained_pairs() == []
    assert bcsp_from_lhom(LHomInstance(Graph(0), t)).constraints == {}


@given(st.data())
def test_bcsp_constraints_stay_transposed(data):
    b = BcspInstance(4, {0: 15, 1: 15, 2: 15})
    for _ in range(data.draw(st.integers(1, 6))):
        u, v = data.draw(st.sampled_from([(0, 1), (1, 0), (1, 2), (2, 0)]))
        pairs = data.draw(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=6))
        if data.draw(st.booleans()):
            b.remove_pairs(u, v, pairs)
        else:
            b.intersect(u, v, pairs)
    for (u, v), c in b.constraints.items():
        assert b.constraints[(v, u)] == {(y, x) for x, y in c}


def test_pull_back_through_merges():
    g = Graph(4, [(0, 1)]).identify(2, 3).identify(0, 2)
    assert pull_back(g, {0: 3, 1: 4}) == {0: 3, 1: 4, 2: 3, 3: 3}
