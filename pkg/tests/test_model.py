import random
from fractions import Fraction

import pytest

from bqp01 import (
    BipartiteWeightedGraph,
    CutInstance,
    Instance,
    evaluate_cut_objective,
    evaluate_objective,
    normalize_orientation,
    transpose_instance,
)
from bqp01.fixtures import sample_general, sample_rank_one

from conftest import random_instance


def test_coercion_to_exact_fractions():
    inst = Instance([["1/2", -2], [0.25, "3"]], [1, "-2.5"], [0, 2], "7/3")
    assert inst.q[0][0] == Fraction(1, 2)
    assert inst.q[1][0] == Fraction(1, 4)
    assert inst.c[1] == Fraction(-5, 2)
    assert inst.c0 == Fraction(7, 3)


def test_default_zero_linear_terms():
    inst = Instance([[1, 2]])
    assert inst.c == (Fraction(0),)
    assert inst.d == (Fraction(0), Fraction(0))
    assert inst.c0 == 0


@pytest.mark.parametrize(
    "bad",
    [
        dict(q=[[1], [2, 3]]),
        dict(q=[[]]),
        dict(q=[[1, 2]], c=[1, 2]),
        dict(q=[[1, 2]], d=[1]),
    ],
)
def test_invalid_shapes_rejected(bad):
    with pytest.raises(ValueError):
        Instance(**bad)


def test_evaluate_known_points():
    inst = sample_general()
    assert evaluate_objective(inst, (0, 1), (1, 1)) == 4
    assert evaluate_objective(inst, (0, 0), (0, 0)) == inst.c0
    rich = sample_rank_one()
    assert evaluate_objective(rich, (0, 0, 1, 0, 1), (1, 0, 1, 1, 1, 1, 0)) == 56


def test_evaluate_rejects_bad_assignments():
    inst = sample_general()
    with pytest.raises(ValueError):
        evaluate_objective(inst, (0,), (1, 1))
    with pytest.raises(ValueError):
        evaluate_objective(inst, (0, 2), (1, 1))


def test_evaluate_is_order_independent():
    rng = random.Random(11)
    for _ in range(30):
        inst = random_instance(rng, rng.randint(1, 4), rng.randint(1, 4))
        x = [rng.randint(0, 1) for _ in range(inst.m)]
        y = [rng.randint(0, 1) for _ in range(inst.n)]
        expected = evaluate_objective(inst, x, y)
        # Summing the same terms in a shuffled order must give the identical
        # rational, not merely a close one.
        terms = [inst.c0]
        terms += [inst.q[i][j] for i in range(inst.m) for j in range(inst.n) if x[i] and y[j]]
        terms += [inst.c[i] for i in range(inst.m) if x[i]]
        terms += [inst.d[j] for j in range(inst.n) if y[j]]
        rng.shuffle(terms)
        assert sum(terms, Fraction(0)) == expected


def test_cut_evaluation_and_validation():
    cut = CutInstance([[2]], [1], [-1], 3)
    assert evaluate_cut_objective(cut, (1,), (-1,)) == -2 + 1 + 1 + 3
    with pytest.raises(ValueError):
        evaluate_cut_objective(cut, (0,), (1,))


def test_normalize_orientation_noop_when_wide():
    inst = random_instance(random.Random(1), 2, 3)
    same, flipped = normalize_orientation(inst)
    assert same is inst and flipped is False


def test_normalize_orientation_transposes_tall():
    rng = random.Random(2)
    inst = random_instance(rng, 3, 2)
    turned, flipped = normalize_orientation(inst)
    assert flipped is True
    assert (turned.m, turned.n) == (2, 3)
    for x in [(0, 1, 1), (1, 0, 0)]:
        for y in [(1, 0), (0, 1)]:
            assert evaluate_objective(inst, x, y) == evaluate_objective(turned, y, x)
    assert transpose_instance(turned) == inst


def test_graph_validation():
    g = BipartiteWeightedGraph(2, 2, ((0, 0, 2), (1, 1, -2)))
    assert g.total_weight() == 0
    assert g.weight_matrix()[0] == [2, 0]
    with pytest.raises(ValueError):
        BipartiteWeightedGraph(2, 2, ((0, 0, 1), (0, 0, 2)))
    with pytest.raises(ValueError):
        BipartiteWeightedGraph(2, 2, ((2, 0, 1),))


def test_instances_are_immutable_and_hashable():
    inst = sample_general()
    with pytest.raises(Exception):
        inst.c0 = Fraction(1)
    assert hash(inst) == hash(sample_general())
