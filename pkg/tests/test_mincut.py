import random
from fractions import Fraction
from itertools import product

import pytest

from bqp01 import (
    FlowNetwork,
    Instance,
    SolverRefusal,
    build_cut_network,
    evaluate_objective,
    max_flow,
    min_negative_eliminator,
    reduce_with_fixing,
    solve_nonnegative,
    solve_with_eliminator,
)
from bqp01.fixtures import sample_general, sample_nonnegative

from conftest import exhaustive_best, random_instance, random_matrix, random_vector


def random_nonnegative_instance(rng, m, n):
    return Instance(
        random_matrix(rng, m, n, 0, 8),
        random_vector(rng, m),
        random_vector(rng, n),
        rng.randint(-5, 5),
    )


def labeling_cut_capacity(net, x, y, m):
    # Source side: s, plus every variable node labeled 1.
    side = {0}
    side.update(2 + i for i, v in enumerate(x) if v)
    side.update(2 + m + j for j, v in enumerate(y) if v)
    return sum((w for u, v, w in net.arcs if u in side and v not in side), Fraction(0))


def test_max_flow_single_arc():
    value, side = max_flow(FlowNetwork(2, 0, 1, ((0, 1, 5),)))
    assert value == 5 and side == {0}


def test_max_flow_diamond():
    net = FlowNetwork(4, 0, 1, ((0, 2, 3), (0, 3, 2), (2, 1, 2), (3, 1, 3)))
    assert max_flow(net)[0] == 4


def test_max_flow_fractional_capacities():
    net = FlowNetwork(
        3, 0, 2, ((0, 1, Fraction(1, 3)), (1, 2, Fraction(1, 2)))
    )
    assert max_flow(net)[0] == Fraction(1, 3)


def test_network_validation():
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 0, ())
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 1, ((0, 1, -1),))
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 1, ((0, 5, 1),))


def test_network_for_known_instance():
    inst = sample_nonnegative()
    net, offset = build_cut_network(inst)
    assert offset == 1
    assert set(net.arcs) == {(0, 2, Fraction(1)), (2, 3, Fraction(1)), (2, 1, Fraction(2))}
    value, side = max_flow(net)
    assert value == 1 and side == {0}
    sol = solve_nonnegative(inst)
    assert sol.value == 0 and sol.x == (0,) and sol.y == (0,)


def test_profitable_cell_selected():
    sol = solve_nonnegative(Instance([[1]]))
    assert sol.value == 1 and sol.x == (1,) and sol.y == (1,)


def test_all_ones_matrix():
    inst = Instance([[1] * 3] * 3)
    sol = solve_nonnegative(inst)
    assert sol.value == 9
    assert sol.x == (1, 1, 1) and sol.y == (1, 1, 1)


def test_zero_instance_network():
    inst = Instance([[0]], None, None, Fraction(3, 2))
    net, offset = build_cut_network(inst)
    assert net.arcs == () and offset == Fraction(3, 2)
    assert solve_nonnegative(inst).value == Fraction(3, 2)


def test_rejects_negative_matrix():
    with pytest.raises(ValueError):
        build_cut_network(sample_general())
    with pytest.raises(ValueError):
        solve_nonnegative(sample_general())


def test_cut_identity_everywhere():
    rng = random.Random(81)
    for _ in range(40):
        inst = random_nonnegative_instance(rng, rng.randint(1, 3), rng.randint(1, 3))
        net, offset = build_cut_network(inst)
        for x in product((0, 1), repeat=inst.m):
            for y in product((0, 1), repeat=inst.n):
                cap = labeling_cut_capacity(net, x, y, inst.m)
                assert offset - cap == evaluate_objective(inst, x, y)


def test_max_flow_equals_minimum_labeling_cut():
    rng = random.Random(82)
    for _ in range(30):
        inst = random_nonnegative_instance(rng, rng.randint(1, 3), rng.randint(1, 3))
        net, _ = build_cut_network(inst)
        flow, _ = max_flow(net)
        cuts = [
            labeling_cut_capacity(net, x, y, inst.m)
            for x in product((0, 1), repeat=inst.m)
            for y in product((0, 1), repeat=inst.n)
        ]
        assert flow == min(cuts)


def test_nonnegative_matches_oracle():
    rng = random.Random(83)
    for _ in range(100):
        inst = random_nonnegative_instance(rng, rng.randint(1, 4), rng.randint(1, 5))
        sol = solve_nonnegative(inst)
        assert sol.value == exhaustive_best(inst)
        assert sol.value == evaluate_objective(inst, sol.x, sol.y)


def test_reduction_folds_fixings_exactly():
    rng = random.Random(84)
    for _ in range(50):
        inst = random_instance(rng, rng.randint(1, 4), rng.randint(1, 4))
        fixed_x = {
            i: rng.randint(0, 1) for i in range(inst.m) if rng.random() < 0.4
        }
        fixed_y = {
            j: rng.randint(0, 1) for j in range(inst.n) if rng.random() < 0.4
        }
        reduced = reduce_with_fixing(inst, fixed_x, fixed_y)
        for x_free in product((0, 1), repeat=len(reduced.free_rows)):
            for y_free in product((0, 1), repeat=len(reduced.free_cols)):
                x, y = reduced.assemble(x_free, y_free)
                assert reduced.objective(x_free, y_free) + reduced.constant == \
                    evaluate_objective(inst, x, y)


def test_reduction_rejects_bad_fixing():
    inst = sample_general()
    with pytest.raises(ValueError):
        reduce_with_fixing(inst, {5: 1}, {})
    with pytest.raises(ValueError):
        reduce_with_fixing(inst, {0: 2}, {})


def test_eliminator_solver_on_mixed_instance():
    inst = sample_general()
    elim = min_negative_eliminator(inst.q)
    assert elim.size == 1
    sol = solve_with_eliminator(inst, elim)
    assert sol.value == 4


def test_eliminator_solver_trivial_on_nonnegative():
    inst = sample_nonnegative()
    elim = min_negative_eliminator(inst.q)
    assert elim.size == 0
    assert solve_with_eliminator(inst, elim).value == solve_nonnegative(inst).value


def test_eliminator_solver_refuses_past_limit():
    q = [[-1, 0], [0, -1]]
    inst = Instance(q)
    elim = min_negative_eliminator(q)
    with pytest.raises(SolverRefusal):
        solve_with_eliminator(inst, elim, size_limit=1)


def test_eliminator_solver_matches_oracle():
    rng = random.Random(85)
    for _ in range(120):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        q = random_matrix(rng, m, n, 0, 8)
        for _ in range(rng.randint(0, 3)):
            q[rng.randrange(m)][rng.randrange(n)] = rng.randint(-8, -1)
        inst = Instance(q, random_vector(rng, m), random_vector(rng, n), rng.randint(-5, 5))
        sol = solve_with_eliminator(inst, min_negative_eliminator(q))
        assert sol.value == exhaustive_best(inst)
        assert sol.value == evaluate_objective(inst, sol.x, sol.y)


def test_eliminator_handles_full_row_and_column_fixings():
    # Everything negative: the eliminator may absorb a whole side.
    inst = Instance([[-1], [-1]], [3, 3], [5], 0)
    elim = min_negative_eliminator(inst.q)
    sol = solve_with_eliminator(inst, elim)
    assert sol.value == exhaustive_best(inst)
