import random
from fractions import Fraction
from itertools import product

import pytest

from bqp01 import (
    Instance,
    RankOneForm,
    pkp_breakpoints,
    solve_rank_one,
    solve_rank_one_zero_linear,
    ulp_breakpoints,
)
from bqp01.fixtures import sample_rank_one

from conftest import exhaustive_best, random_rank_one_instance, random_vector


RICH = RankOneForm.from_instance(sample_rank_one())


def test_form_recovery_from_instance():
    assert RICH.a == (2, 2, -3, 4, -2)
    assert RICH.b == (1, 1, -4, 0, -1, -2, 1)
    assert RICH.lambda_min == -5
    assert RICH.lambda_max == 8


def test_form_rejects_higher_rank():
    with pytest.raises(ValueError):
        RankOneForm.from_instance(Instance([[1, 0], [0, 1]]))


def test_concave_track_known_values():
    track = pkp_breakpoints(RICH)
    assert track.breakpoints == (-5, 1, 3, 6, 8)
    assert track.values == (11, 26, 30, 24, 19)
    states = [track.state_after(k) for k in range(5)]
    assert states == [
        (0, 0, 1, 0, 1),
        (0, 1, 1, 1, 1),
        (1, 1, 1, 1, 1),
        (1, 1, 0, 1, 1),
        (1, 1, 0, 1, 0),
    ]


def test_convex_track_known_values():
    track = ulp_breakpoints(RICH)
    assert track.breakpoints == (-2, 0, Fraction(3, 4), 2, 4)
    assert track.values == (27, 17, Fraction(59, 4), 16, 20)
    assert track.initial == (1, 0, 1, 1, 1, 1, 0)
    assert (track.intercepts[0], track.slopes[0]) == (15, -6)
    assert (track.intercepts[3], track.slopes[3]) == (14, 1)
    assert track.intercepts[0] + RICH.lambda_min * track.slopes[0] == 45


def test_sweep_candidate_scores():
    concave = pkp_breakpoints(RICH)
    convex = ulp_breakpoints(RICH)
    scores = []
    flips = 0
    for k, t in enumerate(concave.breakpoints):
        while flips < len(convex.breakpoints) and convex.breakpoints[flips] <= t:
            flips += 1
        scores.append(
            concave.values[k] + convex.intercepts[flips] + t * convex.slopes[flips]
        )
    assert scores == [56, 41, 48, 50, 51]


def test_solver_on_rich_instance():
    sol = solve_rank_one(RICH)
    assert sol.value == 56
    assert sol.x == (0, 0, 1, 0, 1)
    assert sol.y == (1, 0, 1, 1, 1, 1, 0)
    assert RICH.evaluate(sol.x, sol.y) == 56


def test_trivial_single_cell():
    form = RankOneForm([1], [1], [0], [0], 0)
    assert solve_rank_one(form).value == 1
    track = pkp_breakpoints(form)
    assert track.breakpoints == (0, 1)
    assert track.values == (0, 0)


def test_concave_track_degenerate_zero_a():
    form = RankOneForm([0, 0], [1, 2], [3, -1], [0, 0], 0)
    track = pkp_breakpoints(form)
    assert track.breakpoints == (0,)
    assert track.groups == ()
    assert track.initial == (1, 0)
    assert track.values == (3,)


def test_convex_track_no_breakpoints_for_zero_b():
    form = RankOneForm([1], [0, 0], [0], [1, -1], 0)
    track = ulp_breakpoints(form)
    assert track.breakpoints == ()
    assert track.initial == (1, 0)
    assert track.intercepts == (1,) and track.slopes == (0,)


def test_boundary_tie_enters_initial_solution():
    # d + lambda_min * b == 0 is included (the >= rule).
    assert RICH.d[0] + RICH.lambda_min * RICH.b[0] == 0
    assert ulp_breakpoints(RICH).initial[0] == 1


def test_track_structural_invariants():
    rng = random.Random(51)
    for _ in range(60):
        inst = random_rank_one_instance(rng, rng.randint(1, 5), rng.randint(1, 5))
        form = RankOneForm.from_instance(inst)
        concave = pkp_breakpoints(form)
        m = len(form.a)
        assert len(concave.breakpoints) <= m + 1
        assert concave.breakpoints[0] == form.lambda_min
        assert concave.breakpoints[-1] == form.lambda_max
        # Exact state identities at every breakpoint.
        for k, t in enumerate(concave.breakpoints):
            x = concave.state_after(k)
            assert sum(a * xi for a, xi in zip(form.a, x)) == t
            assert sum(c * xi for c, xi in zip(form.c, x)) == concave.values[k]
        # Concavity: segment slopes strictly decrease.
        slopes = [
            (concave.values[k + 1] - concave.values[k])
            / (concave.breakpoints[k + 1] - concave.breakpoints[k])
            for k in range(len(concave.breakpoints) - 1)
        ]
        assert all(s1 > s2 for s1, s2 in zip(slopes, slopes[1:]))

        convex = ulp_breakpoints(form)
        # Convexity: running slopes strictly increase.
        assert all(
            s1 < s2 for s1, s2 in zip(convex.slopes, convex.slopes[1:])
        )
        # Flips are value-neutral exactly at their tie points.
        for t, group in zip(convex.breakpoints, convex.groups):
            for j, _ in group:
                assert form.d[j] + t * form.b[j] == 0
        # Envelope values match the recorded intercept/slope pairs.
        for ell, t in enumerate(convex.breakpoints):
            state = convex.state_after(ell + 1)
            dy = sum(dv for dv, yj in zip(form.d, state) if yj)
            by = sum(bv for bv, yj in zip(form.b, state) if yj)
            assert dy == convex.intercepts[ell + 1]
            assert by == convex.slopes[ell + 1]
            assert convex.values[ell] == dy + t * by


def test_track_flip_groups_disjoint():
    track = pkp_breakpoints(RICH)
    seen = set()
    for group in track.groups:
        for index, _ in group:
            assert index not in seen
            seen.add(index)


def test_solver_matches_oracle():
    rng = random.Random(52)
    for _ in range(300):
        inst = random_rank_one_instance(rng, rng.randint(1, 5), rng.randint(1, 6))
        form = RankOneForm.from_instance(inst)
        sol = solve_rank_one(form)
        assert sol.value == exhaustive_best(inst)
        assert form.evaluate(sol.x, sol.y) == sol.value


def test_solver_handles_zero_matrix():
    inst = Instance([[0, 0], [0, 0]], [1, -1], [-1, 1], 2)
    form = RankOneForm.from_instance(inst)
    assert solve_rank_one(form).value == 4


def test_zero_linear_simple():
    sol = solve_rank_one_zero_linear(0, [1], 0, [1], [0], [0])
    assert sol.value == 1
    assert sol.y == (1,)


def test_zero_linear_worked_example():
    sol = solve_rank_one_zero_linear(1, [-2], 0, [3, -3], [5], [0, 0])
    assert sol.value == 8
    assert sol.x == (1,)
    assert sol.y == (0, 1)


def test_zero_linear_rejects_two_sided_linear_terms():
    with pytest.raises(ValueError, match="solve_rank_one"):
        solve_rank_one_zero_linear(0, [1], 0, [1], [1], [1])


def brute_force_affine(a0, a, b0, b, c, d):
    best = None
    for x in product((0, 1), repeat=len(a)):
        for y in product((0, 1), repeat=len(b)):
            ax = a0 + sum(v for v, s in zip(a, x) if s)
            by = b0 + sum(v for v, s in zip(b, y) if s)
            value = ax * by + sum(v for v, s in zip(c, x) if s) + sum(
                v for v, s in zip(d, y) if s
            )
            if best is None or value > best:
                best = value
    return best


def test_zero_linear_matches_brute_force():
    rng = random.Random(53)
    for _ in range(150):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        a0, b0 = rng.randint(-4, 4), rng.randint(-4, 4)
        a = random_vector(rng, m, -5, 5)
        b = random_vector(rng, n, -5, 5)
        if rng.random() < 0.5:
            c, d = random_vector(rng, m, -5, 5), [0] * n
        else:
            c, d = [0] * m, random_vector(rng, n, -5, 5)
        sol = solve_rank_one_zero_linear(a0, a, b0, b, c, d)
        assert sol.value == brute_force_affine(a0, a, b0, b, c, d)
