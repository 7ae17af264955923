"""Shared test helpers: independent reference optima and instance builders.

``exhaustive_best`` is the ground truth used throughout: a plain scan of
every binary assignment through the public objective evaluator, with no
structural shortcuts.  Random instances come from ``random.Random`` so the
tests do not depend on the package's own generator.
"""

from fractions import Fraction
from itertools import product

from bqp01 import Instance, evaluate_objective


def exhaustive_best(inst: Instance) -> Fraction:
    """Best objective over all 2^(m+n) assignments, by direct evaluation."""
    best = None
    for x in product((0, 1), repeat=inst.m):
        for y in product((0, 1), repeat=inst.n):
            value = evaluate_objective(inst, x, y)
            if best is None or value > best:
                best = value
    return best


def random_vector(rng, size, lo=-8, hi=8):
    return [rng.randint(lo, hi) for _ in range(size)]


def random_matrix(rng, m, n, lo=-8, hi=8):
    return [random_vector(rng, n, lo, hi) for _ in range(m)]


def random_instance(rng, m, n, lo=-8, hi=8):
    return Instance(
        random_matrix(rng, m, n, lo, hi),
        random_vector(rng, m, lo, hi),
        random_vector(rng, n, lo, hi),
        rng.randint(lo, hi),
    )


def random_rank_one_instance(rng, m, n, lo=-6, hi=6):
    a = random_vector(rng, m, lo, hi)
    while not any(a):
        a = random_vector(rng, m, lo, hi)
    b = random_vector(rng, n, lo, hi)
    while not any(b):
        b = random_vector(rng, n, lo, hi)
    q = [[ai * bj for bj in b] for ai in a]
    return Instance(
        q, random_vector(rng, m, lo, hi), random_vector(rng, n, lo, hi),
        rng.randint(lo, hi),
    )


def random_fraction(rng, denom_max=4, num_max=8):
    return Fraction(rng.randint(-num_max, num_max), rng.randint(1, denom_max))
