"""Small canonical instances used by the tests, demos, and documentation.

Each exposes one structural class with a known optimum (verified by the
exhaustive oracle in the test suite).
"""

from __future__ import annotations

from .model import Instance


def sample_general() -> Instance:
    """2 x 2 instance with one negative entry; optimum 4."""
    return Instance([[1, -2], [3, 0]], [1, -1], [0, 2], 0)


def sample_rank_one() -> Instance:
    """5 x 7 rank-one instance with rich breakpoint structure; optimum 56.

    Built as the outer product of a = [2, 2, -3, 4, -2] and
    b = [1, 1, -4, 0, -1, -2, 1] with linear terms c = [4, 5, 6, 10, 5]
    and d = [5, -2, 3, 3, 4, 0, 2].
    """
    a = [2, 2, -3, 4, -2]
    b = [1, 1, -4, 0, -1, -2, 1]
    c = [4, 5, 6, 10, 5]
    d = [5, -2, 3, 3, 4, 0, 2]
    return Instance([[ai * bj for bj in b] for ai in a], c, d, 0)


def sample_additive() -> Instance:
    """2 x 2 additive instance (a = [3, 1], b = [0, -5]); optimum 4."""
    return Instance([[3, -2], [1, -4]], None, None, 0)


def sample_nonnegative() -> Instance:
    """1 x 1 nonnegative-matrix instance with a negative c; optimum 0."""
    return Instance([[1]], [-2], [0], 0)
