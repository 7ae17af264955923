"""O(mn log n) solver for additively decomposable cost matrices.

When q_ij = a_i + b_j the objective collapses onto the pair of cardinalities
K = sum(y), L = sum(x):

    f(x, y) = sum_i (K a_i + c_i) x_i + sum_j (L b_j + d_j) y_j + c0

so for each fixed (K, L) the best x picks the L largest keys K a_i + c_i
and the best y picks the K largest keys L b_j + d_j.  Sorting the keys once
per K (resp. L) makes each row of partial optima a prefix-sum scan, and the
overall optimum is the best of the (n+1)(m+1) combinations.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .analysis import AdditiveDecomposition, additive_mismatch
from .model import Instance, Solution


def common_denominator_scale(*vectors: Sequence[Fraction]) -> int:
    """Least common multiple of every denominator across the vectors."""
    scale = 1
    for vector in vectors:
        for value in vector:
            scale = lcm(scale, value.denominator)
    return scale


def solve_additive(inst: Instance, dec: AdditiveDecomposition) -> Solution:
    """Optimal solution given a verified additive decomposition of inst.q.

    Raises ValueError if the decomposition does not reproduce the matrix
    exactly.  Ties between (K, L) pairs prefer the smallest K, then the
    smallest L; ties inside a sort prefer smaller indices.  The result is
    invariant under the shift (a + t, b - t) of the decomposition.
    """
    m, n = inst.m, inst.n
    a, b = dec.row_offsets, dec.col_offsets
    if len(a) != m or len(b) != n:
        raise ValueError("decomposition dimensions do not match the instance")
    bad = additive_mismatch(inst.q, a, b)
    if bad is not None:
        i, j = bad
        raise ValueError(
            f"decomposition mismatch at ({i}, {j}): "
            f"{inst.q[i][j]} != {a[i]} + {b[j]}"
        )

    # Clear denominators once: scaling a, b, c, d, c0 by the same positive
    # integer scales every candidate value uniformly, so the argmax is
    # unchanged and plain integer arithmetic carries the whole scan.
    scale = common_denominator_scale(a, b, inst.c, inst.d, (inst.c0,))
    ia = [int(v * scale) for v in a]
    ib = [int(v * scale) for v in b]
    ic = [int(v * scale) for v in inst.c]
    id_ = [int(v * scale) for v in inst.d]
    ic0 = int(inst.c0 * scale)

    # y-side prefix table: row L holds, for each K, the best sum of K keys
    # L*b_j + d_j; (m+1) rows of (n+1) prefix sums.
    y_table: list[list[int]] = []
    for L in range(m + 1):
        pairs = [(-(L * ib[j] + id_[j]), j) for j in range(n)]
        pairs.sort()
        prefix = [0] * (n + 1)
        acc = 0
        for K in range(n):
            acc -= pairs[K][0]
            prefix[K + 1] = acc
        y_table.append(prefix)

    best_total: int | None = None
    best_k = 0
    best_l = 0
    for K in range(n + 1):
        pairs = [(-(K * ia[i] + ic[i]), i) for i in range(m)]
        pairs.sort()
        x_prefix = 0
        for L in range(m + 1):
            if L > 0:
                x_prefix -= pairs[L - 1][0]
            total = x_prefix + y_table[L][K]
            if best_total is None or total > best_total:
                best_total = total
                best_k = K
                best_l = L
    assert best_total is not None

    x_pairs = [(-(best_k * ia[i] + ic[i]), i) for i in range(m)]
    x_pairs.sort()
    x = [0] * m
    for _, i in x_pairs[:best_l]:
        x[i] = 1
    y_pairs = [(-(best_l * ib[j] + id_[j]), j) for j in range(n)]
    y_pairs.sort()
    y = [0] * n
    for _, j in y_pairs[:best_k]:
        y[j] = 1

    value = Fraction(best_total + ic0, scale)
    return Solution(tuple(x), tuple(y), value)
