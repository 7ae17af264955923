"""Structure detection for cost matrices.

Four independent detectors drive solver selection: exact rank factorization
through reduced row echelon form, additive decomposability q_ij = a_i + b_j,
entrywise nonnegativity, and the minimum set of rows/columns whose deletion
removes all negative entries (a minimum vertex cover of the negativity
graph, via maximum bipartite matching and the alternating-reachability
cover construction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .model import freeze_matrix


@dataclass(frozen=True)
class RankFactorization:
    """Exact factorization q = left @ right with inner dimension p = rank(q).

    ``left`` is m x p (the pivot columns of q, so it has full column rank)
    and ``right`` is p x n (the nonzero rows of the reduced row echelon
    form, so it has full row rank).
    """

    p: int
    left: tuple[tuple[Fraction, ...], ...]
    right: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class AdditiveDecomposition:
    """Vectors with q_ij = row_offsets[i] + col_offsets[j] for all i, j."""

    row_offsets: tuple[Fraction, ...]
    col_offsets: tuple[Fraction, ...]


@dataclass(frozen=True)
class Eliminator:
    """Rows and columns whose deletion leaves the matrix nonnegative.

    Produced minimum-size: len(rows) + len(cols) equals the maximum
    matching size of the bipartite negativity graph.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.rows) + len(self.cols)


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot column indices, exactly.

    Pivots take the first nonzero entry in column order; with exact
    rationals no magnitude-based pivoting is needed.
    """
    rows = [list(row) for row in freeze_matrix(matrix)]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][col]
        if pivot != 1:
            rows[r] = [v / pivot for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rank_factorize(matrix: Sequence[Sequence]) -> RankFactorization:
    """Factor q = left @ right with p = rank(q), both factors exact.

    left collects the pivot columns of q; right collects the nonzero rows
    of RREF(q).  A zero matrix yields p = 0 with empty factors.
    """
    q = freeze_matrix(matrix)
    echelon, pivots = rref(q)
    p = len(pivots)
    left = tuple(tuple(row[col] for col in pivots) for row in q)
    right = tuple(tuple(echelon[k]) for k in range(p))
    return RankFactorization(p, left, right)


def additive_mismatch(
    q: Sequence[Sequence[Fraction]],
    row_offsets: Sequence[Fraction],
    col_offsets: Sequence[Fraction],
) -> tuple[int, int] | None:
    """First (i, j) with q_ij != row_offsets[i] + col_offsets[j], else None.

    The comparison q = rn/rd + cn/cd is cross-multiplied into integer
    arithmetic, which keeps the full-matrix scan fast at large sizes.
    """
    rn = [v.numerator for v in row_offsets]
    rd = [v.denominator for v in row_offsets]
    cn = [v.numerator for v in col_offsets]
    cd = [v.denominator for v in col_offsets]
    for i, row in enumerate(q):
        ani, adi = rn[i], rd[i]
        for j, v in enumerate(row):
            cdj = cd[j]
            if v.numerator * adi * cdj != (ani * cdj + cn[j] * adi) * v.denominator:
                return (i, j)
    return None


def detect_additive(matrix: Sequence[Sequence]) -> AdditiveDecomposition | None:
    """Recover q_ij = a_i + b_j if possible, else None.

    Convention: a_i = q_i0 and b_j = q_0j - q_00, which exists exactly when
    every 2x2 minor of the shifted matrix vanishes:
    q_ij - q_i0 - q_0j + q_00 = 0.  Any other decomposition differs by a
    constant shift between the two vectors.
    """
    q = freeze_matrix(matrix)
    base = q[0][0]
    col_offsets = tuple(v - base for v in q[0])
    row_offsets = tuple(row[0] for row in q)
    if additive_mismatch(q, row_offsets, col_offsets) is not None:
        return None
    return AdditiveDecomposition(row_offsets, col_offsets)


def detect_nonnegative(matrix: Sequence[Sequence]) -> bool:
    """True iff every entry of the matrix is >= 0."""
    return all(v >= 0 for row in freeze_matrix(matrix) for v in row)


def maximum_bipartite_matching(
    left_count: int, right_count: int, adjacency: Sequence[Sequence[int]]
) -> tuple[int, list[int], list[int]]:
    """Maximum matching by augmenting paths.

    ``adjacency[i]`` lists right neighbors of left vertex i.  Returns
    (size, match_of_left, match_of_right) with -1 for unmatched vertices.
    O(V * E), ample at the scales this package targets.
    """
    match_left = [-1] * left_count
    match_right = [-1] * right_count

    def try_augment(i: int, seen: list[bool]) -> bool:
        for j in adjacency[i]:
            if seen[j]:
                continue
            seen[j] = True
            if match_right[j] == -1 or try_augment(match_right[j], seen):
                match_left[i] = j
                match_right[j] = i
                return True
        return False

    size = 0
    for i in range(left_count):
        if try_augment(i, [False] * right_count):
            size += 1
    return size, match_left, match_right


def min_negative_eliminator(matrix: Sequence[Sequence]) -> Eliminator:
    """Minimum row/column set covering all negative entries.

    Builds the bipartite graph with an edge (i, j) per negative q_ij,
    computes a maximum matching, and extracts the vertex cover from
    alternating reachability: with Z the set reachable from unmatched left
    vertices (non-matching edges left-to-right, matching edges
    right-to-left), the cover is (L minus Z) union (R intersect Z).
    """
    q = freeze_matrix(matrix)
    m, n = len(q), len(q[0])
    adjacency = [[j for j in range(n) if q[i][j] < 0] for i in range(m)]
    size, match_left, match_right = maximum_bipartite_matching(m, n, adjacency)

    left_in_z = [match_left[i] == -1 for i in range(m)]
    right_in_z = [False] * n
    queue = [i for i in range(m) if left_in_z[i]]
    while queue:
        i = queue.pop()
        for j in adjacency[i]:
            if match_left[i] == j or right_in_z[j]:
                continue
            right_in_z[j] = True
            i2 = match_right[j]
            if i2 != -1 and not left_in_z[i2]:
                left_in_z[i2] = True
                queue.append(i2)

    rows = tuple(i for i in range(m) if not left_in_z[i])
    cols = tuple(j for j in range(n) if right_in_z[j])
    elim = Eliminator(rows, cols)
    if elim.size != size:
        raise AssertionError("vertex cover size disagrees with matching size")
    return elim
