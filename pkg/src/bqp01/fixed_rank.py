"""Polynomial solver for instances whose cost matrix has fixed rank p.

With q = left @ right (rank factorization), the objective along the
parameter vector t_k = (k-th column of left).x decomposes into a concave
multiparametric LP over x and a convex completion over y.  The optimum is
attained at an extreme point of a characteristic region of some dual
feasible basis structure of the x-side LP, and every such extreme point is
a binary x-vector with basic entries in {0,1} and nonbasic entries pinned
at their bounds.  Enumerating all C(m,p) candidate bases, resolving each
basis's unique lower/upper split from reduced-cost signs, and emitting the
2^p corner vectors per structure yields a candidate set of at most
C(m,p) * 2^p binary vectors that provably contains an optimal x.

Degenerate (zero) reduced costs are resolved by a symbolic lexicographic
perturbation of the objective vector, c_i -> c_i + eps^i for an
infinitesimal eps: the sign of a reduced cost becomes the sign of the
first nonzero in (base value, perturbation coefficients by variable
index).  The perturbation only selects structures; candidates are always
scored under the original objective.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence

from .analysis import rank_factorize
from .errors import SolverRefusal
from .model import Instance, Solution, evaluate_objective, freeze_matrix, freeze_vector

DEFAULT_P_LIMIT = 6


@dataclass(frozen=True)
class ReducedCostSign:
    """Sign of a symbolically perturbed reduced cost.

    ``coefficients`` holds the nonzero perturbation coefficients as
    (variable index, value) pairs sorted by index.  The sign is that of
    ``base`` when nonzero, otherwise of the first nonzero coefficient;
    the coefficient -1 at the nonbasic variable itself guarantees the
    sign is never zero.
    """

    base: Fraction
    coefficients: tuple[tuple[int, Fraction], ...]

    @property
    def sign(self) -> int:
        if self.base != 0:
            return 1 if self.base > 0 else -1
        for _, value in self.coefficients:
            if value != 0:
                return 1 if value > 0 else -1
        raise ValueError("perturbed reduced cost is identically zero")


@dataclass(frozen=True)
class BasisStructure:
    """Partition of x-variables into basic, at-lower-bound, at-upper-bound.

    ``basis_inverse`` is the exact inverse of the p x p basis matrix whose
    columns are the constraint columns of the basic variables.
    """

    basis: tuple[int, ...]
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    basis_inverse: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.basis) + len(self.lower) + len(self.upper)


def invert_matrix(
    rows: Sequence[Sequence[Fraction]],
) -> tuple[tuple[Fraction, ...], ...] | None:
    """Exact inverse by Gauss-Jordan elimination, or None if singular."""
    p = len(rows)
    aug = [list(rows[i]) + [Fraction(int(i == j)) for j in range(p)] for i in range(p)]
    for col in range(p):
        pivot_row = None
        for i in range(col, p):
            if aug[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return None
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        if pivot != 1:
            aug[col] = [v / pivot for v in aug[col]]
        for i in range(p):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[p:]) for row in aug)


def reduced_cost_sign(
    left: Sequence[Sequence[Fraction]],
    c: Sequence[Fraction],
    basis: Sequence[int],
    basis_inverse: Sequence[Sequence[Fraction]],
    j: int,
) -> ReducedCostSign:
    """Perturbed reduced cost of nonbasic variable j for the given basis."""
    p = len(basis)
    column = left[j]
    multipliers = [
        sum((basis_inverse[k][l] * column[l] for l in range(p)), Fraction(0))
        for k in range(p)
    ]
    base = sum(
        (c[basis[k]] * multipliers[k] for k in range(p)), Fraction(0)
    ) - c[j]
    coeffs = {basis[k]: multipliers[k] for k in range(p) if multipliers[k] != 0}
    coeffs[j] = Fraction(-1)
    return ReducedCostSign(base, tuple(sorted(coeffs.items())))


def enumerate_dual_feasible_bases(
    left: Sequence[Sequence], c: Sequence
) -> list[BasisStructure]:
    """All dual feasible basis structures of the x-side parametric LP.

    ``left`` is the m x p rank factor; its transpose is the constraint
    matrix.  Each nonsingular p-subset of variables yields exactly one
    structure: nonbasic variables go to the lower set on positive reduced
    cost and to the upper set on negative (signs are never zero under the
    symbolic perturbation).  At most C(m, p) structures are returned.
    """
    left = freeze_matrix(left) if left and left[0] else tuple(tuple(r) for r in left)
    c = freeze_vector(c)
    m = len(c)
    if len(left) != m:
        raise ValueError("factor row count must match objective length")
    p = len(left[0]) if left else 0
    if p > 0:
        probe = rank_factorize(tuple(zip(*left)))
        if probe.p != p:
            raise ValueError(f"factor has column rank {probe.p}, expected {p}")
    structures = []
    for basis in combinations(range(m), p):
        basis_matrix = [[left[i][k] for i in basis] for k in range(p)]
        inverse = invert_matrix(basis_matrix)
        if inverse is None and p > 0:
            continue
        if inverse is None:
            inverse = ()
        lower, upper = [], []
        basis_set = set(basis)
        for j in range(m):
            if j in basis_set:
                continue
            rc = reduced_cost_sign(left, c, basis, inverse, j)
            if rc.sign > 0:
                lower.append(j)
            else:
                upper.append(j)
        structures.append(
            BasisStructure(basis, tuple(lower), tuple(upper), inverse)
        )
    return structures


def enumerate_all_basis_structures(
    left: Sequence[Sequence], m: int
) -> Iterator[BasisStructure]:
    """Every nonsingular basis with every lower/upper split of the rest.

    A deliberately exponential superset of the dual feasible structures,
    used to check that dual-feasibility filtering never discards the
    optimum.  Not for production sizes.
    """
    p = len(left[0]) if left and left[0] else 0
    for basis in combinations(range(m), p):
        basis_matrix = [[left[i][k] for i in basis] for k in range(p)]
        inverse = invert_matrix(basis_matrix)
        if inverse is None and p > 0:
            continue
        if inverse is None:
            inverse = ()
        rest = [j for j in range(m) if j not in set(basis)]
        for bits in product((0, 1), repeat=len(rest)):
            lower = tuple(j for j, bit in zip(rest, bits) if bit == 0)
            upper = tuple(j for j, bit in zip(rest, bits) if bit == 1)
            yield BasisStructure(basis, lower, upper, inverse)


def candidates_from_basis(structure: BasisStructure) -> list[tuple[int, ...]]:
    """The 2^p corner x-vectors of a basis structure.

    Basic positions take every 0/1 combination; lower-set positions are 0,
    upper-set positions are 1.  The parameter vector itself is never
    materialized.
    """
    template = [0] * structure.size
    for j in structure.upper:
        template[j] = 1
    result = []
    for corner in product((0, 1), repeat=len(structure.basis)):
        x = list(template)
        for position, bit in zip(structure.basis, corner):
            x[position] = bit
        result.append(tuple(x))
    return result


def complete_y(
    right: Sequence[Sequence[Fraction]],
    d: Sequence[Fraction],
    left: Sequence[Sequence[Fraction]],
    x: Sequence[int],
) -> tuple[int, ...]:
    """Closed-form optimal y for fixed x: y_j = 1 iff its coefficient > 0."""
    p = len(right)
    sums = [
        sum((left[i][k] for i in range(len(x)) if x[i]), Fraction(0))
        for k in range(p)
    ]
    n = len(d)
    y = [0] * n
    for j in range(n):
        coeff = d[j]
        for k in range(p):
            coeff += right[k][j] * sums[k]
        if coeff > 0:
            y[j] = 1
    return tuple(y)


def solve_fixed_rank(
    inst: Instance,
    p_limit: int = DEFAULT_P_LIMIT,
    *,
    dual_filter: bool = True,
) -> Solution:
    """Optimal solution via basis-structure candidate enumeration.

    Rank-factorizes the cost matrix, enumerates candidate x-vectors from
    all dual feasible basis structures (or from the exponential superset
    when ``dual_filter`` is False), completes each with its closed-form y,
    and returns the best under the original objective.  Ties prefer the
    lexicographically smallest (x, y).
    """
    fact = rank_factorize(inst.q)
    if fact.p > p_limit:
        raise SolverRefusal(
            f"matrix rank {fact.p} exceeds the configured limit {p_limit}",
            limit=p_limit,
            measured=fact.p,
        )
    if dual_filter:
        structures: Iterable[BasisStructure] = enumerate_dual_feasible_bases(
            fact.left, inst.c
        )
    else:
        structures = enumerate_all_basis_structures(fact.left, inst.m)

    best: tuple[Fraction, tuple[int, ...], tuple[int, ...]] | None = None
    bound = comb(inst.m, fact.p) * (2 ** fact.p)
    count = 0
    for structure in structures:
        for x in candidates_from_basis(structure):
            count += 1
            y = complete_y(fact.right, inst.d, fact.left, x)
            value = evaluate_objective(inst, x, y)
            if best is None or value > best[0] or (
                value == best[0] and (x, y) < (best[1], best[2])
            ):
                best = (value, x, y)
    if dual_filter and count > bound:
        raise AssertionError(f"candidate count {count} exceeds C(m,p)*2^p = {bound}")
    assert best is not None
    return Solution(best[1], best[2], best[0])
