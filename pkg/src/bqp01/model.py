"""Data model for bipartite unconstrained 0-1 quadratic programs.

An instance is the coefficient tuple (Q, c, d, c0) of the objective

    f(x, y) = x^T Q y + c.x + d.y + c0

maximized over binary vectors x (length m) and y (length n).  Every
coefficient is an exact rational (``fractions.Fraction``); no operation in
this package rounds.  Instances are immutable, so they are safe to share
between threads and to use as dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Numeric = Union[int, str, float, Fraction]


def as_fraction(value: Numeric) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Accepts ints, Fractions, exact decimal strings like ``-2.5``, and
    rational strings like ``7/3``.
    """
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def freeze_vector(values: Sequence[Numeric]) -> tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)


def freeze_matrix(rows: Sequence[Sequence[Numeric]]) -> tuple[tuple[Fraction, ...], ...]:
    out = tuple(freeze_vector(row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("matrix rows have inconsistent lengths")
    return out


def _coerce_fields(obj) -> None:
    q = freeze_matrix(obj.q)
    if not q or not q[0]:
        raise ValueError("matrix must have at least one row and one column")
    m, n = len(q), len(q[0])
    c = freeze_vector(obj.c) if obj.c is not None else (Fraction(0),) * m
    d = freeze_vector(obj.d) if obj.d is not None else (Fraction(0),) * n
    if len(c) != m:
        raise ValueError(f"c has length {len(c)}, expected {m}")
    if len(d) != n:
        raise ValueError(f"d has length {len(d)}, expected {n}")
    object.__setattr__(obj, "q", q)
    object.__setattr__(obj, "c", c)
    object.__setattr__(obj, "d", d)
    object.__setattr__(obj, "c0", as_fraction(obj.c0))


@dataclass(frozen=True)
class Instance:
    """A BQP01 instance: maximize x^T Q y + c.x + d.y + c0 over binary x, y."""

    q: tuple[tuple[Fraction, ...], ...]
    c: tuple[Fraction, ...] | None = None
    d: tuple[Fraction, ...] | None = None
    c0: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        _coerce_fields(self)

    @property
    def m(self) -> int:
        return len(self.q)

    @property
    def n(self) -> int:
        return len(self.q[0])


@dataclass(frozen=True)
class CutInstance:
    """Same coefficient shape as :class:`Instance`, variables in {-1, +1}."""

    q: tuple[tuple[Fraction, ...], ...]
    c: tuple[Fraction, ...] | None = None
    d: tuple[Fraction, ...] | None = None
    c0: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        _coerce_fields(self)

    @property
    def m(self) -> int:
        return len(self.q)

    @property
    def n(self) -> int:
        return len(self.q[0])

    def is_homogeneous(self) -> bool:
        return (
            all(v == 0 for v in self.c)
            and all(v == 0 for v in self.d)
            and self.c0 == 0
        )


@dataclass(frozen=True)
class Solution:
    """A feasible point and its exact objective value."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class BipartiteWeightedGraph:
    """Edge-weighted bipartite graph on left part {0..m-1}, right part {0..n-1}."""

    m: int
    n: int
    edges: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("graph parts must be nonempty")
        edges = tuple((i, j, as_fraction(w)) for (i, j, w) in self.edges)
        seen = set()
        for i, j, _ in edges:
            if not (0 <= i < self.m and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "edges", edges)

    def total_weight(self) -> Fraction:
        return sum((w for _, _, w in self.edges), Fraction(0))

    def weight_matrix(self) -> list[list[Fraction]]:
        """Dense m x n weight matrix with 0 for absent edges."""
        mat = [[Fraction(0)] * self.n for _ in range(self.m)]
        for i, j, w in self.edges:
            mat[i][j] = w
        return mat


def _check_assignment(vec: Sequence[int], size: int, allowed: tuple[int, int], label: str) -> None:
    if len(vec) != size:
        raise ValueError(f"{label} has length {len(vec)}, expected {size}")
    for v in vec:
        if v not in allowed:
            raise ValueError(f"{label} entries must be in {allowed}, got {v!r}")


def _bilinear_value(q, c, d, c0, x, y) -> Fraction:
    total = c0
    for i, row in enumerate(q):
        if x[i]:
            xi = x[i]
            acc = Fraction(0)
            for j, qij in enumerate(row):
                if y[j]:
                    acc += qij * y[j]
            total += xi * acc
    for i, ci in enumerate(c):
        total += ci * x[i]
    for j, dj in enumerate(d):
        total += dj * y[j]
    return total


def evaluate_objective(inst: Instance, x: Sequence[int], y: Sequence[int]) -> Fraction:
    """Exact objective value of ``inst`` at the binary point (x, y)."""
    _check_assignment(x, inst.m, (0, 1), "x")
    _check_assignment(y, inst.n, (0, 1), "y")
    return _bilinear_value(inst.q, inst.c, inst.d, inst.c0, x, y)


def evaluate_cut_objective(cut: CutInstance, x: Sequence[int], y: Sequence[int]) -> Fraction:
    """Exact objective value of ``cut`` at the sign point (x, y) in {-1,+1}."""
    _check_assignment(x, cut.m, (-1, 1), "x")
    _check_assignment(y, cut.n, (-1, 1), "y")
    return _bilinear_value(cut.q, cut.c, cut.d, cut.c0, x, y)


def transpose_instance(inst: Instance) -> Instance:
    """Swap the roles of x and y: transpose Q and exchange c with d."""
    qt = tuple(tuple(inst.q[i][j] for i in range(inst.m)) for j in range(inst.n))
    return Instance(qt, inst.d, inst.c, inst.c0)


def normalize_orientation(inst: Instance) -> tuple[Instance, bool]:
    """Return an equivalent instance with m <= n, plus a transposed flag.

    When the flag is True the instance was transposed, and a solution
    (x, y) of the result corresponds to (y, x) of the input with the same
    objective value.
    """
    if inst.m <= inst.n:
        return inst, False
    return transpose_instance(inst), True
