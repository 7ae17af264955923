"""O(n log n) solver for instances whose cost matrix has rank one.

With q_ij = a_i b_j the objective splits along the scalar t = a.x into two
piecewise-linear envelopes: the concave optimum of the parametric knapsack
problem max{c.x : a.x = t, x in [0,1]^m} and the convex optimum of the
unconstrained linear problem max{d.y + t b.y : y in [0,1]^n}.  Both
envelopes change slope at finitely many breakpoints with closed-form
locations, every breakpoint solution is integral, and the instance optimum
is attained at a breakpoint of the concave track.  A single merged sweep
over both breakpoint lists therefore solves the instance.

Internally the pipeline clears denominators once (a uniform positive
scaling of the objective, so the argmax is untouched) and runs on plain
integers; ratio sorting uses float keys for speed with exact
cross-multiplication repair of equal-float runs, so the result is exact
regardless of float precision.  An O(n) special case handles affine
rank-one objectives whose linear term vanishes on one side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, reduce
from math import gcd, inf, lcm
from typing import Sequence

from .analysis import rank_factorize
from .model import Instance, Solution, as_fraction, freeze_vector


@dataclass(frozen=True)
class RankOneForm:
    """Factored instance: maximize (a.x)(b.y) + c.x + d.y + c0."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    d: tuple[Fraction, ...]
    c0: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", freeze_vector(self.a))
        object.__setattr__(self, "b", freeze_vector(self.b))
        object.__setattr__(self, "c", freeze_vector(self.c))
        object.__setattr__(self, "d", freeze_vector(self.d))
        object.__setattr__(self, "c0", as_fraction(self.c0))
        if len(self.a) != len(self.c):
            raise ValueError("a and c must have equal length")
        if len(self.b) != len(self.d):
            raise ValueError("b and d must have equal length")

    @classmethod
    def from_instance(cls, inst: Instance) -> "RankOneForm":
        """Factor inst.q = a b^T; raises if rank(q) exceeds one."""
        fact = rank_factorize(inst.q)
        if fact.p > 1:
            raise ValueError(f"matrix has rank {fact.p}, expected at most 1")
        if fact.p == 0:
            a = (Fraction(0),) * inst.m
            b = (Fraction(0),) * inst.n
        else:
            a = tuple(row[0] for row in fact.left)
            b = fact.right[0]
        return cls(a, b, inst.c, inst.d, inst.c0)

    @property
    def lambda_min(self) -> Fraction:
        """Smallest attainable a.x over the unit box."""
        return sum((v for v in self.a if v < 0), Fraction(0))

    @property
    def lambda_max(self) -> Fraction:
        """Largest attainable a.x over the unit box."""
        return sum((v for v in self.a if v > 0), Fraction(0))

    def evaluate(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        ax = sum((v for v, xi in zip(self.a, x) if xi), Fraction(0))
        by = sum((v for v, yj in zip(self.b, y) if yj), Fraction(0))
        cx = sum((v for v, xi in zip(self.c, x) if xi), Fraction(0))
        dy = sum((v for v, yj in zip(self.d, y) if yj), Fraction(0))
        return ax * by + cx + dy + self.c0


@dataclass(frozen=True)
class BreakpointTrack:
    """Breakpoints of a piecewise-linear parametric optimum.

    ``values[k]`` is the envelope value at ``breakpoints[k]``.  ``groups``
    lists the variable flips between consecutive states as (index, new
    value) pairs; groups are pairwise disjoint, so the solution after any
    number of flips is reconstructed by replaying them onto ``initial``
    with :meth:`state_after`.  For the concave (knapsack) track group k
    moves the solution from breakpoint k to k+1; for the convex (linear)
    track group k fires at breakpoint k itself.  The convex track also
    records per-segment intercepts and slopes, so its envelope can be
    evaluated anywhere: value after k flips at parameter t is
    intercepts[k] + t * slopes[k].
    """

    breakpoints: tuple[Fraction, ...]
    groups: tuple[tuple[tuple[int, int], ...], ...]
    initial: tuple[int, ...]
    values: tuple[Fraction, ...]
    intercepts: tuple[Fraction, ...] = ()
    slopes: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        for left, right in zip(self.breakpoints, self.breakpoints[1:]):
            if not left < right:
                raise ValueError("breakpoints must be strictly increasing")
        seen: set[int] = set()
        for group in self.groups:
            for index, _ in group:
                if index in seen:
                    raise ValueError(f"index {index} appears in two flip groups")
                seen.add(index)

    def state_after(self, flips: int) -> tuple[int, ...]:
        """Solution vector after applying the first ``flips`` groups."""
        state = list(self.initial)
        for group in self.groups[:flips]:
            for index, value in group:
                state[index] = value
        return tuple(state)


# --- exact integer core -------------------------------------------------------


def _denominator_lcm(values: Sequence[Fraction]) -> int:
    return reduce(lcm, (v.denominator for v in values), 1)


def _scale_ints(values: Sequence[Fraction], factor: int) -> list[int]:
    if factor == 1:
        return [v.numerator for v in values]
    return [int(v * factor) for v in values]


def _scaled_form(form: RankOneForm):
    """Integer copy (A, B, C, D, C0) with scales (u, v, s).

    A = u*a, B = v*b, C = s*c, D = s*d, C0 = s*c0 with s = u*v, so the
    scaled objective is exactly s times the original and the breakpoint
    axis is scaled by u.
    """
    u = _denominator_lcm(form.a)
    v0 = _denominator_lcm(form.b)
    linear_lcm = lcm(
        _denominator_lcm(form.c), _denominator_lcm(form.d), form.c0.denominator
    )
    v = v0 * (linear_lcm // gcd(linear_lcm, u * v0))
    s = u * v
    return (
        _scale_ints(form.a, u),
        _scale_ints(form.b, v),
        _scale_ints(form.c, s),
        _scale_ints(form.d, s),
        int(form.c0 * s),
        u,
        v,
        s,
    )


def _float_ratio(num: int, den: int) -> float:
    try:
        return num / den
    except OverflowError:
        return inf if num > 0 else -inf


def _sorted_ratio_groups(pairs: list[tuple[int, int, int]]) -> list[list[int]]:
    """Group indices by exactly equal ratio, in ascending ratio order.

    ``pairs`` holds (numerator, positive denominator, index).  Sorting uses
    float keys; any run of equal floats is re-sorted by exact
    cross-multiplication, so the final order and grouping are exact.
    Within a group, indices ascend.
    """
    keyed = [(_float_ratio(num, den), num, den, idx) for num, den, idx in pairs]
    keyed.sort(key=lambda t: t[0])
    total = len(keyed)
    start = 0
    ordered: list[tuple[float, int, int, int]] = []
    while start < total:
        stop = start + 1
        while stop < total and keyed[stop][0] == keyed[start][0]:
            stop += 1
        run = keyed[start:stop]
        if len(run) > 1:
            run = _exact_sort(run)
        ordered.extend(run)
        start = stop
    groups: list[list[int]] = []
    pos = 0
    while pos < total:
        _, num, den, idx = ordered[pos]
        group = [idx]
        pos += 1
        while pos < total:
            _, num2, den2, idx2 = ordered[pos]
            if num * den2 != num2 * den:
                break
            group.append(idx2)
            pos += 1
        group.sort()
        groups.append(group)
    return groups


def _exact_sort(run: list[tuple[float, int, int, int]]):
    def compare(t1, t2):
        diff = t1[1] * t2[2] - t2[1] * t1[2]
        if diff:
            return -1 if diff < 0 else 1
        return t1[3] - t2[3]

    return sorted(run, key=cmp_to_key(compare))


def _knapsack_track_ints(a: list[int], c: list[int]):
    """Concave envelope of max{C.x : A.x = t} in scaled integer units.

    Returns (breakpoints, groups, initial, values): breakpoints on the
    scaled axis, flip groups as (index, new value) pairs between
    consecutive breakpoints, the base solution at the smallest breakpoint,
    and the envelope value at each breakpoint.
    """
    m = len(a)
    initial = tuple(
        1 if (a[i] < 0 or (a[i] == 0 and c[i] > 0)) else 0 for i in range(m)
    )
    lam = sum(v for v in a if v < 0)
    value = sum(c[i] for i in range(m) if initial[i])
    # Descending ratio c_i/a_i == ascending -c_i/a_i, normalized positive-den.
    pairs = [
        ((-c[i] if a[i] > 0 else c[i]), abs(a[i]), i) for i in range(m) if a[i]
    ]
    breakpoints = [lam]
    values = [value]
    groups: list[tuple[tuple[int, int], ...]] = []
    for raw_group in _sorted_ratio_groups(pairs):
        step = 0
        gain = 0
        group = []
        for i in raw_group:
            if a[i] > 0:
                group.append((i, 1))
                step += a[i]
                gain += c[i]
            else:
                group.append((i, 0))
                step -= a[i]
                gain -= c[i]
        breakpoints.append(breakpoints[-1] + step)
        values.append(values[-1] + gain)
        groups.append(tuple(group))
    return breakpoints, groups, initial, values


def _linear_track_ints(b: list[int], d: list[int], lam_lo: int):
    """Convex envelope of max{D.y + t B.y} in scaled integer units.

    Returns (mu_pairs, groups, initial, intercepts, slopes): breakpoints
    as exact (numerator, positive denominator) pairs on the scaled axis,
    in strictly increasing order beyond lam_lo; the flip group firing at
    each; the base solution; and the running intercept/slope aggregates,
    one entry per state (len(groups) + 1).
    """
    n = len(b)
    initial = []
    for j in range(n):
        margin = d[j] + lam_lo * b[j]
        initial.append(1 if margin > 0 or (margin == 0 and b[j] >= 0) else 0)
    initial = tuple(initial)
    intercept = sum(d[j] for j in range(n) if initial[j])
    slope = sum(b[j] for j in range(n) if initial[j])
    pairs = []
    for j in range(n):
        if b[j]:
            num = -d[j] if b[j] > 0 else d[j]
            den = abs(b[j])
            if num > lam_lo * den:
                pairs.append((num, den, j))
    mu_pairs: list[tuple[int, int]] = []
    groups: list[tuple[tuple[int, int], ...]] = []
    intercepts = [intercept]
    slopes = [slope]
    for raw_group in _sorted_ratio_groups(pairs):
        group = []
        for j in raw_group:
            if initial[j]:
                group.append((j, 0))
                intercept -= d[j]
                slope -= b[j]
            else:
                group.append((j, 1))
                intercept += d[j]
                slope += b[j]
        j0 = raw_group[0]
        mu_pairs.append(((-d[j0] if b[j0] > 0 else d[j0]), abs(b[j0])))
        groups.append(tuple(group))
        intercepts.append(intercept)
        slopes.append(slope)
    return mu_pairs, groups, initial, intercepts, slopes


# --- public track construction --------------------------------------------------


def pkp_breakpoints(form: RankOneForm) -> BreakpointTrack:
    """Breakpoint track of max{c.x : a.x = t, x in [0,1]^m}.

    The base solution at t = lambda_min sets x_i = 1 for a_i < 0 and for
    a_i = 0 with c_i > 0.  Scanning the distinct ratios c_i/a_i in
    decreasing order, each tie group T advances the breakpoint by
    sum_{i in T} |a_i| and flips its members toward their upper (a_i > 0)
    or lower (a_i < 0) bound.  At most m+1 breakpoints; every breakpoint
    solution is binary and the track value is concave.
    """
    a, _, c, _, _, u, _, s = _scaled_form(form)
    breakpoints, groups, initial, values = _knapsack_track_ints(a, c)
    return BreakpointTrack(
        tuple(Fraction(t, u) for t in breakpoints),
        tuple(groups),
        initial,
        tuple(Fraction(h, s) for h in values),
    )


def ulp_breakpoints(form: RankOneForm) -> BreakpointTrack:
    """Breakpoint track of max{d.y + t b.y : y in [0,1]^n} for t >= lambda_min.

    The base solution at t = lambda_min sets y_j = 1 iff d_j + t b_j > 0,
    with ties d_j + t b_j = 0 resolved by the sign of b_j: a tied variable
    is value-neutral at lambda_min itself, so its state is chosen to be
    optimal just above, where the coefficient has b_j's sign.  (Tied
    variables never appear as breakpoints, since only ratios strictly
    above lambda_min qualify.)  Breakpoints are the distinct ratios
    -d_j/b_j (b_j != 0) strictly above lambda_min, in increasing order;
    crossing one toggles every member of its tie group, which is
    value-neutral at the tie point.  Running aggregates D = sum of active
    d_j and B = sum of active b_j give the envelope value D + t B on each
    segment; the slopes B strictly increase, so the track value is convex.
    """
    a, b, _, d, _, u, v, s = _scaled_form(form)
    lam_lo = sum(x for x in a if x < 0)
    mu_pairs, groups, initial, intercepts, slopes = _linear_track_ints(b, d, lam_lo)
    values = tuple(
        Fraction(intercepts[k + 1] * den + num * slopes[k + 1], den * s)
        for k, (num, den) in enumerate(mu_pairs)
    )
    return BreakpointTrack(
        tuple(Fraction(num, den * u) for num, den in mu_pairs),
        tuple(groups),
        initial,
        values,
        tuple(Fraction(i, s) for i in intercepts),
        tuple(Fraction(x, v) for x in slopes),
    )


def solve_rank_one(form: RankOneForm) -> Solution:
    """Optimal solution of the factored instance via a merged sweep.

    Both tracks are built, then their breakpoints are scanned in increasing
    order starting at lambda_min.  Convex-track flips at or below the
    current concave breakpoint t are applied first (the flips are
    value-neutral at their tie points, so coincident breakpoints commute);
    the candidate value at t is then the sum of both envelope values plus
    c0.  The best candidate over all concave breakpoints is optimal.
    """
    a, b, c, d, c0, _, _, s = _scaled_form(form)
    x_bps, x_groups, x_initial, x_values = _knapsack_track_ints(a, c)
    lam_lo = x_bps[0]
    mu_pairs, y_groups, y_initial, intercepts, slopes = _linear_track_ints(
        b, d, lam_lo
    )

    flips = 0
    total_flips = len(mu_pairs)
    best_value: int | None = None
    best_k = 0
    best_flips = 0
    for k, t in enumerate(x_bps):
        while flips < total_flips and mu_pairs[flips][0] <= t * mu_pairs[flips][1]:
            flips += 1
        value = x_values[k] + intercepts[flips] + t * slopes[flips] + c0
        if best_value is None or value > best_value:
            best_value = value
            best_k = k
            best_flips = flips
    assert best_value is not None

    x = list(x_initial)
    for group in x_groups[:best_k]:
        for index, bit in group:
            x[index] = bit
    y = list(y_initial)
    for group in y_groups[:best_flips]:
        for index, bit in group:
            y[index] = bit
    return Solution(tuple(x), tuple(y), Fraction(best_value, s))


def solve_rank_one_zero_linear(
    a0, a: Sequence, b0, b: Sequence, c: Sequence, d: Sequence
) -> Solution:
    """O(n) solver for maximize (a0 + a.x)(b0 + b.y) + c.x + d.y.

    Requires c = 0 or d = 0.  With d = 0 the objective for fixed y is
    linear in x, and as t = b0 + b.y ranges over its interval the best
    achievable value is convex in t, so the optimum occurs at y maximizing
    or minimizing b0 + b.y; both candidates are completed with the best x
    and compared.  The c = 0 case is symmetric.
    """
    a = freeze_vector(a)
    b = freeze_vector(b)
    c = freeze_vector(c)
    d = freeze_vector(d)
    a0 = as_fraction(a0)
    b0 = as_fraction(b0)
    if len(a) != len(c) or len(b) != len(d):
        raise ValueError("vector lengths are inconsistent")

    def value_of(x, y) -> Fraction:
        ax = a0 + sum((v for v, s in zip(a, x) if s), Fraction(0))
        by = b0 + sum((v for v, s in zip(b, y) if s), Fraction(0))
        cx = sum((v for v, s in zip(c, x) if s), Fraction(0))
        dy = sum((v for v, s in zip(d, y) if s), Fraction(0))
        return ax * by + cx + dy

    if all(v == 0 for v in d):
        candidates = []
        for y in (
            tuple(1 if v > 0 else 0 for v in b),  # maximizes b0 + b.y
            tuple(1 if v < 0 else 0 for v in b),  # minimizes b0 + b.y
        ):
            t = b0 + sum((v for v, s in zip(b, y) if s), Fraction(0))
            x = tuple(1 if a[i] * t + c[i] > 0 else 0 for i in range(len(a)))
            candidates.append(Solution(x, y, value_of(x, y)))
    elif all(v == 0 for v in c):
        candidates = []
        for x in (
            tuple(1 if v > 0 else 0 for v in a),
            tuple(1 if v < 0 else 0 for v in a),
        ):
            t = a0 + sum((v for v, s in zip(a, x) if s), Fraction(0))
            y = tuple(1 if b[j] * t + d[j] > 0 else 0 for j in range(len(b)))
            candidates.append(Solution(x, y, value_of(x, y)))
    else:
        raise ValueError(
            "requires c = 0 or d = 0; use solve_rank_one for the general case"
        )
    return max(candidates, key=lambda s: s.value)
