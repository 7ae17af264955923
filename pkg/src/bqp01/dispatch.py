"""Structure analysis, automatic solver selection, and cross-validation.

``dispatch_solve`` routes an instance to the cheapest applicable exact
solver: min-cut for nonnegative matrices, the cardinality scan for
additive ones, the breakpoint sweep or basis enumeration for low rank,
x-side enumeration for few rows, and eliminator fixing for few negative
entries.  Every route is exact, so priority is purely a performance
choice.  ``bench`` runs several solvers on the same instances and fails
hard if any two disagree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import additive as additive_mod
from . import enumeration, fixed_rank, mincut, rank_one
from .analysis import (
    AdditiveDecomposition,
    Eliminator,
    detect_additive,
    detect_nonnegative,
    min_negative_eliminator,
    rank_factorize,
)
from .errors import CrossValidationError, SolverRefusal
from .model import CutInstance, Instance, Solution, normalize_orientation
from .transforms import cut_to_bqp01

ALGORITHMS = (
    "auto",
    "oracle",
    "enum",
    "rank1",
    "rankp",
    "additive",
    "mincut",
    "eliminator",
)


@dataclass(frozen=True)
class AnalysisReport:
    """Detected structure of a cost matrix."""

    m: int
    n: int
    rank: int
    additive: AdditiveDecomposition | None
    nonnegative: bool
    eliminator: Eliminator

    def lines(self) -> list[tuple[str, str]]:
        pairs = [
            ("m", str(self.m)),
            ("n", str(self.n)),
            ("rank", str(self.rank)),
            ("additive", "yes" if self.additive else "no"),
            ("nonnegative", "yes" if self.nonnegative else "no"),
            ("eliminator-size", str(self.eliminator.size)),
            ("eliminator-rows", " ".join(map(str, self.eliminator.rows)) or "-"),
            ("eliminator-cols", " ".join(map(str, self.eliminator.cols)) or "-"),
        ]
        return pairs


@dataclass(frozen=True)
class SolveReport:
    """A solution plus how it was obtained."""

    solution: Solution
    algorithm: str
    detected: str
    wall_time: float
    analysis: AnalysisReport | None = None


def analyze(inst: Instance | CutInstance) -> AnalysisReport:
    """Run all structure detectors on the instance's cost matrix."""
    return AnalysisReport(
        m=inst.m,
        n=inst.n,
        rank=rank_factorize(inst.q).p,
        additive=detect_additive(inst.q),
        nonnegative=detect_nonnegative(inst.q),
        eliminator=min_negative_eliminator(inst.q),
    )


def dispatch_solve(
    inst: Instance | CutInstance,
    algorithm: str = "auto",
    *,
    p_limit: int = fixed_rank.DEFAULT_P_LIMIT,
    enum_limit: int = enumeration.DEFAULT_ENUM_LIMIT,
    eliminator_limit: int = mincut.DEFAULT_ELIMINATOR_LIMIT,
    dual_filter: bool = True,
) -> SolveReport:
    """Solve with the named algorithm, or pick one automatically.

    Cut-form instances are converted to 0-1 form, solved, and mapped back
    to signs at the same objective value.  The instance is oriented so the
    enumerated/parameterized side is the shorter one; solutions are
    reported in the original orientation.  ``auto`` tries, in order:
    nonnegative -> mincut, additive -> additive, rank <= 1 -> rank1,
    rank <= p_limit -> rankp, m <= enum_limit -> enum, eliminator within
    limit -> eliminator; if nothing applies a SolverRefusal carrying the
    full analysis report is raised.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")

    is_cut = isinstance(inst, CutInstance)
    work: Instance = cut_to_bqp01(inst) if is_cut else inst
    work, transposed = normalize_orientation(work)

    start = time.perf_counter()
    if algorithm == "auto":
        chosen, detected, solution = _auto_solve(
            work, p_limit, enum_limit, eliminator_limit
        )
    else:
        chosen = algorithm
        detected, solution = _run_named(
            work, algorithm, p_limit, enum_limit, eliminator_limit, dual_filter
        )
    elapsed = time.perf_counter() - start

    x, y = solution.x, solution.y
    if transposed:
        x, y = y, x
    if is_cut:
        x = tuple(2 * v - 1 for v in x)
        y = tuple(2 * v - 1 for v in y)
    return SolveReport(
        solution=Solution(x, y, solution.value),
        algorithm=chosen,
        detected=detected,
        wall_time=elapsed,
    )


def _auto_solve(
    work: Instance, p_limit: int, enum_limit: int, eliminator_limit: int
) -> tuple[str, str, Solution]:
    if detect_nonnegative(work.q):
        return "mincut", "nonnegative matrix", mincut.solve_nonnegative(work)
    dec = detect_additive(work.q)
    if dec is not None:
        return "additive", "additive matrix", additive_mod.solve_additive(work, dec)
    rank = rank_factorize(work.q).p
    if rank <= 1:
        form = rank_one.RankOneForm.from_instance(work)
        return "rank1", "rank-one matrix", rank_one.solve_rank_one(form)
    if rank <= p_limit:
        return (
            "rankp",
            f"rank-{rank} matrix",
            fixed_rank.solve_fixed_rank(work, p_limit),
        )
    if work.m <= enum_limit:
        return (
            "enum",
            f"{work.m} rows",
            enumeration.solve_enumeration(work, enum_limit),
        )
    elim = min_negative_eliminator(work.q)
    if elim.size <= eliminator_limit:
        return (
            "eliminator",
            f"negative eliminator of size {elim.size}",
            mincut.solve_with_eliminator(work, elim, eliminator_limit),
        )
    report = analyze(work)
    raise SolverRefusal(
        f"no solver applicable within limits: rank {report.rank} > {p_limit}, "
        f"m {work.m} > {enum_limit}, eliminator {report.eliminator.size} > "
        f"{eliminator_limit}, matrix not nonnegative or additive",
        report=report,
    )


def _run_named(
    work: Instance,
    algorithm: str,
    p_limit: int,
    enum_limit: int,
    eliminator_limit: int,
    dual_filter: bool,
) -> tuple[str, Solution]:
    if algorithm == "oracle":
        return "exhaustive scan", enumeration.solve_oracle(work)
    if algorithm == "enum":
        return f"{work.m} rows", enumeration.solve_enumeration(work, enum_limit)
    if algorithm == "rank1":
        form = rank_one.RankOneForm.from_instance(work)
        return "rank-one matrix", rank_one.solve_rank_one(form)
    if algorithm == "rankp":
        rank = rank_factorize(work.q).p
        return (
            f"rank-{rank} matrix",
            fixed_rank.solve_fixed_rank(work, p_limit, dual_filter=dual_filter),
        )
    if algorithm == "additive":
        dec = detect_additive(work.q)
        if dec is None:
            raise ValueError("matrix is not additively decomposable")
        return "additive matrix", additive_mod.solve_additive(work, dec)
    if algorithm == "mincut":
        return "nonnegative matrix", mincut.solve_nonnegative(work)
    if algorithm == "eliminator":
        elim = min_negative_eliminator(work.q)
        return (
            f"negative eliminator of size {elim.size}",
            mincut.solve_with_eliminator(work, elim, eliminator_limit),
        )
    raise AssertionError(algorithm)


@dataclass(frozen=True)
class BenchRow:
    instance: str
    algorithm: str
    value: Fraction
    wall_time: float


def bench(
    instances: list[tuple[str, Instance | CutInstance]],
    algorithms: list[str],
    **limits,
) -> list[BenchRow]:
    """Run each algorithm on each instance; fail if optima disagree.

    This is the cross-validation harness: a disagreement between two exact
    solvers is a bug, reported as CrossValidationError.
    """
    rows: list[BenchRow] = []
    for name, inst in instances:
        values: dict[str, Fraction] = {}
        for algorithm in algorithms:
            report = dispatch_solve(inst, algorithm, **limits)
            rows.append(
                BenchRow(name, algorithm, report.solution.value, report.wall_time)
            )
            values[algorithm] = report.solution.value
        distinct = set(values.values())
        if len(distinct) > 1:
            detail = ", ".join(f"{alg}={val}" for alg, val in sorted(values.items()))
            raise CrossValidationError(
                f"solvers disagree on {name}: {detail}"
            )
    return rows
