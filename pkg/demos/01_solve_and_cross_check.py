"""Solve a few structured instances and cross-check every applicable solver.

Each solver in the package is exact, so any two that accept the same
instance must return the same optimal value; this script demonstrates that
on one instance per structural class.
"""

from bqp01 import dispatch_solve, generate_instance
from bqp01.fixtures import (
    sample_additive,
    sample_general,
    sample_nonnegative,
    sample_rank_one,
)

CASES = [
    ("rank-one showcase", sample_rank_one(), ["oracle", "enum", "rank1", "rankp"]),
    ("nonnegative matrix", sample_nonnegative(), ["oracle", "mincut", "eliminator"]),
    ("additive matrix", sample_additive(), ["oracle", "additive", "rankp"]),
    ("tiny general", sample_general(), ["oracle", "enum", "eliminator"]),
    ("random 4x5 rank-2", generate_instance("rank2", 4, 5, 42), ["oracle", "rankp", "enum"]),
]

for label, inst, algorithms in CASES:
    print(f"\n=== {label} ({inst.m} x {inst.n}) ===")
    values = set()
    for algorithm in algorithms:
        report = dispatch_solve(inst, algorithm)
        values.add(report.solution.value)
        print(
            f"  {algorithm:<11} value={str(report.solution.value):>6}"
            f"  x={''.join(map(str, report.solution.x))}"
            f"  y={''.join(map(str, report.solution.y))}"
            f"  ({report.wall_time * 1000:.2f} ms)"
        )
    assert len(values) == 1, f"solvers disagree: {values}"
    auto = dispatch_solve(inst)
    print(f"  auto chooses {auto.algorithm} ({auto.detected})")

print("\nAll solvers agree on every instance.")
