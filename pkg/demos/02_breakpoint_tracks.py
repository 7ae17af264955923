"""Walk through the rank-one breakpoint sweep on the showcase instance.

The solver splits the objective along t = a.x into a concave knapsack
envelope (over x) and a convex linear envelope (over y), both
piecewise-linear with closed-form breakpoints.  This script prints both
tracks, the candidate values at every concave breakpoint, and the winner;
if matplotlib is installed it also saves a plot of the two envelopes.
"""

from fractions import Fraction

from bqp01 import RankOneForm, pkp_breakpoints, solve_rank_one, ulp_breakpoints
from bqp01.fixtures import sample_rank_one

form = RankOneForm.from_instance(sample_rank_one())
print("a =", [str(v) for v in form.a])
print("b =", [str(v) for v in form.b])
print("c =", [str(v) for v in form.c])
print("d =", [str(v) for v in form.d])
print(f"t = a.x ranges over [{form.lambda_min}, {form.lambda_max}]")

concave = pkp_breakpoints(form)
print("\nconcave x-side envelope (value of max c.x st a.x = t):")
for k, (t, h) in enumerate(zip(concave.breakpoints, concave.values)):
    x = concave.state_after(k)
    print(f"  t = {str(t):>4}  h = {str(h):>5}  x = {''.join(map(str, x))}")

convex = ulp_breakpoints(form)
print("\nconvex y-side envelope (value of max d.y + t b.y):")
print(f"  start: intercept {convex.intercepts[0]}, slope {convex.slopes[0]}")
for k, (t, h) in enumerate(zip(convex.breakpoints, convex.values)):
    y = convex.state_after(k + 1)
    print(
        f"  t = {str(t):>4}  h = {str(h):>6}  y = {''.join(map(str, y))}"
        f"  (intercept {convex.intercepts[k + 1]}, slope {convex.slopes[k + 1]})"
    )

print("\ncandidates (objective = concave + convex at each concave breakpoint):")
flips = 0
for k, t in enumerate(concave.breakpoints):
    while flips < len(convex.breakpoints) and convex.breakpoints[flips] <= t:
        flips += 1
    total = concave.values[k] + convex.intercepts[flips] + t * convex.slopes[flips]
    print(f"  t = {str(t):>4}  candidate value = {total}")

solution = solve_rank_one(form)
print(f"\noptimum {solution.value} at x={solution.x} y={solution.y}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the plot")
else:
    def envelope(track, t):
        # Piecewise-linear interpolation between breakpoint values.
        points = list(zip(track.breakpoints, track.values))
        for (t1, h1), (t2, h2) in zip(points, points[1:]):
            if t1 <= t <= t2:
                return h1 + (h2 - h1) * (t - t1) / (t2 - t1)
        return points[-1][1]

    grid = [form.lambda_min + Fraction(k, 8) for k in range(0, 8 * 13 + 1)]
    xs = [float(t) for t in grid]
    plt.figure(figsize=(8, 5))
    plt.plot(xs, [float(envelope(concave, t)) for t in grid], label="x-side (concave)")
    ys = []
    for t in grid:
        k = 0
        while k < len(convex.breakpoints) and convex.breakpoints[k] <= t:
            k += 1
        ys.append(float(convex.intercepts[k] + t * convex.slopes[k]))
    plt.plot(xs, ys, "--", label="y-side (convex)")
    plt.scatter(
        [float(t) for t in concave.breakpoints],
        [float(v) for v in concave.values],
        marker="o",
        zorder=3,
    )
    plt.scatter(
        [float(t) for t in convex.breakpoints],
        [float(v) for v in convex.values],
        marker="s",
        zorder=3,
    )
    plt.xlabel("t = a.x")
    plt.ylabel("envelope value")
    plt.legend()
    plt.tight_layout()
    plt.savefig("breakpoint_tracks.png", dpi=120)
    print("wrote breakpoint_tracks.png")
