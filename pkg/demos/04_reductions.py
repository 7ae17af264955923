"""Tour of the exact problem reductions.

Every rewrite preserves objective values through a stated affine identity,
demonstrated here by brute-force checks on small examples: the {-1,+1} cut
form, homogenization, the square-QP embedding in both directions, bipartite
max-cut, maximum-weight bicliques, and rank-one binary matrix fitting.
"""

from itertools import product

from bqp01 import (
    BipartiteWeightedGraph,
    CutInstance,
    Instance,
    bqp01_to_cut,
    bqp11h_to_bmaxcut,
    cut_to_bqp01,
    evaluate_cut_objective,
    evaluate_objective,
    mwbp_to_bqp01,
    qp01_to_bqp01,
    rank1_binary_approx_to_bqp01,
    solve_oracle,
    to_homogeneous,
)
from bqp01.fixtures import sample_general

inst = sample_general()
print("base instance optimum:", solve_oracle(inst).value)

# 1. Cut form: same objective over signs, exact round trip.
cut = bqp01_to_cut(inst)
assert cut_to_bqp01(cut) == inst
x, y = (0, 1), (1, 1)
signs = tuple(2 * v - 1 for v in x), tuple(2 * v - 1 for v in y)
print("cut form at mapped point:", evaluate_cut_objective(cut, *signs),
      "== f(x, y):", evaluate_objective(inst, x, y))

# 2. Homogenization: border Q with c and d, optimum shifts by exactly M.
hom, m_val = to_homogeneous(inst)
print(f"homogenized optimum {solve_oracle(hom).value} = original + M "
      f"({solve_oracle(inst).value} + {m_val})")

# 3. Square QP embedding: mismatched x != y costs M per index, so optima
#    sit on the diagonal.
square, penalty = qp01_to_bqp01([[0, 3], [3, 0]], [-1, -1], 0)
sol = solve_oracle(square)
print(f"square-QP embedding: optimum {sol.value} at x={sol.x} y={sol.y} "
      f"(penalty M={penalty})")

# 4. Bipartite max-cut: cut weight and bilinear value differ by a constant.
hom_cut = CutInstance([[1, -2], [3, 0]])
graph = bqp11h_to_bmaxcut(hom_cut)
print("max-cut graph edges:", [(i, j, str(w)) for i, j, w in graph.edges])

# 5. Maximum-weight biclique via big-M on non-edges.
biclique_graph = BipartiteWeightedGraph(2, 3, ((0, 0, 4), (0, 1, 2), (1, 1, 3)))
reduced = mwbp_to_bqp01(biclique_graph)
sol = solve_oracle(reduced)
print(f"best biclique weight {sol.value}: rows {sol.x}, cols {sol.y}")

# 6. Rank-one binary fit: error(u, v) = sum(H) + u^T (1 - 2H) v, so the
#    minimizer of the returned bilinear form is the best approximation.
h = [[1, 1, 0], [1, 1, 1], [0, 1, 1]]
fit = rank1_binary_approx_to_bqp01(h)
total = sum(v for row in h for v in row)
best = None
for u in product((0, 1), repeat=3):
    for v in product((0, 1), repeat=3):
        bilinear = sum(fit.q[i][j] * u[i] * v[j] for i in range(3) for j in range(3))
        error = total + bilinear
        if best is None or error < best[0]:
            best = (error, u, v)
print(f"best rank-one fit of H leaves squared error {best[0]} "
      f"with u={best[1]}, v={best[2]}")
