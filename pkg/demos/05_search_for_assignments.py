"""
Searching for GHZ weight assignments on a bare skeleton
=======================================================

Fix a skeleton and a target dimension d.  Each edge gets d*d free complex
weights (one per colour pair) and the residual measures how far the induced
colouring table is from the GHZ pattern: monos 1, the rest 0.  Gradient
descent with restarts drives it to zero; exactify then tries to snap the
numeric weights onto Gaussian rationals and re-verify exactly.
"""

from ghzgraphs import complete_ghz_k4, parallel_ghz_k2, skeleton
from ghzgraphs.search import SearchProblem, assignment_graph, exactify, search

problem = SearchProblem(skeleton(complete_ghz_k4()), 3)
print("variables:", problem.n_vars, "| colourings tracked:", len(problem.colourings))

result = search(problem, seed=0, restarts=20, max_iters=2000)
print(f"residual {result.residual.value:.2e} after restart {result.restart},",
      f"{result.iterations} iterations")

certified = exactify(problem, result.weights)
print("certification mode:", certified.mode, "| epsilon:", certified.epsilon)
print("dimension:", certified.verdict.dimension)

g = assignment_graph(problem, result.weights)
big = [e for e in g.edges if abs(e.weight) > 1e-6]
print(f"\n{len(big)} of {len(g.edges)} candidate edges carry weight:")
for e in sorted(big, key=lambda e: (e.u, e.v, e.cu, e.cv)):
    w = e.weight
    print(f"  {e.u}-{e.v}  ({e.cu},{e.cv})  {w.real:+.3f}{w.imag:+.3f}i")

# The solution manifold has gauge freedom (per-colour phases), so descent
# rarely lands on the rational point even when one exists; the verdict above
# is numeric, certified at the printed epsilon.  Push the tolerance far
# enough and the snap-to-rationals step does go through:
tight = SearchProblem(parallel_ghz_k2(5), 5)
res = search(tight, seed=0, restarts=5, max_iters=20000, tol=1e-24)
cert = exactify(tight, res.weights)
print(f"\nK2 skeleton, d=5, tol=1e-24: residual {res.residual.value:.1e},"
      f" mode {cert.mode}, dimension {cert.verdict.dimension}")
print("exact weights:", sorted(str(e.weight) for e in cert.graph.edges if e.weight != 0))
