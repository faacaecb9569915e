"""Shrinking a graph across a 3-cut without touching its verdict.

reduce() looks for a 3-vertex cut with an odd side, then either contracts
the odd side (easy case) or eliminates the even side by resynthesizing the
edges inside the cut (hard case).  The report carries the reduced graph, a
rescaled strict-GHZ copy, and the verdicts on both ends.
"""

import json

from ghzgraphs import cycle_ghz, reduce, serialize_graph

report = reduce(cycle_ghz(6))

print("case:", report.case)
print("kappa:", report.kappa, "-> matching-index bound:", report.mu_bound)
print("cut:", report.cut.s, "| odd side:", report.cut.v1, "| even side:", report.cut.v2)
print("vertex map:", report.vertex_map)

print("\nreduced graph (4 vertices):")
for e in report.graph.edges:
    print(f"  {e.u}-{e.v}  colours ({e.cu},{e.cv})  weight {e.weight}")

print("\ninput dimension: ", report.input_verdict.dimension)
print("output dimension:", report.output_verdict.dimension)

# the reduced graph is an ordinary document like any other
doc = json.loads(serialize_graph(report.graph))
print("\nserialized:", json.dumps(doc)[:70], "...")
