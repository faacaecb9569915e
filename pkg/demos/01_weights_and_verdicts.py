"""
Colouring weights and the GHZ verdict
=====================================

A perfect matching picks one half-edge per vertex, so it stamps a colour on
every vertex.  Summing matching weights per stamped colouring gives the
colouring-weight table; a graph is GHZ when the monochromatic rows are all 1
and everything else is 0.
"""

from ghzgraphs import colouring_weight_table, complete_ghz_k4, cycle_ghz, verify

# the complete graph on four vertices, one colour per perfect matching
g = complete_ghz_k4()
print("K4 table:")
for vc, w in colouring_weight_table(g).items():
    print("  ", vc, "->", w)

verdict = verify(g)
print("is_ghz:", verdict.is_ghz, " dimension:", verdict.dimension)

# a six-cycle with alternating colours does the same with dimension 2
c6 = cycle_ghz(6)
print("\nC6 table:")
for vc, w in colouring_weight_table(c6).items():
    print("  ", vc, "->", w)
print("dimension:", verify(c6).dimension)

# weights are exact Gaussian rationals, so "equals 1" means equals 1
w = next(iter(colouring_weight_table(g).values()))
print("\nweight type:", type(w).__name__)
