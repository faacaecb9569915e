"""Recovering unit weights by per-colour rescaling.

Multiply every edge of a GHZ graph by s_cu * s_cv for some non-zero number
s_i per colour and the mono weights drift away from 1 while the zero rows
stay zero: the graph is still g-GHZ.  scale_to_ghz inverts that drift from
the mono weights alone.
"""

from fractions import Fraction

from ghzgraphs import (
    GaussianRational,
    build_graph,
    cycle_ghz,
    mono_weights,
    scale_to_ghz,
    verify,
)

base = cycle_ghz(6)
s = {0: GaussianRational(Fraction(3, 2)), 1: GaussianRational(0, 2)}  # 3/2 and 2i

skewed = build_graph(
    base.n,
    [(e.u, e.v, e.cu, e.cv, e.weight * s[e.cu] * s[e.cv]) for e in base.edges],
    colours=base.colour_universe,
)

print("mono weights after skewing:", mono_weights(skewed))
print("still g-GHZ:", verify(skewed).is_g_ghz, "| strict:", verify(skewed).is_ghz)

recovered = scale_to_ghz(skewed)
print("\nmono weights after rescaling:")
for colour, w in mono_weights(recovered).items():
    print(f"  colour {colour}: {w}")
print("strict GHZ again:", verify(recovered).is_ghz)
print("dimension preserved:", verify(recovered).dimension == verify(skewed).dimension)
