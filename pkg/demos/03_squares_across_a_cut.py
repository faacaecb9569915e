"""
Squares across a 2-vertex cut
=============================

Remove two vertices u, v and the rest of a low-connectivity graph falls
apart into sides A and B.  Every colouring weight then factors into four
block weights arranged in a square — a vertical pair (u and v matched
across the cut) and a horizontal pair (each matched into its own side).
For a GHZ graph the two pairs cancel exactly on non-mono colourings.
"""

import itertools

from ghzgraphs import cancelling_square, cycle_ghz, find_cut
from ghzgraphs.structure import square_decomposition_odd

g = cycle_ghz(6)
cut = find_cut(g, 2)
print("cut:", cut.s, "sides:", cut.v1, cut.v2, f"({cut.parity})")

u, v = cut.s
print("\n(i, j, k, l)   vertical  horizontal     total")
for cols in itertools.product((0, 1), repeat=4):
    sq = square_decomposition_odd(g, u, v, cut.v1, cut.v2, cols)
    tag = "mono" if len(set(cols)) == 1 else ("solid" if sq.is_solid else "")
    print(f"{cols}   {str(sq.vertical):>8}  {str(sq.horizontal):>10}  {str(sq.total):>8}  {tag}")

# Every non-mono row sums to zero here because one factor of each pair
# vanishes ("fragile" squares).  The cancellation can also be head-on: in
# the four-cycle below both halves are non-zero and kill each other on the
# *mono* colouring, which is exactly why that graph fails strict GHZ.
sq = square_decomposition_odd(cancelling_square(), 0, 3, (1,), (2,), (0, 0, 0, 0))
print("\ncancelling square, mono colouring:")
print("  vertical", sq.vertical, "+ horizontal", sq.horizontal, "=", sq.total,
      "(solid)" if sq.is_solid else "")
