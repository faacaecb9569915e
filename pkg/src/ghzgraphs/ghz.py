"""GHZ verification, dimension, weight scaling and the non-mono witness.

A graph is GHZ when every feasible monochromatic colouring has weight
exactly 1 and every non-monochromatic colouring has weight 0; it is g-GHZ
when the monochromatic weights merely have to be non-zero.  A feasible
monochromatic colouring whose matchings cancel to weight exactly 0 breaks
the strict property (0 != 1) but is tolerated by g-GHZ and never counts
toward the dimension; such entries are reported with kind "mono_zero" so
both readings stay visible.

Exact graphs are checked with exact comparisons; float graphs (from
scale_to_ghz or the search) within a tolerance epsilon.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import BogdanovHypothesisError, InvariantViolation, NotGhzError, UnscalableColourError
from .graphs import Colour, Edge, Multigraph, VertexColouring, mono_colouring
from .matchings import (
    PerfectMatching,
    colouring_weight_table,
    enumerate_perfect_matchings,
    induced_colouring,
    matching_weight,
)

DEFAULT_EPSILON = 1e-9

#: violation kinds, in the order they are reported
NON_MONO_NONZERO = "non_mono_nonzero"  # breaks GHZ and g-GHZ
MONO_NOT_ONE = "mono_not_one"          # breaks GHZ only
MONO_ZERO = "mono_zero"                # breaks GHZ only, tolerated by g-GHZ


@dataclass(frozen=True)
class Violation:
    colouring: VertexColouring
    weight: object
    kind: str


@dataclass(frozen=True)
class GhzVerdict:
    is_ghz: bool
    is_g_ghz: bool
    dimension: int
    violations: tuple[Violation, ...]


def _is_mono(vc: VertexColouring) -> bool:
    return len(set(vc)) <= 1


def verify(g: Multigraph, epsilon: float = DEFAULT_EPSILON) -> GhzVerdict:
    """Classify every feasible colouring and every mono colouring of g.

    ``epsilon`` only matters for float-weighted graphs; exact graphs are
    compared exactly.  The dimension field counts monochromatic colourings
    with non-zero weight regardless of the verdict flags.
    """
    table = colouring_weight_table(g)
    exact = g.is_exact

    def near(w, target) -> bool:
        if exact:
            return w == target
        return abs(w - target) <= epsilon

    violations: list[Violation] = []
    dimension = 0
    for vc, w in table.items():
        if _is_mono(vc):
            continue
        if not near(w, g.zero):
            violations.append(Violation(vc, w, NON_MONO_NONZERO))
    for colour in sorted(g.colour_universe):
        vc = mono_colouring(g.n, colour)
        if vc not in table:
            continue  # infeasible mono colouring: no constraint
        w = table[vc]
        if near(w, g.zero):
            violations.append(Violation(vc, w, MONO_ZERO))
            continue
        dimension += 1
        if not near(w, g.one):
            violations.append(Violation(vc, w, MONO_NOT_ONE))
    is_g_ghz = not any(v.kind == NON_MONO_NONZERO for v in violations)
    return GhzVerdict(
        is_ghz=not violations,
        is_g_ghz=is_g_ghz,
        dimension=dimension,
        violations=tuple(violations),
    )


def dimension(g: Multigraph, epsilon: float = DEFAULT_EPSILON) -> int:
    """Number of non-zero monochromatic colourings; defined for g-GHZ graphs."""
    verdict = verify(g, epsilon)
    if not verdict.is_g_ghz:
        raise NotGhzError("not a (g-)GHZ graph: a non-monochromatic colouring has non-zero weight")
    return verdict.dimension


def mono_weights(g: Multigraph) -> dict[Colour, object]:
    """Weight of the all-i colouring for every colour i in the universe."""
    table = colouring_weight_table(g)
    return {
        colour: table.get(mono_colouring(g.n, colour), g.zero)
        for colour in sorted(g.colour_universe)
    }


def scale_to_ghz(g: Multigraph, epsilon: float = DEFAULT_EPSILON) -> Multigraph:
    """Rescale a g-GHZ graph's weights so it becomes GHZ, in complex floats.

    Every edge weight is multiplied by s_cu * s_cv with
    s_i = exp(-Log W(i) / n), W(i) the weight of the all-i colouring; the
    weight of each colouring then picks up the factor prod_v s_vc(v), which
    sends every non-zero mono weight to 1 and leaves zeros zero.  Colours
    whose mono weight is 0 get s_i = 1, unless an edge carrying that colour
    sits in a perfect matching of non-zero weight -- then no finite scale
    exists and the colour is reported as unscalable.
    """
    if not g.is_exact:
        raise ValueError("scaling expects an exact-weighted graph")
    verdict = verify(g)
    if not verdict.is_g_ghz:
        raise NotGhzError("not a g-GHZ graph; scaling is undefined")
    if g.n == 0:
        return Multigraph(0, (), g.colour_universe)

    weights = mono_weights(g)
    dead = {c for c, w in weights.items() if w == g.zero}
    if dead:
        live_colours: set[Colour] = set()
        for m in enumerate_perfect_matchings(g):
            if matching_weight(g, m) != g.zero:
                for i in m:
                    e = g.edges[i]
                    live_colours.add(e.cu)
                    live_colours.add(e.cv)
        bad = sorted(dead & live_colours)
        if bad:
            raise UnscalableColourError(
                f"unscalable colour {bad[0]}: zero monochromatic weight but "
                f"present in a non-zero-weight perfect matching"
            )

    scale = {}
    for colour, w in weights.items():
        if w == g.zero:
            scale[colour] = 1.0 + 0.0j
        else:
            scale[colour] = cmath.exp(-cmath.log(complex(w)) / g.n)

    edges = tuple(
        Edge(e.u, e.v, e.cu, e.cv, complex(e.weight) * scale[e.cu] * scale[e.cv])
        for e in g.edges
    )
    scaled = Multigraph(g.n, edges, g.colour_universe)
    check = verify(scaled, epsilon)
    if not check.is_ghz:
        raise InvariantViolation(
            f"scaled graph failed the GHZ check at epsilon={epsilon}: {check.violations[:3]}"
        )
    if check.dimension != verdict.dimension:
        raise InvariantViolation("scaling changed the dimension")
    return scaled


def find_bogdanov_witness(g: Multigraph) -> PerfectMatching:
    """A non-monochromatic perfect matching, given the theorem's hypotheses.

    Requires more than four vertices and at least three monochromatic
    perfect matchings of pairwise distinct colours; a non-monochromatic
    perfect matching then necessarily exists.  Weights play no role here.
    """
    if g.n <= 4:
        raise BogdanovHypothesisError("hypothesis needs more than four vertices")
    matchings = enumerate_perfect_matchings(g)
    mono_colours = set()
    witness: PerfectMatching | None = None
    for m in matchings:
        vc = induced_colouring(g, m)
        if _is_mono(vc):
            if vc:
                mono_colours.add(vc[0])
        elif witness is None:
            witness = m
    if len(mono_colours) < 3:
        raise BogdanovHypothesisError(
            f"hypothesis needs monochromatic perfect matchings of three distinct "
            f"colours, found {len(mono_colours)}"
        )
    if witness is None:
        raise InvariantViolation("no non-monochromatic perfect matching found")
    return witness
