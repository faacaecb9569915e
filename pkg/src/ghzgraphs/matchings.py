"""Perfect-matching enumeration and the weight/colouring bookkeeping on top.

A perfect matching is stored as a sorted tuple of edge indices into the
graph's edge list.  Everything downstream -- graph weight, vertex-colouring
weights, the induced-colouring partition -- is a finite sum of matching
weights, evaluated exactly for GaussianRational graphs and in complex floats
for scaled ones.
"""

from __future__ import annotations

from .graphs import Multigraph, VertexColouring

PerfectMatching = tuple[int, ...]


def enumerate_perfect_matchings(g: Multigraph) -> list[PerfectMatching]:
    """All perfect matchings, in deterministic search order.

    The search always branches on the lowest-index uncovered vertex, trying
    its incident edges in storage order.  Each returned matching is the
    sorted tuple of its edge indices.
    """
    if g.n % 2:
        return []
    if g.n == 0:
        return [()]
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, e in enumerate(g.edges):
        incident[e.u].append(i)
        incident[e.v].append(i)
    if any(not lst for lst in incident):
        return []

    full = (1 << g.n) - 1
    edges = g.edges
    out: list[PerfectMatching] = []
    chosen: list[int] = []

    def extend(covered: int) -> None:
        if covered == full:
            out.append(tuple(sorted(chosen)))
            return
        v = (~covered & (covered + 1)).bit_length() - 1  # lowest uncovered vertex
        for i in incident[v]:
            e = edges[i]
            other = e.v if e.u == v else e.u
            if covered >> other & 1:
                continue
            chosen.append(i)
            extend(covered | 1 << v | 1 << other)
            chosen.pop()

    extend(0)
    return out


def _check_matching(g: Multigraph, m: PerfectMatching) -> None:
    covered = 0
    for i in m:
        if not 0 <= i < len(g.edges):
            raise ValueError(f"edge index {i} out of range")
        e = g.edges[i]
        mask = 1 << e.u | 1 << e.v
        if covered & mask:
            raise ValueError(f"matching covers a vertex of edge {e.u}-{e.v} twice")
        covered |= mask
    if covered != (1 << g.n) - 1:
        raise ValueError("matching does not cover every vertex")


def matching_weight(g: Multigraph, m: PerfectMatching):
    """Product of the matching's edge weights (1 for the empty matching)."""
    _check_matching(g, m)
    w = g.one
    for i in m:
        w = w * g.edges[i].weight
    return w


def induced_colouring(g: Multigraph, m: PerfectMatching) -> VertexColouring:
    """The vertex colouring a perfect matching stamps onto the graph."""
    _check_matching(g, m)
    colours = [0] * g.n
    for i in m:
        e = g.edges[i]
        colours[e.u] = e.cu
        colours[e.v] = e.cv
    return tuple(colours)


def _check_colouring(g: Multigraph, vc: VertexColouring) -> None:
    if len(vc) != g.n:
        raise ValueError(f"colouring has {len(vc)} entries for {g.n} vertices")
    for c in vc:
        if c not in g.colour_universe:
            raise ValueError(f"colour {c} outside universe {sorted(g.colour_universe)}")


def filter_graph(g: Multigraph, vc: VertexColouring) -> Multigraph:
    """Keep exactly the edges whose half-colours agree with vc at both ends."""
    _check_colouring(g, vc)
    kept = tuple(e for e in g.edges if e.cu == vc[e.u] and e.cv == vc[e.v])
    return Multigraph(g.n, kept, g.colour_universe)


def graph_weight(g: Multigraph):
    """Sum of all perfect-matching weights; 1 for the empty graph, 0 if none."""
    total = g.zero
    for m in enumerate_perfect_matchings(g):
        w = g.one
        for i in m:
            w = w * g.edges[i].weight
        total = total + w
    return total


def colouring_weight(g: Multigraph, vc: VertexColouring):
    """Weight of the subgraph surviving the colouring filter."""
    return graph_weight(filter_graph(g, vc))


def is_feasible(g: Multigraph, vc: VertexColouring) -> bool:
    """Whether at least one perfect matching induces vc (its weight may be 0)."""
    return bool(enumerate_perfect_matchings(filter_graph(g, vc)))


def colouring_weight_table(g: Multigraph) -> dict[VertexColouring, object]:
    """Total matching weight per induced colouring.

    Only feasible colourings appear (possibly with weight 0 after
    cancellation); the values sum to the graph weight because the matchings
    partition by induced colouring.  Keys are sorted for deterministic
    iteration.
    """
    acc: dict[VertexColouring, object] = {}
    for m in enumerate_perfect_matchings(g):
        w = g.one
        for i in m:
            w = w * g.edges[i].weight
        vc = induced_colouring(g, m)
        acc[vc] = acc[vc] + w if vc in acc else w
    return dict(sorted(acc.items()))
