"""Half-edge-coloured, complex-weighted multigraphs.

An edge carries one colour per endpoint half (cu at u, cv at v) plus a
weight, which is either a GaussianRational (exact mode) or a Python complex
(float mode, produced by scaling and search).  A multigraph never mixes the
two kinds.  Edges are canonicalized so the lower endpoint comes first;
parallel edges are allowed and distinguished by their half-colour pair,
self-loops are not.

The colour universe is stored explicitly rather than inferred from the
edges: monochromatic-colouring enumeration and the C1/C2 classification in
the reduction must range over the intended palette even when some colour
happens to appear on no edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .exact import GaussianRational

Colour = int
VertexColouring = tuple[Colour, ...]


def _as_weight(w):
    if isinstance(w, (GaussianRational, complex)):
        return w
    if isinstance(w, (int, Fraction)):
        return GaussianRational(w)
    if isinstance(w, float):
        return complex(w)
    raise TypeError(f"unsupported weight type {type(w).__name__}")


@dataclass(frozen=True)
class Edge:
    """One edge of a multigraph, canonicalized so that u < v."""

    u: int
    v: int
    cu: Colour
    cv: Colour
    weight: GaussianRational | complex

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"self-loop at vertex {self.u} is not allowed")
        if self.u < 0 or self.v < 0:
            raise ValueError("vertex indices must be non-negative")
        if not isinstance(self.cu, int) or not isinstance(self.cv, int):
            raise TypeError("colours must be ints")
        if self.cu < 0 or self.cv < 0:
            raise ValueError("colours must be non-negative")
        object.__setattr__(self, "weight", _as_weight(self.weight))
        if self.u > self.v:
            u, v, cu, cv = self.u, self.v, self.cu, self.cv
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)
            object.__setattr__(self, "cu", cv)
            object.__setattr__(self, "cv", cu)

    def colour_at(self, vertex: int) -> Colour:
        """The half-colour this edge shows at one of its endpoints."""
        if vertex == self.u:
            return self.cu
        if vertex == self.v:
            return self.cv
        raise ValueError(f"vertex {vertex} is not an endpoint of {self}")

    def other_end(self, vertex: int) -> int:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"vertex {vertex} is not an endpoint of {self}")


@dataclass(frozen=True)
class Multigraph:
    """Vertices 0..n-1 with a tuple of coloured weighted edges."""

    n: int
    edges: tuple[Edge, ...]
    colour_universe: frozenset[Colour]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "colour_universe", frozenset(self.colour_universe))
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for c in self.colour_universe:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"colour universe entry {c!r} is not a non-negative int")
        exact = None
        for e in self.edges:
            if not isinstance(e, Edge):
                raise TypeError("edges must be Edge instances")
            if e.v >= self.n:
                raise ValueError(f"edge {e.u}-{e.v} exceeds vertex range 0..{self.n - 1}")
            if e.cu not in self.colour_universe or e.cv not in self.colour_universe:
                raise ValueError(
                    f"edge {e.u}-{e.v} uses colour outside the universe {sorted(self.colour_universe)}"
                )
            kind = isinstance(e.weight, GaussianRational)
            if exact is None:
                exact = kind
            elif exact != kind:
                raise ValueError("cannot mix exact and float weights in one graph")

    @property
    def is_exact(self) -> bool:
        """True when weights are GaussianRational (an edgeless graph counts)."""
        for e in self.edges:
            return isinstance(e.weight, GaussianRational)
        return True

    @property
    def one(self):
        return GaussianRational(1) if self.is_exact else complex(1)

    @property
    def zero(self):
        return GaussianRational(0) if self.is_exact else complex(0)


class InducedSubgraph(NamedTuple):
    """An induced subgraph together with its vertex relabelling.

    ``vertices[i]`` is the original label of new vertex i; retained vertices
    are relabelled to 0..k-1 in increasing original order.
    """

    graph: Multigraph
    vertices: tuple[int, ...]


def build_graph(n: int, edge_specs: Iterable[tuple], colours: Iterable[Colour] | None = None) -> Multigraph:
    """Convenience constructor from (u, v, cu, cv, weight) tuples.

    The colour universe defaults to the colours actually present; pass
    ``colours`` to widen (or pin) it.
    """
    edges = tuple(Edge(u, v, cu, cv, w) for u, v, cu, cv, w in edge_specs)
    if colours is None:
        colours = {c for e in edges for c in (e.cu, e.cv)}
    return Multigraph(n, edges, frozenset(colours))


def mono_colouring(n: int, colour: Colour) -> VertexColouring:
    return (colour,) * n


def restrict_colouring(vc: VertexColouring, vertices: Iterable[int]) -> VertexColouring:
    """Restrict a colouring to a vertex subset, in relabelled (sorted) order."""
    return tuple(vc[v] for v in sorted(vertices))


def merge_parallel_edges(g: Multigraph) -> Multigraph:
    """Sum weights of edges sharing endpoints and both half-colours.

    Keeps first-occurrence order, so the operation is idempotent and
    deterministic.
    """
    order: list[tuple[int, int, Colour, Colour]] = []
    acc: dict[tuple[int, int, Colour, Colour], object] = {}
    for e in g.edges:
        key = (e.u, e.v, e.cu, e.cv)
        if key in acc:
            acc[key] = acc[key] + e.weight
        else:
            acc[key] = e.weight
            order.append(key)
    merged = tuple(Edge(u, v, cu, cv, acc[(u, v, cu, cv)]) for u, v, cu, cv in order)
    return Multigraph(g.n, merged, g.colour_universe)


def drop_zero_edges(g: Multigraph) -> Multigraph:
    """Remove edges whose weight is exactly zero (a weight-0 edge is no edge)."""
    kept = tuple(e for e in g.edges if e.weight != g.zero)
    return Multigraph(g.n, kept, g.colour_universe)


def induced_subgraph(g: Multigraph, vertices: Iterable[int]) -> InducedSubgraph:
    """Subgraph on a vertex subset, relabelled to a dense 0..k-1 range."""
    kept = sorted(set(vertices))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    relabel = {v: i for i, v in enumerate(kept)}
    members = set(kept)
    edges = tuple(
        Edge(relabel[e.u], relabel[e.v], e.cu, e.cv, e.weight)
        for e in g.edges
        if e.u in members and e.v in members
    )
    return InducedSubgraph(Multigraph(len(kept), edges, g.colour_universe), tuple(kept))


def skeleton(g: Multigraph) -> Multigraph:
    """The simple graph underneath: one uncoloured unit edge per adjacent pair."""
    pairs = sorted({(e.u, e.v) for e in g.edges})
    edges = tuple(Edge(u, v, 0, 0, GaussianRational(1)) for u, v in pairs)
    return Multigraph(g.n, edges, frozenset({0}))


def adjacency_sets(g: Multigraph) -> list[set[int]]:
    """Neighbour sets of the underlying simple graph."""
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for e in g.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    return adj
