"""Exact combinatorics of edge-coloured weighted multigraphs.

The library studies graphs whose edges carry a colour on each half and a
complex weight: which vertex colourings are induced by perfect matchings,
with what total weight, whether the graph has the GHZ property (every
monochromatic colouring weighs 1, everything else 0), how to rescale and
reduce such graphs across small vertex cuts, and how to search numerically
for GHZ weight assignments on a fixed skeleton.
"""

from .errors import (
    BogdanovHypothesisError,
    DocumentError,
    GhzGraphError,
    InvariantViolation,
    IrreducibleError,
    NotGhzError,
    UnscalableColourError,
    WrongCaseError,
)
from .exact import GaussianRational
from .graphs import (
    Colour,
    Edge,
    InducedSubgraph,
    Multigraph,
    VertexColouring,
    adjacency_sets,
    build_graph,
    drop_zero_edges,
    induced_subgraph,
    merge_parallel_edges,
    mono_colouring,
    restrict_colouring,
    skeleton,
)
from .matchings import (
    PerfectMatching,
    colouring_weight,
    colouring_weight_table,
    enumerate_perfect_matchings,
    filter_graph,
    graph_weight,
    induced_colouring,
    is_feasible,
    matching_weight,
)
from .ghz import (
    DEFAULT_EPSILON,
    GhzVerdict,
    Violation,
    dimension,
    find_bogdanov_witness,
    mono_weights,
    scale_to_ghz,
    verify,
)
from .structure import (
    CutSpec,
    SquareDecomposition,
    find_cut,
    iter_cuts,
    make_cut,
    mcg,
    square_decomposition_even,
    square_decomposition_odd,
    vertex_connectivity,
)
from .reduction import (
    ColourClassification,
    ReductionReport,
    TypeWeights,
    classify_colours,
    reduce,
    reduce_easy,
    reduce_hard,
    type_weights,
)
from .search import (
    Exactification,
    Residual,
    SearchProblem,
    SearchResult,
    assignment_graph,
    exactify,
    gradient,
    residual,
    search,
)
from .io import (
    document_to_graph,
    graph_to_document,
    load_graph,
    parse_document,
    serialize_graph,
)
from .instances import (
    cancelling_square,
    complete_ghz_k4,
    cycle_ghz,
    cycle_ghz_on,
    octahedron,
    parallel_ghz_k2,
)

__version__ = "0.1.0"
