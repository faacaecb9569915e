"""Matching cover, connectivity, cut enumeration and square decompositions."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ghzgraphs import (
    CutSpec,
    build_graph,
    colouring_weight,
    colouring_weight_table,
    complete_ghz_k4,
    cycle_ghz,
    enumerate_perfect_matchings,
    find_cut,
    iter_cuts,
    make_cut,
    mcg,
    octahedron,
    parallel_ghz_k2,
    skeleton,
    square_decomposition_even,
    square_decomposition_odd,
    vertex_connectivity,
)

from conftest import (
    oracle_connectivity,
    planted_matching_graph,
    small_rational,
)


# ---------------------------------------------------------------------------
# mcg


def test_mcg_drops_edges_outside_all_matchings():
    # path 0-1-2-3: the middle edge lies in no perfect matching
    g = build_graph(4, [(0, 1, 0, 0, 1), (1, 2, 0, 0, 1), (2, 3, 0, 0, 1)])
    kept = mcg(g)
    assert [(e.u, e.v) for e in kept.edges] == [(0, 1), (2, 3)]


def test_mcg_of_matchingless_graph_is_edgeless():
    g = build_graph(4, [(0, 1, 0, 0, 1), (0, 2, 0, 0, 1)])
    assert mcg(g).edges == ()


@pytest.mark.parametrize("seed", range(12))
def test_mcg_preserves_matchings_and_table(seed):
    g = planted_matching_graph(seed)
    kept = mcg(g)
    as_edge_sets = lambda graph: sorted(
        sorted((e.u, e.v, e.cu, e.cv, e.weight.re, e.weight.im) for i in m for e in [graph.edges[i]])
        for m in enumerate_perfect_matchings(graph)
    )
    assert as_edge_sets(kept) == as_edge_sets(g)
    assert colouring_weight_table(kept) == colouring_weight_table(g)
    assert mcg(kept) == kept  # fixpoint


# ---------------------------------------------------------------------------
# vertex connectivity


def test_connectivity_of_known_graphs():
    assert vertex_connectivity(cycle_ghz(6)) == 2
    assert vertex_connectivity(complete_ghz_k4()) == 3
    assert vertex_connectivity(octahedron()) == 4
    assert vertex_connectivity(parallel_ghz_k2(5)) == 1  # complete on 2 vertices
    path = build_graph(3, [(0, 1, 0, 0, 1), (1, 2, 0, 0, 1)])
    assert vertex_connectivity(path) == 1
    disconnected = build_graph(4, [(0, 1, 0, 0, 1), (2, 3, 0, 0, 1)])
    assert vertex_connectivity(disconnected) == 0
    assert vertex_connectivity(build_graph(1, [])) == 0


def simple_graphs(max_n=7):
    def make(n, picks):
        pairs = list(itertools.combinations(range(n), 2))
        chosen = [pairs[i % len(pairs)] for i in picks] if pairs else []
        return build_graph(n, [(u, v, 0, 0, 1) for u, v in set(chosen)])
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.builds(make, st.just(n), st.lists(st.integers(min_value=0, max_value=40), max_size=18))
    )


@settings(max_examples=120, deadline=None)
@given(simple_graphs())
def test_connectivity_matches_brute_force(g):
    assert vertex_connectivity(g) == oracle_connectivity(g)


def test_connectivity_ignores_parallel_edges():
    g = build_graph(3, [(0, 1, 0, 0, 1), (0, 1, 1, 1, 1), (1, 2, 0, 0, 1)], colours=range(2))
    assert vertex_connectivity(g) == 1


# ---------------------------------------------------------------------------
# cuts


def test_cutspec_validates_parity_tag():
    with pytest.raises(ValueError):
        CutSpec((0, 1), (2,), (3, 4), "even")
    spec = CutSpec((1, 0), (4, 2), (3,), "even")
    assert spec.s == (0, 1) and spec.v1 == (2, 4)  # sorted on construction


def test_make_cut_validations():
    c6 = cycle_ghz(6)
    cut = make_cut(c6, (1, 3, 5), (0,), (2, 4))
    assert cut.parity == "odd"
    with pytest.raises(ValueError):
        make_cut(c6, (1, 3), (0,), (2, 4))  # not a partition
    with pytest.raises(ValueError):
        make_cut(c6, (1, 3, 5), (0, 2, 4), ())  # empty side
    with pytest.raises(ValueError):
        make_cut(c6, (0, 1), (2, 3), (4, 5))  # edge 3-4 crosses the blocks


def test_find_cut_on_c6_is_deterministic():
    c6 = cycle_ghz(6)
    assert find_cut(c6, 2) == CutSpec((0, 2), (1,), (3, 4, 5), "odd")
    assert find_cut(c6, 3) == CutSpec((0, 1, 3), (2,), (4, 5), "odd")
    assert find_cut(octahedron(), 3) is None


def test_iter_cuts_yields_only_valid_cuts():
    for g in (cycle_ghz(6), cycle_ghz(8), planted_matching_graph(1)):
        for cut in itertools.islice(iter_cuts(g, 3), 50):
            rebuilt = make_cut(g, cut.s, cut.v1, cut.v2)
            assert rebuilt == cut


def test_iter_cuts_finds_every_separating_set():
    # completeness against brute force: every 2-subset whose removal
    # disconnects the rest must appear among the yielded cuts
    g = cycle_ghz(8)
    adj = {x: set() for x in range(g.n)}
    for e in g.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    expected = set()
    for s in itertools.combinations(range(g.n), 2):
        remaining = [v for v in range(g.n) if v not in s]
        seen = {remaining[0]}
        stack = [remaining[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in set(remaining) and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) < len(remaining):
            expected.add(s)
    assert {cut.s for cut in iter_cuts(g, 2)} == expected


def test_three_cut_enumeration_covers_odd_groupings():
    # removing {0, 1, 4} from C8 leaves components {2, 3} and {5, 6, 7}:
    # only one odd grouping, so exactly one cut for that S
    cuts = [c for c in iter_cuts(cycle_ghz(8), 3) if c.s == (0, 1, 4)]
    assert cuts == [CutSpec((0, 1, 4), (5, 6, 7), (2, 3), "odd")]
    # {0, 2, 4} leaves {1}, {3}, {5, 6, 7}: three proper odd groupings
    # (the union of all components is never a side -- v2 must be non-empty)
    cuts = [c for c in iter_cuts(cycle_ghz(8), 3) if c.s == (0, 2, 4)]
    assert [c.v1 for c in cuts] == [(1,), (3,), (5, 6, 7)]


# ---------------------------------------------------------------------------
# squares


def planted_two_cut(seed, odd):
    """[A | {u, v} | B] instance with no A-B edges; |A| odd or even."""
    rng = random.Random(f"two-cut-{seed}-{odd}")
    na = rng.choice([1, 3]) if odd else 2
    nb = rng.choice([1, 3]) if odd else rng.choice([2, 4])
    n = na + nb + 2
    a_side = list(range(na))
    u, v = na, na + 1
    b_side = list(range(na + 2, n))
    d = rng.randint(1, 2)
    specs = []
    for _ in range(rng.randint(4, 10)):
        x, y = rng.sample(a_side + [u, v], 2)
        specs.append((x, y, rng.randrange(d), rng.randrange(d), small_rational(rng)))
    for _ in range(rng.randint(4, 10)):
        x, y = rng.sample(b_side + [u, v], 2)
        specs.append((x, y, rng.randrange(d), rng.randrange(d), small_rational(rng)))
    g = build_graph(n, specs, colours=range(d))
    return g, u, v, a_side, b_side


@pytest.mark.parametrize("seed", range(15))
def test_odd_square_total_reproduces_the_colouring_weight(seed):
    g, u, v, a_side, b_side = planted_two_cut(seed, odd=True)
    universe = sorted(g.colour_universe)
    for colours in itertools.product(universe, repeat=4):
        sq = square_decomposition_odd(g, u, v, a_side, b_side, colours)
        i, j, k, l = colours
        vc = tuple(
            k if x == u else l if x == v else i if x in a_side else j
            for x in range(g.n)
        )
        assert sq.total == colouring_weight(g, vc)


@pytest.mark.parametrize("seed", range(15))
def test_even_square_total_reproduces_the_colouring_weight(seed):
    g, u, v, a_side, b_side = planted_two_cut(seed, odd=False)
    universe = sorted(g.colour_universe)
    for colours in itertools.product(universe, repeat=3):
        sq = square_decomposition_even(g, u, v, a_side, b_side, colours)
        i, j, k = colours
        vc = tuple(
            k if x in (u, v) else i if x in a_side else j
            for x in range(g.n)
        )
        assert sq.total == colouring_weight(g, vc)


def test_square_parity_checks():
    g, u, v, a_side, b_side = planted_two_cut(0, odd=True)
    with pytest.raises(ValueError):
        square_decomposition_even(g, u, v, a_side, b_side, (0, 0, 0))
    g, u, v, a_side, b_side = planted_two_cut(0, odd=False)
    with pytest.raises(ValueError):
        square_decomposition_odd(g, u, v, a_side, b_side, (0, 0, 0, 0))


def test_square_frozen_values_on_c6():
    # cut {0, 2} of the 6-cycle, A = {1}, B = {3, 4, 5}.  The block G[{0, 1}]
    # is the single colour-0 edge 0-1, so V_left is 1 exactly when i = k = 0;
    # likewise H_bottom is G[{1, 2}] = the colour-1 edge 1-2.
    c6 = cycle_ghz(6)
    sq = square_decomposition_odd(c6, 0, 2, [1], [3, 4, 5], (0, 1, 0, 1))
    assert sq.v_left == 1
    assert sq.v_right == 0   # B + v wants l = j = 0
    assert sq.h_top == 0     # B + u wants j = k = 1
    assert sq.h_bottom == 0  # i = 1 and l = 1 needed
    sq_mono = square_decomposition_odd(c6, 0, 2, [1], [3, 4, 5], (0, 0, 0, 0))
    assert sq_mono.vertical == 1 and sq_mono.horizontal == 0
    assert sq_mono.total == colouring_weight(c6, (0,) * 6) == 1


def test_solidity_flag():
    g = build_graph(4, [
        (0, 1, 0, 0, 1), (1, 2, 0, 0, 1), (2, 3, 0, 0, 1), (0, 3, 0, 0, 1),
    ])
    sq = square_decomposition_odd(g, 0, 2, [1], [3], (0, 0, 0, 0))
    assert sq.is_solid
    assert sq.total == colouring_weight(g, (0, 0, 0, 0)) == 2
