"""Shared corpus builders and independent brute-force oracles.

Every random object is derived from random.Random with a fixed seed, so the
whole suite sees the same corpus on every run.  The oracles here deliberately
avoid the library's own enumeration/flow code: pairings are generated by a
direct recursion over vertex lists and connectivity by subset enumeration,
so the two routes can disagree when one of them is wrong.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from ghzgraphs import (
    GaussianRational,
    Multigraph,
    build_graph,
    complete_ghz_k4,
    cycle_ghz,
    cycle_ghz_on,
    make_cut,
    parallel_ghz_k2,
)

# ---------------------------------------------------------------------------
# weights


def small_rational(rng: random.Random, zero_ok: bool = False) -> GaussianRational:
    """A small Gaussian rational; complex or negative about half the time."""
    while True:
        re = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        im = Fraction(rng.randint(-2, 2), rng.randint(1, 2)) if rng.random() < 0.4 else Fraction(0)
        w = GaussianRational(re, im)
        if zero_ok or w:
            return w


# ---------------------------------------------------------------------------
# random multigraphs (n <= 8, <= 14 edges, <= 3 colours)


def random_multigraph(seed: int) -> Multigraph:
    rng = random.Random(f"multigraph-{seed}")
    n = rng.choice([2, 3, 4, 4, 5, 6, 6, 7, 8, 8])
    d = rng.randint(1, 3)
    specs = []
    for _ in range(rng.randint(1, 14)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while n > 1 and v == u:
            v = rng.randrange(n)
        if u == v:
            continue
        specs.append((u, v, rng.randrange(d), rng.randrange(d), small_rational(rng)))
    return build_graph(n, specs, colours=range(d))


def random_corpus(count: int = 100) -> list[Multigraph]:
    return [random_multigraph(seed) for seed in range(count)]


def planted_matching_graph(seed: int) -> Multigraph:
    """Random multigraph with at least one perfect matching planted."""
    rng = random.Random(f"planted-pm-{seed}")
    n = rng.choice([4, 6, 8])
    d = rng.randint(1, 3)
    verts = list(range(n))
    rng.shuffle(verts)
    specs = [
        (verts[i], verts[i + 1], rng.randrange(d), rng.randrange(d), small_rational(rng))
        for i in range(0, n, 2)
    ]
    for _ in range(rng.randint(0, 14 - n // 2)):
        u, v = rng.sample(range(n), 2)
        specs.append((u, v, rng.randrange(d), rng.randrange(d), small_rational(rng)))
    return build_graph(n, specs, colours=range(d))


# ---------------------------------------------------------------------------
# instances with a planted 3-cut [V1 | S | V2], no V1-V2 edges, |V1| odd


def planted_cut_instance(seed: int):
    """Returns (graph, cut).  Layout: V1 = 0..n1-1, S next three, V2 the rest.

    One type-i perfect matching is always planted; for |V1| = 3 a type-0 one
    is planted too, so every term of the four-way split gets exercised.  The
    colour count shrinks as the graph grows to keep the full block-constant
    sweep cheap.
    """
    rng = random.Random(f"planted-cut-{seed}")
    n1 = rng.choice([1, 1, 3])
    n2 = rng.choice([2, 4]) if n1 == 1 else 2
    n = n1 + 3 + n2
    d = rng.randint(1, 3) if n <= 6 else rng.randint(1, 2)
    v1 = list(range(n1))
    s = list(range(n1, n1 + 3))
    v2 = list(range(n1 + 3, n))

    def edge(u, v):
        return (u, v, rng.randrange(d), rng.randrange(d), small_rational(rng))

    specs = []
    # planted type-i matching: u_i into V1, the other two cut vertices paired
    # with each other or into V2
    u1, u2, u3 = s
    specs.append(edge(u1, rng.choice(v1)))
    left = [x for x in v1 if x != specs[-1][1]]
    rng.shuffle(left)
    specs += [edge(left[i], left[i + 1]) for i in range(0, len(left), 2)]
    if n2 == 2:
        specs.append(edge(u2, u3))
        specs.append(edge(v2[0], v2[1]))
    else:
        specs.append(edge(u2, v2[0]))
        specs.append(edge(u3, v2[1]))
        specs.append(edge(v2[2], v2[3]))
    if n1 == 3:
        # planted type-0 matching: all of S into V1, V2 paired internally
        order = v1[:]
        rng.shuffle(order)
        specs += [edge(ui, x) for ui, x in zip(s, order)]
        specs.append(edge(v2[0], v2[1]))
    # random chaff on both sides of the cut
    for _ in range(rng.randint(0, 4)):
        u, v = rng.sample(v1 + s, 2)
        specs.append(edge(u, v))
    for _ in range(rng.randint(0, 4)):
        u, v = rng.sample(v2 + s, 2)
        specs.append(edge(u, v))

    g = build_graph(n, specs, colours=range(d))
    return g, make_cut(g, s, v1, v2)


def planted_cut_corpus(count: int = 50):
    return [planted_cut_instance(seed) for seed in range(count)]


# ---------------------------------------------------------------------------
# weighted cycles and the hard-case family


def weighted_cycle(seed, order) -> Multigraph:
    """Cycle instance with random weights whose two alternating colour-class
    products are both 1, so the graph is GHZ of dimension 2."""
    rng = random.Random(f"weighted-cycle-{seed}")
    n = len(order)
    ws = [small_rational(rng) for _ in range(n)]
    even_head = ws[0:n - 2:2]
    odd_head = ws[1:n - 1:2]
    prod_e = GaussianRational(1)
    for w in even_head:
        prod_e = prod_e * w
    prod_o = GaussianRational(1)
    for w in odd_head:
        prod_o = prod_o * w
    ws[n - 2] = GaussianRational(1) / prod_e
    ws[n - 1] = GaussianRational(1) / prod_o
    return cycle_ghz_on(order, ws)


HARD_ORDER = (0, 3, 6, 7, 4, 1, 2, 5)  # 8-cycle traversal; {3,4,5} cuts off {0,1,2}


def hard_family_member(seed: int, split: bool = False):
    """Returns (graph, cut) for the eight-vertex hard-case family.

    The cut S = {3,4,5} separates the odd block {0,1,2} from {6,7}; the only
    induced edge on {6,7} is monochromatic of colour 0, which puts colour 0
    in C1 and colour 1 in C2.  With ``split`` one cycle edge is torn into two
    parallel edges of the same colour class summing to the original weight.
    """
    g = weighted_cycle(f"hard-{seed}", HARD_ORDER)
    if split:
        rng = random.Random(f"hard-split-{seed}")
        k = rng.randrange(len(g.edges))
        e = g.edges[k]
        a = small_rational(rng)
        while a == e.weight:
            a = small_rational(rng)
        specs = [(f.u, f.v, f.cu, f.cv, f.weight) for f in g.edges]
        specs[k] = (e.u, e.v, e.cu, e.cv, a)
        specs.append((e.u, e.v, e.cu, e.cv, e.weight - a))
        g = build_graph(g.n, specs, colours=g.colour_universe)
    return g, make_cut(g, (3, 4, 5), (0, 1, 2), (6, 7))


def hard_family(count: int = 12):
    return [hard_family_member(seed, split=seed % 3 == 2) for seed in range(count)]


# ---------------------------------------------------------------------------
# g-GHZ corpus: GHZ graphs times a non-zero rational per colour class


def ghz_corpus():
    """Named GHZ instances reused across sweeps."""
    return [
        ("k4", complete_ghz_k4()),
        ("k2x2", parallel_ghz_k2(2)),
        ("k2x5", parallel_ghz_k2(5)),
        ("c6", cycle_ghz(6)),
        ("c8", cycle_ghz(8)),
        ("c6w", weighted_cycle(1, range(6))),
        ("c8w", weighted_cycle(2, range(8))),
        ("c8-hard", hard_family_member(0)[0]),
        ("c8-hard-split", hard_family_member(5, split=True)[0]),
    ]


def scaled_ghz_instance(seed: int):
    """A GHZ corpus member with every edge weight multiplied by s_cu * s_cv
    for seeded non-zero rationals s_i: g-GHZ of the same dimension, and the
    exact inverse image of what the scaling operation must reconstruct."""
    bases = ghz_corpus()
    name, base = bases[seed % len(bases)]
    rng = random.Random(f"scale-{seed}")
    s = {c: small_rational(rng) for c in sorted(base.colour_universe)}
    specs = [
        (e.u, e.v, e.cu, e.cv, e.weight * s[e.cu] * s[e.cv])
        for e in base.edges
    ]
    return name, build_graph(base.n, specs, colours=base.colour_universe)


def scale_corpus(count: int = 20):
    return [scaled_ghz_instance(seed) for seed in range(count)]


# ---------------------------------------------------------------------------
# Bogdanov corpus: three planted monochromatic pairings of distinct colours


def bogdanov_instance(seed: int) -> Multigraph:
    rng = random.Random(f"bogdanov-{seed}")
    n = rng.choice([6, 8, 10])
    specs = []
    for colour in range(3):
        verts = list(range(n))
        rng.shuffle(verts)
        specs += [
            (verts[i], verts[i + 1], colour, colour, 1)
            for i in range(0, n, 2)
        ]
    for _ in range(rng.randint(0, 6)):
        u, v = rng.sample(range(n), 2)
        specs.append((u, v, rng.randrange(3), rng.randrange(3), 1))
    return build_graph(n, specs, colours=range(3))


def bogdanov_corpus(count: int = 100):
    return [bogdanov_instance(seed) for seed in range(count)]


# ---------------------------------------------------------------------------
# independent oracles


def brute_pairings(n: int):
    """Every partition of range(n) into unordered pairs, by direct recursion."""
    def rec(verts):
        if not verts:
            yield []
            return
        a = verts[0]
        for i in range(1, len(verts)):
            b = verts[i]
            rest = verts[1:i] + verts[i + 1:]
            for tail in rec(rest):
                yield [(a, b)] + tail
    if n % 2:
        return
    yield from rec(list(range(n)))


def oracle_colouring_weight(g: Multigraph, vc):
    """Colouring weight by brute force over vertex pairings.

    Sum over pairings of the product, per pair, of the weights of the edges
    on that pair whose half-colours agree with vc at both ends; expanding the
    product enumerates exactly the matchings of the multigraph.
    """
    by_pair: dict[tuple[int, int], object] = {}
    for e in g.edges:
        if e.cu == vc[e.u] and e.cv == vc[e.v]:
            key = (e.u, e.v)
            by_pair[key] = by_pair.get(key, g.zero) + e.weight
    total = g.zero
    for pairing in brute_pairings(g.n):
        prod = g.one
        for (a, b) in pairing:
            prod = prod * by_pair.get((a, b), g.zero)
            if prod == g.zero:
                break
        total = total + prod
    return total


def oracle_graph_weight(g: Multigraph):
    """Graph weight by the same pairing recursion, ignoring colours."""
    by_pair: dict[tuple[int, int], object] = {}
    for e in g.edges:
        key = (e.u, e.v)
        by_pair[key] = by_pair.get(key, g.zero) + e.weight
    total = g.zero
    for pairing in brute_pairings(g.n):
        prod = g.one
        for (a, b) in pairing:
            prod = prod * by_pair.get((a, b), g.zero)
            if prod == g.zero:
                break
        total = total + prod
    return total


def _connected(vertices: list[int], adj: dict[int, set[int]]) -> bool:
    seen = {vertices[0]}
    stack = [vertices[0]]
    members = set(vertices)
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in members and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(members)


def oracle_connectivity(g: Multigraph) -> int:
    """Vertex connectivity by subset enumeration (n - 1 for complete graphs)."""
    n = g.n
    if n <= 1:
        return 0
    adj: dict[int, set[int]] = {x: set() for x in range(n)}
    for e in g.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    for k in range(0, n - 1):
        for s in itertools.combinations(range(n), k):
            remaining = [v for v in range(n) if v not in s]
            if len(remaining) < 2:
                continue
            if not _connected(remaining, adj):
                return k
    return n - 1
