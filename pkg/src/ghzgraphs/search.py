"""Numerical search for GHZ weight assignments on a fixed skeleton.

One complex variable per (skeleton edge, ordered colour pair): the variable
for pair index e and colours (p, q) sits at index e*d*d + p*d + q and is the
weight of the coloured edge carrying p at the lower endpoint and q at the
upper one.  Every colouring weight is a multilinear polynomial in these
variables -- one monomial per perfect matching of the fully-expanded
multigraph -- so the structure (which variables multiply into which
colouring) is computed once per skeleton and dimension, independent of any
weights.

The residual is   sum_mono |w(i) - 1|^2 + sum_non-mono |w(vc)|^2,  summed
over all d monochromatic colourings (feasible or not) and every feasible
non-monochromatic one; it is 0 exactly at GHZ assignments of dimension d.
Minimization is plain gradient descent with a backtracking line search,
restarted from seeded random points in the unit polydisc.  The gradient of
the real residual with respect to (Re x_k, Im x_k) is packed into one
complex number per variable:  g_k = 2 * sum_vc conj(D_k,vc) * (w_vc - t_vc)
with D_k,vc the sum over matchings through k of the leave-one-out products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exact import GaussianRational
from .ghz import DEFAULT_EPSILON, GhzVerdict, verify
from .graphs import Edge, Multigraph, skeleton
from .matchings import enumerate_perfect_matchings, induced_colouring


class SearchProblem:
    """Monomial structure of the residual for one skeleton and dimension."""

    def __init__(self, g: Multigraph, d: int):
        if d < 1:
            raise ValueError("dimension must be at least 1")
        base = skeleton(g)
        self.skeleton = base
        self.d = d
        self.pairs: tuple[tuple[int, int], ...] = tuple((e.u, e.v) for e in base.edges)
        self.n_vars = len(self.pairs) * d * d

        expanded = Multigraph(
            base.n,
            tuple(
                Edge(u, v, p, q, 1)
                for (u, v) in self.pairs
                for p in range(d)
                for q in range(d)
            ),
            frozenset(range(d)),
        )
        self.expanded = expanded

        matchings = enumerate_perfect_matchings(expanded)
        groups: dict[tuple, int] = {}
        for colour in range(d):
            groups.setdefault((colour,) * base.n, len(groups))
        for m in matchings:
            groups.setdefault(induced_colouring(expanded, m), len(groups))
        ordered = sorted(groups, key=lambda vc: groups[vc])
        # re-sort colourings for stable reporting, monos staying first
        ordered = ordered[:d] + sorted(ordered[d:])
        self.colourings: tuple[tuple, ...] = tuple(ordered)
        index = {vc: k for k, vc in enumerate(ordered)}

        width = base.n // 2
        self.monomials = np.array(
            [m for m in matchings], dtype=np.int64
        ).reshape(len(matchings), width)
        self.monomial_group = np.array(
            [index[induced_colouring(expanded, m)] for m in matchings], dtype=np.int64
        )
        targets = np.zeros(len(ordered), dtype=np.complex128)
        targets[:d] = 1.0
        self.targets = targets

    def variable_index(self, pair: int, p: int, q: int) -> int:
        if not 0 <= pair < len(self.pairs):
            raise ValueError(f"pair index {pair} out of range")
        if not (0 <= p < self.d and 0 <= q < self.d):
            raise ValueError(f"colours ({p}, {q}) outside 0..{self.d - 1}")
        return pair * self.d * self.d + p * self.d + q


@dataclass(frozen=True)
class Residual:
    value: float
    per_colouring: dict

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class SearchResult:
    weights: np.ndarray
    residual: Residual
    converged: bool
    restart: int
    iterations: int


def _check_weights(problem: SearchProblem, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (problem.n_vars,):
        raise ValueError(f"expected {problem.n_vars} weights, got shape {x.shape}")
    return x


def _group_weights(problem: SearchProblem, x: np.ndarray) -> np.ndarray:
    w = np.zeros(len(problem.targets), dtype=np.complex128)
    if len(problem.monomials):
        products = np.prod(x[problem.monomials], axis=1)
        np.add.at(w, problem.monomial_group, products)
    return w


def _value(problem: SearchProblem, x: np.ndarray) -> float:
    diff = _group_weights(problem, x) - problem.targets
    return float(np.sum(diff.real**2 + diff.imag**2))


def residual(problem: SearchProblem, weights) -> Residual:
    """Residual value plus the |w_vc - t_vc|^2 contribution per colouring."""
    x = _check_weights(problem, weights)
    diff = _group_weights(problem, x) - problem.targets
    contributions = diff.real**2 + diff.imag**2
    per = {vc: float(c) for vc, c in zip(problem.colourings, contributions)}
    return Residual(float(np.sum(contributions)), per)


def gradient(problem: SearchProblem, weights) -> np.ndarray:
    """Complex-packed gradient: (d/dRe x_k) + i (d/dIm x_k) of the residual."""
    x = _check_weights(problem, weights)
    grad = np.zeros(problem.n_vars, dtype=np.complex128)
    if not len(problem.monomials):
        return grad
    vals = x[problem.monomials]  # (M, width)
    width = vals.shape[1]
    pre = np.ones_like(vals)
    suf = np.ones_like(vals)
    for j in range(1, width):
        pre[:, j] = pre[:, j - 1] * vals[:, j - 1]
        suf[:, width - 1 - j] = suf[:, width - j] * vals[:, width - j]
    leave_one_out = pre * suf
    diff = _group_weights(problem, x) - problem.targets
    coeff = diff[problem.monomial_group][:, None]
    np.add.at(grad, problem.monomials, np.conj(leave_one_out) * coeff)
    return 2.0 * grad


def _descend(problem: SearchProblem, x: np.ndarray, max_iters: int, tol: float):
    """Backtracking gradient descent from one starting point."""
    f = _value(problem, x)
    step = 0.1
    iterations = 0
    for iterations in range(1, max_iters + 1):
        if f <= tol:
            break
        g = gradient(problem, x)
        gnorm2 = float(np.sum(g.real**2 + g.imag**2))
        if gnorm2 < 1e-24:
            break
        while step > 1e-18:
            candidate = x - step * g
            f_new = _value(problem, candidate)
            if f_new <= f - 1e-4 * step * gnorm2:
                x, f = candidate, f_new
                step *= 2.0
                break
            step *= 0.5
        else:
            break
    return x, f, iterations


def search(
    problem: SearchProblem,
    seed: int = 0,
    restarts: int = 20,
    max_iters: int = 2000,
    tol: float = 1e-10,
) -> SearchResult:
    """Multi-restart descent; returns the best point found, deterministically.

    Restart r draws its start from numpy's default_rng seeded with
    (seed, r): weights uniform on the unit disc.  The first restart to
    reach ``tol`` wins outright; otherwise the lowest residual does, earlier
    restarts breaking ties.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    best_x = None
    best_f = math.inf
    best_restart = 0
    best_iters = 0
    for r in range(restarts):
        rng = np.random.default_rng((seed, r))
        radius = np.sqrt(rng.random(problem.n_vars))
        angle = rng.random(problem.n_vars) * 2.0 * math.pi
        x0 = radius * np.exp(1j * angle)
        x, f, iters = _descend(problem, x0, max_iters, tol)
        if f < best_f:
            best_x, best_f, best_restart, best_iters = x, f, r, iters
        if best_f <= tol:
            break
    return SearchResult(
        weights=best_x,
        residual=residual(problem, best_x),
        converged=best_f <= tol,
        restart=best_restart,
        iterations=best_iters,
    )


def assignment_graph(problem: SearchProblem, weights) -> Multigraph:
    """The float-weighted multigraph an assignment vector describes."""
    x = _check_weights(problem, weights)
    d = problem.d
    edges = []
    for e, (u, v) in enumerate(problem.pairs):
        for p in range(d):
            for q in range(d):
                edges.append(Edge(u, v, p, q, complex(x[e * d * d + p * d + q])))
    return Multigraph(problem.skeleton.n, tuple(edges), frozenset(range(d)))


@dataclass(frozen=True)
class Exactification:
    graph: Multigraph
    verdict: GhzVerdict
    mode: str  # "exact" | "numeric"
    epsilon: float  # tolerance used by the verdict (0.0 in exact mode)


def exactify(
    problem: SearchProblem,
    weights,
    max_denominator: int = 10**6,
    tol: float = 1e-9,
    epsilon: float | None = None,
) -> Exactification:
    """Certify an assignment exactly when possible, numerically otherwise.

    Weights within ``tol`` of Gaussian rationals with denominators up to
    ``max_denominator`` are rounded and re-verified with exact arithmetic;
    if that confirms a GHZ graph of full dimension the verdict is exact.
    Anything else falls back to a float verdict at a tolerance reflecting
    the achieved residual.
    """
    x = _check_weights(problem, weights)
    rounded = [
        GaussianRational.from_float(float(z.real), float(z.imag), max_denominator)
        for z in x
    ]
    err = max(
        (abs(complex(r) - z) for r, z in zip(rounded, x)),
        default=0.0,
    )
    if err <= tol:
        d = problem.d
        edges = tuple(
            Edge(u, v, p, q, rounded[e * d * d + p * d + q])
            for e, (u, v) in enumerate(problem.pairs)
            for p in range(d)
            for q in range(d)
        )
        exact_graph = Multigraph(problem.skeleton.n, edges, frozenset(range(d)))
        verdict = verify(exact_graph)
        if verdict.is_ghz and verdict.dimension == problem.d:
            return Exactification(exact_graph, verdict, "exact", 0.0)

    float_graph = assignment_graph(problem, x)
    achieved = _value(problem, x)
    eps = epsilon if epsilon is not None else max(DEFAULT_EPSILON, 2.0 * math.sqrt(achieved))
    return Exactification(float_graph, verify(float_graph, eps), "numeric", eps)
