"""Independent brute-force ground truth.

Exact maximum-clique search (bitset branch and bound with a greedy coloring
bound), exact maximum independent set on the index graph (clique search on the
complement), multi-source BFS distance sweeps checked against the closed-form
distance, and a deterministic triangle scan.  Nothing here consults the
closed-form constructors it is used to check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .connectors import is_connector
from .graph import CayleyGraph
from .parameters import closed_form_distance_table
from .structure import BlockId, IndexGraph

DEFAULT_SEED = 12345


class BudgetExceededError(RuntimeError):
    """An exact search was asked to exceed its configured size cap."""


@dataclass(frozen=True)
class OracleBudget:
    """Caps and reproducibility knobs for the brute-force oracles.

    bfs_sources counts extra BFS sources beyond vertex 0; None means sweep
    from every vertex.
    """

    max_exact_vertices: int = 400
    max_index_vertices: int = 300
    bfs_sources: int | None = None
    sample_pairs: int = 100_000
    sample_edges: int = 1_000_000
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        for name in ("max_exact_vertices", "max_index_vertices", "sample_pairs", "sample_edges"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.bfs_sources is not None and self.bfs_sources < 0:
            raise ValueError("bfs_sources must be nonnegative")


def exact_max_clique(
    vertices: Sequence, adjacent: Callable, budget: OracleBudget | None = None
) -> list:
    """A maximum clique of the induced subgraph, by branch and bound.

    Candidates are ordered by a greedy coloring whose class count bounds the
    clique size, pruning the search.  Fully deterministic.
    """
    if budget is None:
        budget = OracleBudget()
    m = len(vertices)
    if m > budget.max_exact_vertices:
        raise BudgetExceededError(f"{m} vertices exceed exact-search cap {budget.max_exact_vertices}")
    if m == 0:
        return []
    adj = [0] * m
    for i in range(m):
        vi = vertices[i]
        for j in range(i + 1, m):
            if adjacent(vi, vertices[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    best: list[int] = []

    def expand(chosen: list[int], cand: int) -> None:
        nonlocal best
        if cand == 0:
            if len(chosen) > len(best):
                best = chosen.copy()
            return
        order: list[int] = []
        bounds: list[int] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                order.append(v)
                bounds.append(color)
                uncolored &= ~bit
                avail &= ~(bit | adj[v])
        for idx in range(len(order) - 1, -1, -1):
            if len(chosen) + bounds[idx] <= len(best):
                return
            v = order[idx]
            chosen.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(chosen, nxt)
            elif len(chosen) > len(best):
                best = chosen.copy()
            chosen.pop()
            cand &= ~(1 << v)

    expand([], (1 << m) - 1)
    return [vertices[i] for i in sorted(best)]


def exact_max_independent_set(ig: IndexGraph, budget: OracleBudget | None = None) -> list[BlockId]:
    """Exact maximum independent set of the index graph, via a maximum clique
    of its complement."""
    if budget is None:
        budget = OracleBudget()
    ids = ig.ids()
    if len(ids) > budget.max_index_vertices:
        raise BudgetExceededError(f"{len(ids)} ids exceed index cap {budget.max_index_vertices}")
    return exact_max_clique(
        ids,
        lambda x, y: not ig.adjacent(x, y),
        OracleBudget(max_exact_vertices=budget.max_index_vertices, seed=budget.seed),
    )


@dataclass(frozen=True)
class SweepReport:
    sources: int
    pairs_checked: int
    max_distance: int
    mismatches: int


def distance_sweep(g: CayleyGraph, budget: OracleBudget | None = None) -> SweepReport:
    """BFS from vertex 0 plus budgeted extra sources; every computed distance
    is compared against the closed form."""
    if budget is None:
        budget = OracleBudget()
    t = g.triple
    n = t.n
    if budget.bfs_sources is None:
        sources: list[int] = list(range(n))
    else:
        rng = random.Random(budget.seed)
        extra = min(budget.bfs_sources, n - 1)
        sources = [0] + sorted(rng.sample(range(1, n), extra))
    table = closed_form_distance_table(t)
    max_distance = 0
    mismatches = 0
    for s in sources:
        dist = g.bfs(s)
        top = max(dist)
        if top > max_distance:
            max_distance = top
        expected = table[n - s :] + table[: n - s] if s else table
        if dist != expected:
            mismatches += sum(a != b for a, b in zip(dist, expected))
    return SweepReport(len(sources), len(sources) * n, max_distance, mismatches)


def find_triangle(g: CayleyGraph) -> tuple[int, int, int] | None:
    """Deterministic first triangle: connectors c1 < c2 whose difference is
    itself a connector give the triangle {0, c1, c2}."""
    members = g.cset.members
    flags = g._connector_flags
    n = g.triple.n
    for i, c1 in enumerate(members):
        for c2 in members[i + 1 :]:
            d = c2 - c1
            hit = bool(flags[d]) if flags is not None else is_connector(d, g.triple)
            if hit:
                return (0, c1, c2)
    return None
