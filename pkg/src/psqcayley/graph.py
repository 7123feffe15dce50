"""The implicit circulant graph: vertices are exponents in [0, n), and two
vertices are adjacent exactly when the order of their difference is a squared
prime.

Adjacency is arithmetic, so the graph is never materialized except on demand
(edge-list / DOT export, capped).  BFS uses a flat distance table with a
ring-buffer frontier; sweeps from distinct sources share no mutable state and
may run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .connectors import ConnectingSet, enumerate_connectors, is_connector
from .group import PrimeTriple, _check_exponent, bezout_witness, make_prime_triple

DEFAULT_MATERIALIZE_CAP = 20_000

# connector lookup tables above this vertex count would waste memory
_FLAG_TABLE_CAP = 4_000_000


class TooLargeError(ValueError):
    """The graph exceeds the materialization cap for an explicit operation."""


@dataclass(frozen=True)
class ConnectivityResult:
    """Both connectivity verdicts: the generator witness and a full BFS."""

    connected: bool
    bezout: tuple[int, int, int]
    bezout_holds: bool
    bfs_reached: int


@dataclass(frozen=True)
class CayleyGraph:
    triple: PrimeTriple
    cset: ConnectingSet

    @classmethod
    def from_triple(cls, t: PrimeTriple) -> "CayleyGraph":
        return cls(t, enumerate_connectors(t))

    @classmethod
    def from_primes(cls, a: int, b: int, c: int) -> "CayleyGraph":
        return cls.from_triple(make_prime_triple(a, b, c))

    @property
    def vertex_count(self) -> int:
        return self.triple.n

    @property
    def degree(self) -> int:
        return self.cset.size

    @cached_property
    def _connector_flags(self) -> bytearray | None:
        # speed path for sweeps; adjacency stays defined by arithmetic
        if self.triple.n > _FLAG_TABLE_CAP:
            return None
        flags = bytearray(self.triple.n)
        for m in self.cset.members:
            flags[m] = 1
        return flags

    def adjacent(self, u: int, v: int) -> bool:
        """True iff u ≠ v and their difference lies in the connecting set."""
        _check_exponent(u, self.triple)
        _check_exponent(v, self.triple)
        if u == v:
            return False
        d = (u - v) % self.triple.n
        flags = self._connector_flags
        if flags is not None:
            return bool(flags[d])
        return is_connector(d, self.triple)

    def neighbors(self, u: int) -> list[int]:
        """The degree-many neighbors of u, sorted ascending."""
        _check_exponent(u, self.triple)
        n = self.triple.n
        return sorted((u + c) % n for c in self.cset.members)

    def bfs(self, source: int) -> list[int]:
        """Exact hop distances from source to every vertex (-1 = unreachable)."""
        _check_exponent(source, self.triple)
        n = self.triple.n
        members = self.cset.members
        dist = [-1] * n
        dist[source] = 0
        queue = [0] * n
        queue[0] = source
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            d1 = dist[u] + 1
            for c in members:
                v = u + c
                if v >= n:
                    v -= n
                if dist[v] < 0:
                    dist[v] = d1
                    queue[tail] = v
                    tail += 1
        return dist

    def is_connected(self) -> ConnectivityResult:
        """Connectivity verified two ways: Bezout witness and full BFS reach."""
        t = self.triple
        u, v, w = bezout_witness(t)
        holds = u * t.m_beta * t.m_gamma + v * t.m_alpha * t.m_gamma + w * t.m_alpha * t.m_beta == 1
        reached = sum(d >= 0 for d in self.bfs(0))
        return ConnectivityResult(holds and reached == t.n, (u, v, w), holds, reached)

    def is_eulerian(self) -> bool:
        """Connected with every degree even (degrees all equal |C|)."""
        return self.degree % 2 == 0 and self.is_connected().connected

    def girth_certificate(self) -> tuple[int, int, int]:
        """A triangle witnessing girth 3: {0, a²b², 2a²b²}."""
        m_ab = self.triple.m_alpha * self.triple.m_beta
        return (0, m_ab, 2 * m_ab)

    def nonplanarity_certificate(self) -> tuple[int, int, int, int, int]:
        """Five pairwise-adjacent vertices (a K5, hence non-planar): k·a²b², k<5."""
        m_ab = self.triple.m_alpha * self.triple.m_beta
        return tuple(k * m_ab for k in range(5))  # type: ignore[return-value]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Every undirected edge once as (u, v) with u < v, ascending by (u, v)."""
        n = self.triple.n
        members = self.cset.members
        for u in range(n):
            row = []
            for c in members:
                v = u + c
                if v >= n:
                    v -= n
                if v > u:
                    row.append(v)
            row.sort()
            for v in row:
                yield (u, v)

    def edge_lines(self) -> Iterator[str]:
        for u, v in self.edges():
            yield f"{u} {v}"

    def dot_lines(self, name: str = "cayley") -> Iterator[str]:
        yield f"graph {name} {{"
        for u, v in self.edges():
            yield f"  {u} -- {v};"
        yield "}"

    def export(self, fmt: str, cap: int = DEFAULT_MATERIALIZE_CAP) -> bytes:
        """Materialize the graph as an 'edges' list or 'dot' document."""
        if self.triple.n > cap:
            raise TooLargeError(f"{self.triple.n} vertices exceed cap {cap}")
        if fmt == "edges":
            lines = self.edge_lines()
        elif fmt == "dot":
            lines = self.dot_lines()
        else:
            raise ValueError(f"unknown export format {fmt!r}")
        return ("\n".join(lines) + "\n").encode("ascii")
