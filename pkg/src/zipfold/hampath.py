"""Exhaustive enumeration of Hamiltonian paths and cycles in a solid's
1-skeleton.

The largest instance is 20 vertices of degree 3, so plain depth-first
backtracking is exhaustive in well under a second. "Labeled" counting
distinguishes paths by vertex indices; geometric deduplication lives in the
congruence module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .solids import Polyhedron, build_solid, graph_distance


@dataclass(frozen=True)
class CutPath:
    """A Hamiltonian path along polyhedron edges, used as a cut tree."""

    solid: str
    vertices: tuple

    def __post_init__(self):
        p = build_solid(self.solid)
        vs = self.vertices
        if sorted(vs) != list(range(p.vertex_count)):
            raise ValueError(f"not a Hamiltonian vertex sequence on {self.solid}: {vs}")
        adj = p.neighbors
        for a, b in zip(vs, vs[1:]):
            if b not in adj[a]:
                raise ValueError(f"{a}-{b} is not an edge of the {self.solid}")

    @property
    def edges(self) -> tuple:
        return tuple(tuple(sorted(e)) for e in zip(self.vertices, self.vertices[1:]))

    def reversed(self) -> "CutPath":
        return CutPath(self.solid, tuple(reversed(self.vertices)))


def _directed_paths_from(adjacency, start: int, n: int):
    """Yield every directed Hamiltonian path starting at `start`."""
    path = [start]
    used = [False] * n
    used[start] = True

    def rec(v):
        if len(path) == n:
            yield tuple(path)
            return
        for w in adjacency[v]:
            if not used[w]:
                used[w] = True
                path.append(w)
                yield from rec(w)
                path.pop()
                used[w] = False

    yield from rec(start)


@lru_cache(maxsize=None)
def _all_paths(solid: str) -> tuple:
    p = build_solid(solid)
    n = p.vertex_count
    adj = p.neighbors
    out = []
    for start in range(n):
        for seq in _directed_paths_from(adj, start, n):
            if seq[0] < seq[-1]:  # one canonical direction per undirected path
                out.append(seq)
    out.sort()
    return tuple(out)


def enumerate_paths(p: Polyhedron) -> list[CutPath]:
    """All labeled Hamiltonian paths, one canonical direction each, in
    lexicographic order."""
    return [CutPath(p.name, seq) for seq in _all_paths(p.name)]


def enumerate_paths_between(p: Polyhedron, u: int, v: int) -> list[CutPath]:
    """Labeled Hamiltonian paths with endpoint set {u, v}."""
    n = p.vertex_count
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"vertex index out of range: {u}, {v}")
    if u == v:
        raise ValueError("endpoints must differ")
    lo, hi = min(u, v), max(u, v)
    return [
        CutPath(p.name, seq)
        for seq in _all_paths(p.name)
        if seq[0] == lo and seq[-1] == hi
    ]


def count_cycles_through_edge(p: Polyhedron, e) -> int:
    """Labeled undirected Hamiltonian cycles containing edge e.

    A cycle through (u, v) minus that edge is a Hamiltonian u-v path, and the
    closing edge can never occur inside such a path for V >= 3, so the map is
    a bijection onto enumerate_paths_between(u, v).
    """
    edge = tuple(sorted(e))
    if edge not in set(p.edges):
        raise ValueError(f"{e} is not an edge of the {p.name}")
    return len(enumerate_paths_between(p, *edge))


def endpoint_distance_census(p: Polyhedron) -> dict:
    """Path counts bucketed by the graph distance between endpoints."""
    census: dict[int, int] = {}
    for seq in _all_paths(p.name):
        d = graph_distance(p, seq[0], seq[-1])
        census[d] = census.get(d, 0) + 1
    return dict(sorted(census.items()))


def representative_pairs(p: Polyhedron) -> dict:
    """One canonical endpoint pair per occurring distance class: the
    lexicographically smallest pair at each distance."""
    pairs: dict[int, tuple] = {}
    n = p.vertex_count
    for u in range(n):
        for v in range(u + 1, n):
            d = graph_distance(p, u, v)
            if d not in pairs and enumerate_paths_between(p, u, v):
                pairs[d] = (u, v)
    return dict(sorted(pairs.items()))
