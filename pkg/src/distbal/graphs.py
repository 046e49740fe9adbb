"""Immutable simple-graph core with BFS distance primitives.

Vertices are dense integer indices 0..n-1. Graphs are undirected and
simple (no loops, no parallel edges); every analysis routine in this
package consumes the `Graph` type defined here. Graphs never mutate
after construction and every function is pure, so all of this is safe
to call concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

#: Distance value reported for vertices that BFS cannot reach.
UNREACHABLE = -1


class GraphError(Exception):
    """Base class for every error this package raises on purpose."""


class SelfLoopError(GraphError):
    """An input edge joins a vertex to itself."""


class VertexRangeError(GraphError):
    """An input edge endpoint lies outside 0..n-1."""


class DisconnectedError(GraphError):
    """The requested analysis is only defined for connected graphs."""


class NotAnEdgeError(GraphError):
    """The given vertex pair is not an edge of the graph."""


class TooSmallError(GraphError):
    """The graph has too few vertices for this analysis."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph in adjacency-list form.

    ``adj[v]`` is a strictly increasing tuple of the neighbours of
    ``v``; each edge appears in both endpoint lists. Instances are
    immutable and hashable-by-identity; build them with `build_graph`.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        """Number of undirected edges."""
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        # neighbour lists are short at desk scale; linear scan is fine
        return v in self.adj[u]

    def edges(self):
        """Yield edges as (u, v) with u < v, in ascending lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def __repr__(self) -> str:  # compact; full adjacency is rarely useful
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class SphereProfile:
    """Sizes of the distance spheres around one source vertex.

    ``sizes[i]`` counts the vertices at distance exactly i from
    ``source``; the last entry is nonzero and its index is the source's
    eccentricity.
    """

    source: int
    sizes: tuple[int, ...]

    @property
    def eccentricity(self) -> int:
        return len(self.sizes) - 1


def build_graph(n: int, edges) -> Graph:
    """Build a `Graph` on n vertices from an iterable of endpoint pairs.

    Duplicate edges collapse silently (the target universe is simple
    graphs); self-loops and out-of-range endpoints are hard errors.
    """
    if n < 0:
        raise VertexRangeError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
        seen.add((u, v) if u < v else (v, u))
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        lists[u].append(v)
        lists[v].append(u)
    return Graph(n=n, adj=tuple(tuple(sorted(nbrs)) for nbrs in lists))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from `source` to every vertex (UNREACHABLE when there is no path).

    Plain queue-based BFS over the adjacency lists: O(n + m) time and
    O(n) auxiliary space.
    """
    if not (0 <= source < g.n):
        raise VertexRangeError(f"source {source} outside vertex range 0..{g.n - 1}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du1 = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du1
                queue.append(w)
    return dist


def profile_from_row(source: int, row: list[int]) -> SphereProfile:
    """Fold one BFS distance row into a `SphereProfile`.

    Raises `DisconnectedError` if the row contains unreachable vertices.
    """
    ecc = 0
    for d in row:
        if d == UNREACHABLE:
            raise DisconnectedError("graph is disconnected")
        if d > ecc:
            ecc = d
    sizes = [0] * (ecc + 1)
    for d in row:
        sizes[d] += 1
    return SphereProfile(source=source, sizes=tuple(sizes))


def sphere_profile(g: Graph, source: int) -> SphereProfile:
    """Sphere sizes |S_0|, |S_1|, ... around `source` (connected graphs only)."""
    return profile_from_row(source, bfs_distances(g, source))


def diameter(g: Graph) -> int:
    """Largest eccentricity over all vertices; requires a connected graph."""
    if g.n == 0:
        raise TooSmallError("diameter is undefined for the empty vertex set")
    best = 0
    for s in range(g.n):
        row = bfs_distances(g, s)
        for d in row:
            if d == UNREACHABLE:
                raise DisconnectedError("graph is disconnected")
            if d > best:
                best = d
    return best


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuously true for n <= 1)."""
    if g.n <= 1:
        return True
    row = bfs_distances(g, 0)
    return UNREACHABLE not in row


def is_regular(g: Graph) -> int | None:
    """The common vertex degree, or None if degrees differ (or n = 0)."""
    if g.n == 0:
        return None
    k = len(g.adj[0])
    for nbrs in g.adj:
        if len(nbrs) != k:
            return None
    return k


def is_bipartite(g: Graph) -> tuple[bool, list[int]]:
    """Decide 2-colourability, with an explicit witness either way.

    Returns ``(True, colours)`` where ``colours[v]`` is 0 or 1, or
    ``(False, cycle)`` where ``cycle`` is the vertex sequence of an
    odd closed walk (consecutive entries adjacent, last adjacent to
    first). Works on disconnected graphs too.
    """
    colour = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False, _odd_cycle(parent, u, w)
    return True, colour


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    """Join the BFS-tree paths of the conflict edge (u, w) at their lowest common ancestor."""
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    on_u = {v: i for i, v in enumerate(path_u)}
    path_w = [w]
    while path_w[-1] not in on_u:
        path_w.append(parent[path_w[-1]])
    lca_idx = on_u[path_w[-1]]
    # u .. lca, then back down lca-1 .. w; closing edge (w, u) exists
    return path_u[: lca_idx + 1] + list(reversed(path_w[:-1]))
