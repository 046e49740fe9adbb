"""Graph operators: Cartesian product, lexicographic product, line graph.

Product vertices (a, b) map to index ``a * |V(B)| + b``; this labeling is
fixed so that index-level expectations stay stable. All theorem-style
tests elsewhere compare label-independent quantities only.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, build_graph


class EmptyFactorError(GraphError):
    """A product factor has no vertices."""


class NoEdgesError(GraphError):
    """The line graph needs at least one edge."""


def cartesian(ga: Graph, gb: Graph) -> Graph:
    """Cartesian product: move along an edge in exactly one coordinate.

    (a1, b1) ~ (a2, b2) iff a1 = a2 and b1 ~ b2, or b1 = b2 and a1 ~ a2.
    Distances add coordinate-wise when both factors are connected.
    """
    if ga.n == 0 or gb.n == 0:
        raise EmptyFactorError("product factors must have at least one vertex")
    nb = gb.n
    edges = []
    for a in range(ga.n):
        base = a * nb
        for b1, b2 in gb.edges():
            edges.append((base + b1, base + b2))
    for a1, a2 in ga.edges():
        for b in range(nb):
            edges.append((a1 * nb + b, a2 * nb + b))
    return build_graph(ga.n * nb, edges)


def lexicographic(ga: Graph, gb: Graph) -> Graph:
    """Lexicographic product: order on the first coordinate dominates.

    (a1, b1) ~ (a2, b2) iff a1 ~ a2, or a1 = a2 and b1 ~ b2. The second
    factor may be disconnected (e.g. an empty graph); the result is
    connected iff the first factor is, once it has >= 2 vertices.
    """
    if ga.n == 0 or gb.n == 0:
        raise EmptyFactorError("product factors must have at least one vertex")
    nb = gb.n
    edges = []
    for a in range(ga.n):
        base = a * nb
        for b1, b2 in gb.edges():
            edges.append((base + b1, base + b2))
    for a1, a2 in ga.edges():
        for b1 in range(nb):
            for b2 in range(nb):
                edges.append((a1 * nb + b1, a2 * nb + b2))
    return build_graph(ga.n * nb, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g, adjacent iff the edges share an endpoint.

    Edges of g are indexed in ascending (u, v) order.
    """
    edge_list = list(g.edges())
    if not edge_list:
        raise NoEdgesError("line graph needs at least one edge")
    index = {e: i for i, e in enumerate(edge_list)}
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for e, i in index.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    out = []
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                out.append((ids[a], ids[b]))
    return build_graph(len(edge_list), out)
