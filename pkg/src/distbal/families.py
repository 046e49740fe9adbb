"""Deterministic generators for the graph families used across the suite.

Every generator fixes its vertex labeling (documented per function) so
that coordinate-level expected values in the tests stay stable.

`FamilySpec` is the CLI/service-facing handle: a family name from
`FAMILIES` plus the integer parameters that family requires.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, build_graph
from .products import cartesian, line_graph


class UnknownFamilyError(GraphError):
    """The family name is not in the registry."""


class ParamOutOfRangeError(GraphError):
    """A family parameter has the wrong arity or is out of range."""


@dataclass(frozen=True)
class FamilySpec:
    """A parameterised, generatable graph family."""

    family: str
    params: tuple[int, ...] = ()

    def label(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}({', '.join(str(p) for p in self.params)})"


def gen_cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise ParamOutOfRangeError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ParamOutOfRangeError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise ParamOutOfRangeError("complete needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 1:
        raise ParamOutOfRangeError("empty needs n >= 1")
    return build_graph(n, [])


def gen_complete_multipartite_t3(t: int) -> Graph:
    """Complete multipartite graph with t parts of size 3; vertex v sits in part v // 3."""
    if t < 2:
        raise ParamOutOfRangeError("complete_multipartite_t3 needs t >= 2")
    n = 3 * t
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if i // 3 != j // 3]
    return build_graph(n, edges)


def gen_prism(n: int) -> Graph:
    """Prism on 2n vertices: cycle C_n times an edge; index = 2 * cycle_vertex + level."""
    if n < 3:
        raise ParamOutOfRangeError("prism needs n >= 3")
    return cartesian(gen_cycle(n), gen_complete(2))


def gen_moebius(n_vertices: int) -> Graph:
    """Moebius ladder: an even cycle plus all antipodal chords i ~ i + n/2."""
    if n_vertices < 4 or n_vertices % 2 != 0:
        raise ParamOutOfRangeError("moebius needs an even vertex count >= 4")
    half = n_vertices // 2
    edges = [(i, (i + 1) % n_vertices) for i in range(n_vertices)]
    edges += [(i, i + half) for i in range(half)]
    return build_graph(n_vertices, edges)


# Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram 5..9 (step 2).
_PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
]


def gen_petersen() -> Graph:
    """The Petersen graph, fixed 10-vertex adjacency table."""
    return build_graph(10, _PETERSEN_EDGES)


def gen_petersen_complement() -> Graph:
    """Complement of the Petersen graph (the triangular graph on 10 vertices)."""
    present = {tuple(sorted(e)) for e in _PETERSEN_EDGES}
    edges = [
        (i, j) for i in range(10) for j in range(i + 1, 10) if (i, j) not in present
    ]
    return build_graph(10, edges)


def gen_paley9() -> Graph:
    """Paley graph on 9 vertices.

    Built on the order-9 field realised as pairs (a, b) = a + b*t over
    Z_3 with t*t = 2 (the fixed irreducible choice t^2 + 1). Vertices
    are indexed 3*a + b; two vertices are adjacent when their difference
    is a nonzero square of the field.
    """
    squares = set()
    for a in range(3):
        for b in range(3):
            if (a, b) == (0, 0):
                continue
            # (a + b t)^2 = a^2 + 2 b^2 + (2 a b) t   since t^2 = 2
            squares.add(((a * a + 2 * b * b) % 3, (2 * a * b) % 3))
    edges = []
    for a1 in range(3):
        for b1 in range(3):
            for a2 in range(3):
                for b2 in range(3):
                    u, v = 3 * a1 + b1, 3 * a2 + b2
                    if u < v and ((a1 - a2) % 3, (b1 - b2) % 3) in squares:
                        edges.append((u, v))
    return build_graph(9, edges)


def gen_hypercube(d: int) -> Graph:
    """d-dimensional hypercube; vertices are the bitmasks 0..2^d - 1."""
    if d < 1:
        raise ParamOutOfRangeError("hypercube needs d >= 1")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v & (1 << b)]
    return build_graph(n, edges)


def gen_line_of_hypercube3() -> Graph:
    """Line graph of the 3-dimensional hypercube: 12 vertices, 4-regular."""
    return line_graph(gen_hypercube(3))


# One pole (0), upper pentagon 1..5, lower pentagon 6..10 forming an
# antiprism with the upper one, second pole (11).
_ICOSAHEDRON_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (6, 7), (7, 8), (8, 9), (9, 10), (6, 10),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
    (1, 7), (2, 8), (3, 9), (4, 10), (5, 6),
    (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
]


def gen_icosahedron() -> Graph:
    """The icosahedron, fixed 12-vertex adjacency table (5-regular, 30 edges)."""
    return build_graph(12, _ICOSAHEDRON_EDGES)


def gen_tricirc30() -> Graph:
    """Three-ring circulant on 30 vertices; vertex (layer, j) has index 10*layer + j.

    Layer 0 is an independent set; each (0, j) joins (1, j+1), (1, j+4),
    (2, j+1), (2, j+4); layers 1 and 2 carry the chords j ~ j+4, all
    arithmetic mod 10. The result is 4-regular with 60 edges.
    """
    edges = []
    for j in range(10):
        edges.append((j, 10 + (j + 1) % 10))
        edges.append((j, 10 + (j + 4) % 10))
        edges.append((j, 20 + (j + 1) % 10))
        edges.append((j, 20 + (j + 4) % 10))
        edges.append((10 + j, 10 + (j + 4) % 10))
        edges.append((20 + j, 20 + (j + 4) % 10))
    return build_graph(30, edges)


def gen_gamma_k(k: int) -> Graph:
    """Two-tier family on 12k+6 vertices: an (8k+4)-cycle plus 4k+2 hub vertices.

    Cycle vertices x_i have indices 0..8k+3 (x_i ~ x_{i+1} mod 8k+4);
    hub vertices y_i have indices 8k+4+i for i in 0..4k+1, and y_i joins
    x_{i+m} for m in {0, 2k-1, 2k+1, 4k+2, 6k+1, 6k+3} (x-index mod
    8k+4). Cycle vertices end up with degree 5, hubs with degree 6.
    """
    if k < 3:
        raise ParamOutOfRangeError("gamma_k needs k >= 3")
    nx = 8 * k + 4
    ny = 4 * k + 2
    offsets = (0, 2 * k - 1, 2 * k + 1, 4 * k + 2, 6 * k + 1, 6 * k + 3)
    edges = [(i, (i + 1) % nx) for i in range(nx)]
    for i in range(ny):
        y = nx + i
        for m in offsets:
            edges.append((y, (i + m) % nx))
    return build_graph(nx + ny, edges)


def gen_c6kl(k: int, l: int) -> Graph:
    """Blown-up 6-cycle: positions 0..5, even positions hold k independent
    vertices, odd positions hold l, and consecutive positions are joined
    completely.

    Indices run block-wise in position order, so position p starts at
    sum of the sizes of positions 0..p-1.
    """
    if k < 1 or l < 1:
        raise ParamOutOfRangeError("c6kl needs k >= 1 and l >= 1")
    sizes = [k, l, k, l, k, l]
    starts = [0] * 6
    for p in range(1, 6):
        starts[p] = starts[p - 1] + sizes[p - 1]
    n = sum(sizes)
    edges = []
    for p in range(6):
        q = (p + 1) % 6
        for r in range(sizes[p]):
            for s in range(sizes[q]):
                edges.append((starts[p] + r, starts[q] + s))
    return build_graph(n, edges)


#: family name -> (parameter count, generator taking that many ints)
FAMILIES = {
    "cycle": (1, gen_cycle),
    "complete": (1, gen_complete),
    "complete_multipartite_t3": (1, gen_complete_multipartite_t3),
    "prism": (1, gen_prism),
    "moebius": (1, gen_moebius),
    "petersen": (0, gen_petersen),
    "petersen_complement": (0, gen_petersen_complement),
    "paley9": (0, gen_paley9),
    "hypercube": (1, gen_hypercube),
    "line_of_hypercube3": (0, gen_line_of_hypercube3),
    "icosahedron": (0, gen_icosahedron),
    "empty": (1, gen_empty),
    "tricirc30": (0, gen_tricirc30),
    "gamma_k": (1, gen_gamma_k),
    "c6kl": (2, gen_c6kl),
}


def gen_named(spec: FamilySpec) -> Graph:
    """Generate the graph a `FamilySpec` names; range errors propagate."""
    if spec.family not in FAMILIES:
        raise UnknownFamilyError(
            f"unknown family {spec.family!r}; known: {', '.join(sorted(FAMILIES))}"
        )
    arity, gen = FAMILIES[spec.family]
    if len(spec.params) != arity:
        raise ParamOutOfRangeError(
            f"{spec.family} takes {arity} parameter(s), got {len(spec.params)}"
        )
    return gen(*spec.params)
