"""Distance-balance recognition in O(mn) time.

For an edge uv, ``W(u,v)`` is the set of vertices strictly closer to u
than to v. A graph is distance-balanced (DB) when |W(u,v)| = |W(v,u)|
on every edge, nicely distance-balanced (NDB) when that common size is
additionally the same value gamma on every edge, and strongly
distance-balanced (SDB) when every cell pair D^i_{i-1} / D^{i-1}_i of
the edge's distance partition is balanced; equivalently, when adjacent
vertices always have identical sphere-size profiles.

The recognisers below run one BFS per vertex (O(mn) total) and then a
single O(n) scan per edge; `full_report` materialises the n x n
distance matrix once and derives every classification from it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    DisconnectedError,
    NotAnEdgeError,
    TooSmallError,
    UNREACHABLE,
    bfs_distances,
    is_bipartite,
    is_regular,
    profile_from_row,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class EdgePartition:
    """Cell sizes of the distance partition around one oriented edge (u, v).

    For levels i = 1..d_max, ``down[i-1]`` counts vertices at distance i
    from u and i-1 from v (closer to v), ``up[i-1]`` counts distance i-1
    from u and i from v (closer to u), and ``level[i-1]`` counts the
    equidistant vertices at distance i from both. The 1-based accessors
    ``down_at`` / ``up_at`` / ``level_at`` match that indexing.
    """

    u: int
    v: int
    down: tuple[int, ...]
    up: tuple[int, ...]
    level: tuple[int, ...]

    @property
    def d_max(self) -> int:
        return len(self.down)

    def down_at(self, i: int) -> int:
        return self.down[i - 1]

    def up_at(self, i: int) -> int:
        return self.up[i - 1]

    def level_at(self, i: int) -> int:
        return self.level[i - 1]


@dataclass(frozen=True)
class BalanceReport:
    """Full distance-balance classification of one connected graph."""

    is_db: bool
    is_ndb: bool
    gamma: int | None
    is_sdb: bool
    diameter: int
    bipartite: bool
    regular_valency: int | None
    db_witness: Edge | None
    sdb_witness: tuple[Edge, int] | None
    conjecture_holds: bool
    n: int
    m: int


def _require_edge(g: Graph, u: int, v: int) -> None:
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")


def _connected_row(g: Graph, source: int) -> list[int]:
    row = bfs_distances(g, source)
    if UNREACHABLE in row:
        raise DisconnectedError("graph is disconnected")
    return row


def _distance_rows(g: Graph) -> list[list[int]]:
    """One BFS row per vertex; O(n(n+m)) time, O(n^2) space."""
    return [_connected_row(g, s) for s in range(g.n)]


def w_sets(g: Graph, u: int, v: int) -> tuple[set[int], set[int]]:
    """The two sets of vertices strictly closer to u resp. v across edge uv.

    Equidistant vertices belong to neither set.
    """
    _require_edge(g, u, v)
    row_u = _connected_row(g, u)
    row_v = _connected_row(g, v)
    closer_u = {x for x in range(g.n) if row_u[x] < row_v[x]}
    closer_v = {x for x in range(g.n) if row_v[x] < row_u[x]}
    return closer_u, closer_v


def edge_partition(g: Graph, u: int, v: int) -> EdgePartition:
    """Exact cell sizes D^i_{i-1}, D^{i-1}_i, D^i_i for the edge (u, v)."""
    _require_edge(g, u, v)
    row_u = _connected_row(g, u)
    row_v = _connected_row(g, v)
    d_max = max(max(row_u), max(row_v))
    down = [0] * d_max
    up = [0] * d_max
    level = [0] * d_max
    for x in range(g.n):
        i, j = row_u[x], row_v[x]
        if i == j + 1:
            down[i - 1] += 1
        elif j == i + 1:
            up[j - 1] += 1
        else:  # triangle inequality forces i == j >= 1 here
            level[i - 1] += 1
    return EdgePartition(u=u, v=v, down=tuple(down), up=tuple(up), level=tuple(level))


def is_edge_balanced(g: Graph, u: int, v: int) -> bool:
    """True iff |W(u,v)| = |W(v,u)|."""
    closer_u, closer_v = w_sets(g, u, v)
    return len(closer_u) == len(closer_v)


def is_edge_sdb(g: Graph, u: int, v: int) -> bool:
    """True iff u and v have identical sphere profiles.

    Profile equality is equivalent to all D-cell pairs of the edge
    being balanced, and is O(n) to check after two BFS passes.
    """
    _require_edge(g, u, v)
    pu = profile_from_row(u, bfs_distances(g, u))
    pv = profile_from_row(v, bfs_distances(g, v))
    return pu.sizes == pv.sizes


def _w_counts(row_u: list[int], row_v: list[int], n: int) -> tuple[int, int]:
    cu = cv = 0
    for x in range(n):
        a = row_u[x]
        b = row_v[x]
        if a < b:
            cu += 1
        elif b < a:
            cv += 1
    return cu, cv


def is_db(g: Graph) -> tuple[bool, Edge | None]:
    """Decide the DB property; witness is the first unbalanced edge in sorted order."""
    rows = _distance_rows(g)
    for u, v in g.edges():
        cu, cv = _w_counts(rows[u], rows[v], g.n)
        if cu != cv:
            return False, (u, v)
    return True, None


def is_ndb(g: Graph) -> int | None:
    """The common W-size gamma if the graph is NDB, else None."""
    rows = _distance_rows(g)
    gamma: int | None = None
    for u, v in g.edges():
        cu, cv = _w_counts(rows[u], rows[v], g.n)
        if cu != cv:
            return None
        if gamma is None:
            gamma = cu
        elif cu != gamma:
            return None
    return gamma


def _first_profile_mismatch(pu: tuple[int, ...], pv: tuple[int, ...]) -> int | None:
    shorter = min(len(pu), len(pv))
    for i in range(shorter):
        if pu[i] != pv[i]:
            return i
    # profiles both sum to n, so unequal profiles always differ within range
    return None if len(pu) == len(pv) else shorter


def is_sdb(g: Graph) -> tuple[bool, tuple[Edge, int] | None]:
    """Decide the SDB property by comparing sphere profiles across every edge.

    Witness: the first edge (sorted order) with differing profiles, paired
    with the smallest sphere index where they differ.
    """
    profiles = [profile_from_row(s, bfs_distances(g, s)).sizes for s in range(g.n)]
    for u, v in g.edges():
        if profiles[u] != profiles[v]:
            lvl = _first_profile_mismatch(profiles[u], profiles[v])
            assert lvl is not None
            return False, ((u, v), lvl)
    return True, None


def weighted_distance(g: Graph, v: int, s) -> int:
    """Sum of distances from v to the vertices of s."""
    row = _connected_row(g, v)
    return sum(row[x] for x in s)


def total_distance(g: Graph, v: int) -> int:
    """Sum of distances from v to every vertex of the graph."""
    return sum(_connected_row(g, v))


def conjecture_check(g: Graph) -> tuple[bool, Edge | None]:
    """Check d(u, W(u,v)) = d(v, W(v,u)) on every edge.

    SDB graphs always satisfy the identity; the converse fails. Witness
    is the first violating edge in sorted order.
    """
    rows = _distance_rows(g)
    n = g.n
    for u, v in g.edges():
        row_u, row_v = rows[u], rows[v]
        du = dv = 0
        for x in range(n):
            a = row_u[x]
            b = row_v[x]
            if a < b:
                du += a
            elif b < a:
                dv += b
        if du != dv:
            return False, (u, v)
    return True, None


def full_report(g: Graph) -> BalanceReport:
    """Classify a connected graph on >= 2 vertices in one pass.

    Materialises all n BFS rows once (O(mn) time, O(n^2) space) and
    derives DB/NDB/gamma/SDB, the weighted-distance identity, diameter,
    bipartiteness and regularity from them. Witnesses follow the
    canonical ascending edge order.
    """
    if g.n < 2:
        raise TooSmallError("classification needs at least 2 vertices")
    rows = _distance_rows(g)
    n = g.n

    profiles = [profile_from_row(s, rows[s]).sizes for s in range(n)]
    diam = max(len(p) - 1 for p in profiles)

    db = True
    db_witness: Edge | None = None
    ndb = True
    gamma: int | None = None
    sdb = True
    sdb_witness: tuple[Edge, int] | None = None
    conjecture = True

    for u, v in g.edges():
        row_u, row_v = rows[u], rows[v]
        cu = cv = 0
        wu = wv = 0
        for x in range(n):
            a = row_u[x]
            b = row_v[x]
            if a < b:
                cu += 1
                wu += a
            elif b < a:
                cv += 1
                wv += b
        if cu != cv:
            ndb = False
            if db:
                db = False
                db_witness = (u, v)
        elif gamma is None:
            gamma = cu
        elif cu != gamma:
            ndb = False
        if wu != wv:
            conjecture = False
        if sdb and profiles[u] != profiles[v]:
            lvl = _first_profile_mismatch(profiles[u], profiles[v])
            assert lvl is not None
            sdb = False
            sdb_witness = ((u, v), lvl)

    is_ndb_final = db and ndb and gamma is not None
    bip, _ = is_bipartite(g)
    return BalanceReport(
        is_db=db,
        is_ndb=is_ndb_final,
        gamma=gamma if is_ndb_final else None,
        is_sdb=sdb,
        diameter=diam,
        bipartite=bip,
        regular_valency=is_regular(g),
        db_witness=db_witness,
        sdb_witness=sdb_witness,
        conjecture_holds=conjecture,
        n=n,
        m=g.m,
    )
