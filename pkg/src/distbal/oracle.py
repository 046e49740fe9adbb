"""Brute-force reference implementations for differential testing.

Everything here is deliberately naive: distances come from fresh
per-query BFS passes with no shared state, and classification builds
the literal D-cell sets per edge instead of using the sphere-profile
shortcut. Redundancy with the fast path in `balance` is the point.

Random graphs use a fixed 64-bit linear congruential generator
(state <- state * 6364136223846793005 + 1442695040888963407 mod 2^64)
so any implementation of the same recipe reproduces identical graphs:
``rand_below(k)`` is ``(next_state >> 33) % k`` and ``rand_unit()`` is
``(next_state >> 11) / 2^53``.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, DisconnectedError, NotAnEdgeError, TooSmallError, build_graph
from . import balance

_LCG_MUL = 6364136223846793005
_LCG_ADD = 1442695040888963407
_MASK64 = (1 << 64) - 1


class GenerationFailedError(GraphError):
    """Could not sample a connected graph within the retry budget."""


class Lcg:
    """The fixed 64-bit linear congruential generator described above."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state * _LCG_MUL + _LCG_ADD) & _MASK64
        return self.state

    def rand_below(self, k: int) -> int:
        return (self.next_u64() >> 33) % k

    def rand_unit(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)


def _fresh_distances(g: Graph, source: int) -> list[int]:
    """Frontier-set BFS, written independently of graphs.bfs_distances."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def oracle_w_sizes(g: Graph, u: int, v: int) -> tuple[int, int]:
    """(|W(u,v)|, |W(v,u)|) from two fresh BFS passes."""
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    du = _fresh_distances(g, u)
    dv = _fresh_distances(g, v)
    if -1 in du:
        raise DisconnectedError("graph is disconnected")
    closer_u = sum(1 for x in range(g.n) if du[x] < dv[x])
    closer_v = sum(1 for x in range(g.n) if dv[x] < du[x])
    return closer_u, closer_v


def oracle_edge_sdb(g: Graph, u: int, v: int) -> bool:
    """Definition-literal edge check: every D^i_{i-1} / D^{i-1}_i pair has equal size."""
    cells = oracle_d_cells(g, u, v)
    top = max((max(i, j) for i, j in cells), default=0)
    for i in range(1, top + 1):
        if len(cells.get((i, i - 1), ())) != len(cells.get((i - 1, i), ())):
            return False
    return True


def oracle_d_cells(g: Graph, u: int, v: int) -> dict[tuple[int, int], set[int]]:
    """All nonempty D^i_j(u, v) as literal vertex sets."""
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    du = _fresh_distances(g, u)
    dv = _fresh_distances(g, v)
    if -1 in du:
        raise DisconnectedError("graph is disconnected")
    cells: dict[tuple[int, int], set[int]] = {}
    for x in range(g.n):
        cells.setdefault((du[x], dv[x]), set()).add(x)
    return cells


def oracle_classify(g: Graph) -> tuple[bool, bool, int | None, bool]:
    """(is_db, is_ndb, gamma, is_sdb) evaluated straight from the definitions."""
    if g.n < 2:
        raise TooSmallError("classification needs at least 2 vertices")
    if -1 in _fresh_distances(g, 0):
        raise DisconnectedError("graph is disconnected")
    db = True
    sdb = True
    sizes = set()
    for u, v in g.edges():
        wu, wv = oracle_w_sizes(g, u, v)
        if wu != wv:
            db = False
        else:
            sizes.add(wu)
        if sdb and not oracle_edge_sdb(g, u, v):
            sdb = False
    ndb = db and len(sizes) == 1
    gamma = sizes.pop() if ndb else None
    return db, ndb, gamma, sdb


def random_connected_graph(n: int, edge_prob: float, seed: int, max_tries: int = 1000) -> Graph:
    """Erdos-Renyi-style sample conditioned on connectivity.

    Deterministic for a fixed (n, edge_prob, seed); raises
    `GenerationFailedError` once the retry budget is exhausted.
    """
    if n < 2:
        raise TooSmallError("random graphs need n >= 2")
    if not (0 < edge_prob <= 1):
        raise GraphError(f"edge_prob must be in (0, 1], got {edge_prob}")
    rng = Lcg(seed)
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.rand_unit() < edge_prob
        ]
        g = build_graph(n, edges)
        if -1 not in _fresh_distances(g, 0):
            return g
    raise GenerationFailedError(
        f"no connected sample for n={n}, p={edge_prob} in {max_tries} tries"
    )


def differential_cases(count: int, max_n: int, seed: int):
    """Yield `count` seeded random connected graphs with 2..max_n vertices.

    Case i draws its size and edge probability from a master generator,
    then samples with a derived seed, so the corpus is reproducible from
    (count, max_n, seed) alone.
    """
    if count < 1 or max_n < 2:
        raise GraphError("need count >= 1 and max_n >= 2")
    master = Lcg(seed)
    for i in range(count):
        n = 2 + master.rand_below(max_n - 1)
        p = (35 + master.rand_below(56)) / 100.0  # 0.35 .. 0.90
        yield i, random_connected_graph(n, p, master.next_u64())


def run_differential(count: int, max_n: int, seed: int) -> list[dict]:
    """Compare `balance.full_report` against `oracle_classify` on the seeded corpus.

    Returns one dict per disagreement (empty list = all good); each dict
    carries the case index and both classifications.
    """
    disagreements = []
    for i, g in differential_cases(count, max_n, seed):
        rep = balance.full_report(g)
        fast = (rep.is_db, rep.is_ndb, rep.gamma, rep.is_sdb)
        slow = oracle_classify(g)
        if fast != slow:
            disagreements.append(
                {
                    "index": i,
                    "n": g.n,
                    "m": g.m,
                    "edges": list(g.edges()),
                    "fast": fast,
                    "oracle": slow,
                }
            )
    return disagreements
