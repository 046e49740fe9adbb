"""Shared hypothesis strategies and helpers for the test suite."""

from hypothesis import strategies as st

from distbal.graphs import Graph, build_graph


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random connected graph: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    tree = [(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)]
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.sets(st.sampled_from(pool)) if pool else st.just(set()))
    return build_graph(n, tree + list(extra))


@st.composite
def any_graphs(draw, min_n=1, max_n=6):
    """Random simple graph, not necessarily connected."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pool))) if pool else set()
    return build_graph(n, list(edges))


def assert_valid_graph(g: Graph):
    """The structural invariants every Graph must satisfy."""
    assert len(g.adj) == g.n
    total = 0
    for v, nbrs in enumerate(g.adj):
        assert list(nbrs) == sorted(set(nbrs)), f"vertex {v}: list not strictly sorted"
        assert v not in nbrs, f"vertex {v}: self-loop"
        for w in nbrs:
            assert 0 <= w < g.n
            assert v in g.adj[w], f"edge ({v}, {w}) not symmetric"
        total += len(nbrs)
    assert total == 2 * g.m
