"""Product operators and their preservation laws."""

import pytest
from hypothesis import given, settings

from distbal.balance import full_report, is_db, is_sdb
from distbal.graphs import bfs_distances, is_bipartite, is_regular
from distbal.families import (
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_hypercube,
    gen_path,
    gen_petersen,
    gen_tricirc30,
)
from distbal.products import EmptyFactorError, NoEdgesError, cartesian, lexicographic, line_graph
from distbal.graphs import Graph

from conftest import any_graphs, connected_graphs


class TestCartesian:
    def test_square(self):
        g = cartesian(gen_complete(2), gen_complete(2))
        assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]

    def test_triangular_prism(self):
        g = cartesian(gen_cycle(3), gen_complete(2))
        assert (g.n, g.m) == (6, 9)
        assert is_regular(g) == 3

    def test_empty_factor(self):
        with pytest.raises(EmptyFactorError):
            cartesian(gen_complete(2), Graph(n=0, adj=()))

    @given(connected_graphs(max_n=5), connected_graphs(max_n=5))
    @settings(max_examples=40)
    def test_distance_additivity(self, a, b):
        prod = cartesian(a, b)
        ra = [bfs_distances(a, s) for s in range(a.n)]
        rb = [bfs_distances(b, s) for s in range(b.n)]
        for g1 in range(a.n):
            for h1 in range(b.n):
                row = bfs_distances(prod, g1 * b.n + h1)
                for g2 in range(a.n):
                    for h2 in range(b.n):
                        assert row[g2 * b.n + h2] == ra[g1][g2] + rb[h1][h2]

    @given(connected_graphs(max_n=4), connected_graphs(max_n=4))
    @settings(max_examples=30)
    def test_commutative_up_to_reports(self, a, b):
        ra = full_report(cartesian(a, b))
        rb = full_report(cartesian(b, a))
        assert (ra.is_db, ra.is_ndb, ra.gamma, ra.is_sdb) == (
            rb.is_db, rb.is_ndb, rb.gamma, rb.is_sdb
        )
        assert (ra.diameter, ra.bipartite) == (rb.diameter, rb.bipartite)


class TestLexicographic:
    def test_identity_blowup(self):
        g = gen_petersen()
        assert sorted(lexicographic(g, gen_empty(1)).edges()) == sorted(g.edges())

    def test_cycle_with_empty_pairs(self):
        g = lexicographic(gen_cycle(4), gen_empty(2))
        assert (g.n, g.m) == (8, 16)
        assert is_db(g)[0]

    def test_path_with_edge_not_db(self):
        assert not is_db(lexicographic(gen_path(3), gen_complete(2)))[0]

    def test_empty_factor(self):
        with pytest.raises(EmptyFactorError):
            lexicographic(Graph(n=0, adj=()), gen_complete(2))


class TestLineGraph:
    def test_path(self):
        assert sorted(line_graph(gen_path(3)).edges()) == [(0, 1)]

    def test_triangle_self_dual(self):
        assert sorted(line_graph(gen_complete(3)).edges()) == sorted(
            gen_complete(3).edges()
        )

    def test_hypercube(self):
        g = line_graph(gen_hypercube(3))
        rep = full_report(g)
        assert (g.n, rep.regular_valency, rep.diameter, rep.gamma) == (12, 4, 3, 4)

    def test_no_edges(self):
        with pytest.raises(NoEdgesError):
            line_graph(gen_empty(2))


# Small NDB graphs for the compatible-product law: (graph, gamma).
_NDB_POOL = [
    (gen_complete(2), 1),
    (gen_complete(3), 1),
    (gen_complete(4), 1),
    (gen_cycle(4), 2),
    (gen_cycle(5), 2),
    (gen_cycle(6), 3),
    (gen_petersen(), 3),
    (gen_hypercube(3), 4),
]


class TestPreservationLaws:
    def test_compatible_ndb_products(self):
        hits = 0
        for ga, gamma_a in _NDB_POOL:
            for gb, gamma_b in _NDB_POOL:
                if gb.n * gamma_a != ga.n * gamma_b or ga.n * gb.n > 120:
                    continue
                rep = full_report(cartesian(ga, gb))
                assert rep.is_ndb
                assert rep.gamma == gb.n * gamma_a
                hits += 1
        assert hits >= 8  # the law must actually get exercised

    def test_tricirc_square_is_ndb_not_sdb(self):
        big = cartesian(gen_tricirc30(), gen_tricirc30())
        rep = full_report(big)
        assert rep.gamma == 360
        assert not rep.bipartite
        assert not rep.is_sdb

    @given(connected_graphs(max_n=5), connected_graphs(max_n=5))
    @settings(max_examples=60)
    def test_cartesian_sdb_iff_both_sdb(self, a, b):
        both = is_sdb(a)[0] and is_sdb(b)[0]
        assert is_sdb(cartesian(a, b))[0] == both

    @given(connected_graphs(max_n=5), connected_graphs(max_n=5))
    @settings(max_examples=60)
    def test_cartesian_bipartite_iff_both_bipartite(self, a, b):
        both = is_bipartite(a)[0] and is_bipartite(b)[0]
        assert is_bipartite(cartesian(a, b))[0] == both

    @given(connected_graphs(min_n=2, max_n=4), any_graphs(min_n=1, max_n=4))
    @settings(max_examples=60)
    def test_lexicographic_db_iff_base_db_and_fiber_regular(self, a, b):
        prod = lexicographic(a, b)
        expected = is_db(a)[0] and is_regular(b) is not None
        assert is_db(prod)[0] == expected

    @given(connected_graphs(min_n=2, max_n=4), any_graphs(min_n=1, max_n=4))
    @settings(max_examples=60)
    def test_lexicographic_sdb_iff_base_sdb_and_fiber_regular(self, a, b):
        prod = lexicographic(a, b)
        expected = is_sdb(a)[0] and is_regular(b) is not None
        assert is_sdb(prod)[0] == expected
