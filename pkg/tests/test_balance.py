"""Balance recognition: W-sets, distance cells, DB/NDB/SDB classification."""

import pytest
from hypothesis import given

from distbal.balance import (
    conjecture_check,
    edge_partition,
    full_report,
    is_db,
    is_edge_balanced,
    is_edge_sdb,
    is_ndb,
    is_sdb,
    total_distance,
    w_sets,
    weighted_distance,
)
from distbal.graphs import (
    DisconnectedError,
    NotAnEdgeError,
    TooSmallError,
    bfs_distances,
    build_graph,
    sphere_profile,
)
from distbal.families import (
    gen_c6kl,
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_gamma_k,
    gen_hypercube,
    gen_path,
    gen_petersen,
    gen_prism,
    gen_tricirc30,
)
from distbal.oracle import oracle_d_cells

from conftest import connected_graphs


def _tri_idx(pairs):
    """(layer, j) coordinates of the 30-vertex tricirculant to indices."""
    return {10 * layer + j for layer, j in pairs}


class TestWSets:
    def test_tricirc_flagship_edge(self):
        g = gen_tricirc30()
        closer_u, closer_v = w_sets(g, 0, 11)  # edge ((0,0), (1,1))
        assert closer_u == _tri_idx(
            [(0, 0), (2, 1), (2, 4), (1, 4), (1, 0), (2, 0),
             (2, 5), (2, 7), (1, 6), (2, 3), (2, 9), (2, 6)]
        )
        assert closer_v == _tri_idx(
            [(1, 1), (1, 7), (1, 5), (0, 7), (1, 3), (0, 4),
             (1, 9), (0, 6), (0, 1), (0, 2), (0, 5), (0, 8)]
        )

    def test_tricirc_ring_edge(self):
        g = gen_tricirc30()
        closer_u, closer_v = w_sets(g, 11, 15)  # edge ((1,1), (1,5))
        assert closer_u == _tri_idx(
            [(1, 1), (1, 7), (0, 0), (0, 7), (0, 3), (2, 4),
             (2, 1), (1, 4), (0, 6), (1, 0), (2, 0), (2, 7)]
        )
        assert closer_v == _tri_idx(
            [(1, 5), (0, 4), (1, 9), (0, 1), (2, 2), (1, 2),
             (0, 5), (2, 5), (0, 8), (1, 6), (2, 9), (2, 6)]
        )

    def test_four_cycle(self):
        assert w_sets(gen_cycle(4), 0, 1) == ({0, 3}, {1, 2})

    def test_c6_asymmetric_blocks(self):
        # u in a size-k block, v in a size-l block: sizes 2l+k and 2k+l
        for k, l in [(1, 2), (2, 3), (3, 4)]:
            g = gen_c6kl(k, l)
            closer_u, closer_v = w_sets(g, 0, k)
            assert (len(closer_u), len(closer_v)) == (2 * l + k, 2 * k + l)

    def test_not_an_edge(self):
        with pytest.raises(NotAnEdgeError):
            w_sets(gen_cycle(4), 0, 2)

    def test_disconnected(self):
        g = build_graph(3, [(0, 1)])
        with pytest.raises(DisconnectedError):
            w_sets(g, 0, 1)

    @given(connected_graphs())
    def test_disjoint_and_strict(self, g):
        rows = [bfs_distances(g, s) for s in range(g.n)]
        for u, v in g.edges():
            closer_u, closer_v = w_sets(g, u, v)
            assert not closer_u & closer_v
            for x in range(g.n):
                if x not in closer_u and x not in closer_v:
                    assert rows[u][x] == rows[v][x]


class TestEdgePartition:
    def test_single_edge_graph(self):
        part = edge_partition(gen_complete(2), 0, 1)
        assert part.up == (1,)
        assert part.down == (1,)
        assert part.level == (0,)

    def test_tricirc_unbalanced_cells(self):
        g = gen_tricirc30()
        part = edge_partition(g, 11, 0)  # u=(1,1), v=(0,0)
        assert part.up_at(3) == 5
        assert part.down_at(3) == 4
        assert part.up_at(1) == part.down_at(1) == 1

    @pytest.mark.parametrize("k", [5, 6, 7])
    def test_gamma_k_cycle_edge(self, k):
        g = gen_gamma_k(k)
        part = edge_partition(g, 0, 1)
        expected = (1, 4, 12, 7) + (6,) * (k - 4)
        assert part.down == expected
        assert part.up == expected
        assert part.level == (0,) * (k - 1) + (6,)

    @pytest.mark.parametrize("k", [5, 6])
    def test_gamma_k_cross_edge(self, k):
        # cycle-to-hub edge: balanced but with asymmetric cells
        g = gen_gamma_k(k)
        part = edge_partition(g, 0, 8 * k + 4)
        assert part.down == (1, 5, 11, 7) + (6,) * (k - 4)
        assert part.up == (1, 4, 11, 8) + (6,) * (k - 4)
        assert sum(part.down) == sum(part.up) == 6 * k

    @given(connected_graphs())
    def test_cells_partition_everything(self, g):
        rows = [bfs_distances(g, s) for s in range(g.n)]
        for u, v in g.edges():
            part = edge_partition(g, u, v)
            assert sum(part.down) + sum(part.up) + sum(part.level) == g.n
            closer_u, closer_v = w_sets(g, u, v)
            assert sum(part.up) == len(closer_u)
            assert sum(part.down) == len(closer_v)

    @given(connected_graphs())
    def test_bipartite_graphs_have_no_level_cells(self, g):
        from distbal.graphs import is_bipartite

        flag, _ = is_bipartite(g)
        if flag:
            for u, v in g.edges():
                assert not any(edge_partition(g, u, v).level)


class TestEdgePredicates:
    def test_gamma_k_cross_edge_balanced_not_sdb(self):
        g = gen_gamma_k(5)
        hub = 8 * 5 + 4
        assert is_edge_balanced(g, 0, hub)
        assert not is_edge_sdb(g, 0, hub)

    def test_path_end_edge(self):
        assert not is_edge_balanced(gen_path(3), 0, 1)

    def test_c6_edges_unbalanced(self):
        g = gen_c6kl(2, 3)
        assert not is_edge_balanced(g, 0, 2)

    def test_cycle_edges_sdb(self):
        for n in (4, 5, 8):
            g = gen_cycle(n)
            assert all(is_edge_sdb(g, u, v) for u, v in g.edges())

    def test_tricirc_edge_not_sdb(self):
        assert not is_edge_sdb(gen_tricirc30(), 11, 0)

    @given(connected_graphs())
    def test_profile_shortcut_matches_cell_definition(self, g):
        # sphere-profile equality across an edge == every D-cell pair balanced
        for u, v in g.edges():
            cells = oracle_d_cells(g, u, v)
            top = max(max(i, j) for i, j in cells)
            by_cells = all(
                len(cells.get((i, i - 1), ())) == len(cells.get((i - 1, i), ()))
                for i in range(1, top + 1)
            )
            assert is_edge_sdb(g, u, v) == by_cells


class TestGraphClassifiers:
    def test_triangular_prism_db(self):
        ok, witness = is_db(gen_prism(3))
        assert ok and witness is None

    def test_path_witness(self):
        ok, witness = is_db(gen_path(3))
        assert not ok
        assert witness == (0, 1)

    def test_c6_not_db(self):
        assert not is_db(gen_c6kl(2, 3))[0]

    def test_ndb_values(self):
        assert is_ndb(gen_tricirc30()) == 12
        assert is_ndb(gen_petersen()) == 3
        assert is_ndb(gen_prism(3)) is None
        for k in (5, 6):
            assert is_ndb(gen_gamma_k(k)) == 6 * k

    def test_single_edge_gamma(self):
        assert is_ndb(gen_complete(2)) == 1

    def test_sdb(self):
        assert is_sdb(gen_petersen()) == (True, None)
        ok, witness = is_sdb(gen_tricirc30())
        assert not ok
        (edge, level) = witness
        assert edge == (0, 11)
        assert is_sdb(gen_c6kl(2, 2))[0]
        assert not is_sdb(gen_c6kl(2, 3))[0]

    @given(connected_graphs())
    def test_implication_chain(self, g):
        db, _ = is_db(g)
        gamma = is_ndb(g)
        sdb, _ = is_sdb(g)
        if sdb:
            assert db
        if gamma is not None:
            assert db

    @given(connected_graphs())
    def test_self_median_equivalence(self, g):
        totals = {total_distance(g, v) for v in range(g.n)}
        assert is_db(g)[0] == (len(totals) == 1)


class TestWeightedDistance:
    def test_self_is_zero(self):
        assert weighted_distance(gen_cycle(5), 2, {2}) == 0

    def test_triangle(self):
        assert weighted_distance(gen_complete(3), 0, {1, 2}) == 2

    @pytest.mark.parametrize("k,l", [(1, 2), (2, 3), (3, 4), (2, 2)])
    def test_c6_identity_value(self, k, l):
        g = gen_c6kl(k, l)
        for u, v in g.edges():
            closer_u, closer_v = w_sets(g, u, v)
            assert weighted_distance(g, u, closer_u) == 2 * k + 2 * l - 1
            assert weighted_distance(g, v, closer_v) == 2 * k + 2 * l - 1

    def test_total_distance(self):
        assert total_distance(gen_complete(6), 3) == 5
        assert total_distance(gen_cycle(5), 0) == 6
        assert [total_distance(gen_path(3), v) for v in range(3)] == [3, 2, 3]


class TestConjectureCheck:
    def test_c6_counterexample_family(self):
        # not SDB, yet the weighted identity holds on every edge
        for k, l in [(1, 2), (2, 3)]:
            g = gen_c6kl(k, l)
            assert not is_sdb(g)[0]
            assert conjecture_check(g) == (True, None)

    def test_petersen_holds(self):
        assert conjecture_check(gen_petersen()) == (True, None)

    def test_path_fails(self):
        ok, witness = conjecture_check(gen_path(3))
        assert not ok
        assert witness == (0, 1)

    @given(connected_graphs())
    def test_sdb_implies_identity(self, g):
        if is_sdb(g)[0]:
            assert conjecture_check(g)[0]


class TestFullReport:
    def test_tricirc(self):
        rep = full_report(gen_tricirc30())
        assert rep.is_db and rep.is_ndb and rep.gamma == 12
        assert not rep.is_sdb
        assert rep.diameter == 4
        assert not rep.bipartite
        assert rep.regular_valency == 4
        assert rep.db_witness is None
        assert rep.sdb_witness == ((0, 11), 2)
        assert (rep.n, rep.m) == (30, 60)

    def test_hypercube(self):
        rep = full_report(gen_hypercube(3))
        assert rep.is_ndb and rep.gamma == 4
        assert rep.is_sdb
        assert rep.diameter == 3
        assert rep.bipartite
        assert rep.regular_valency == 3
        assert rep.conjecture_holds

    def test_c6_counterexample(self):
        rep = full_report(gen_c6kl(2, 3))
        assert not rep.is_db
        assert not rep.is_sdb
        assert rep.conjecture_holds
        assert rep.db_witness is not None
        assert rep.sdb_witness is not None

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            full_report(build_graph(1, []))

    def test_disconnected(self):
        with pytest.raises(DisconnectedError):
            full_report(gen_empty(2))

    @given(connected_graphs())
    def test_matches_piecewise_functions(self, g):
        rep = full_report(g)
        assert rep.is_db == is_db(g)[0]
        assert rep.gamma == is_ndb(g)
        assert rep.is_sdb == is_sdb(g)[0]
        assert rep.conjecture_holds == conjecture_check(g)[0]
        assert (rep.db_witness is None) == rep.is_db
        assert (rep.sdb_witness is None) == rep.is_sdb
        assert (rep.gamma is not None) == rep.is_ndb
        if rep.is_ndb:
            assert rep.diameter <= rep.gamma <= rep.n - 1
        if rep.is_sdb:
            assert rep.is_db
        if rep.is_ndb:
            assert rep.is_db

    @given(connected_graphs())
    def test_sphere_profiles_reused_consistently(self, g):
        rep = full_report(g)
        if rep.sdb_witness is not None:
            (u, v), level = rep.sdb_witness
            pu = sphere_profile(g, u).sizes
            pv = sphere_profile(g, v).sizes
            assert (pu + (0,) * len(pv))[level] != (pv + (0,) * len(pu))[level]
