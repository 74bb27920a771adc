import pytest

from cssep.errors import InputError
from cssep.graph import Graph, VertexSet, complement
from cssep.separators import FamilyOptions, full_family
from cssep.testbed import check_separation, enumerate_cliques, enumerate_stable_sets, gen_random
from cssep.witness import (
    extend_to_maximal,
    find_separator,
    minimal_neighbor_cover,
    minimal_z_cover,
)


def c5():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def vs(n, verts):
    return VertexSet.from_vertices(n, verts)


class TestExtendToMaximal:
    def test_triangle_clique(self):
        g = Graph.complete(3)
        assert extend_to_maximal(g, vs(3, [0]), "clique").members == (0, 1, 2)

    def test_edgeless_stable(self):
        g = Graph.empty(3)
        assert extend_to_maximal(g, vs(3, [1]), "stable").members == (0, 1, 2)

    def test_c5_greedy_adds_smallest_index(self):
        assert extend_to_maximal(c5(), vs(5, [0]), "clique").members == (0, 1)

    def test_already_maximal_is_fixed_point(self):
        g = c5()
        m = extend_to_maximal(g, vs(5, [0]), "clique")
        assert extend_to_maximal(g, m, "clique") == m

    def test_kind_precondition(self):
        g = Graph.complete(3)
        with pytest.raises(InputError):
            extend_to_maximal(g, vs(3, [0, 1]), "stable")
        with pytest.raises(InputError):
            extend_to_maximal(Graph.empty(3), vs(3, [0]), "ring")

    def test_universe_mismatch(self):
        with pytest.raises(InputError):
            extend_to_maximal(c5(), vs(4, [0]), "clique")


class TestMinimalNeighborCover:
    def test_triangle_with_two_covers(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4)])
        s1p, k1p, pairs = minimal_neighbor_cover(g, vs(5, [0, 1, 2]), vs(5, [3, 4]))
        assert s1p.members == (3, 4)
        assert k1p.members == (0, 2)
        assert pairs == ((0, 3), (2, 4))

    def test_single_edge(self):
        g = Graph.from_edges(2, [(0, 1)])
        s1p, k1p, pairs = minimal_neighbor_cover(g, vs(2, [0]), vs(2, [1]))
        assert s1p.members == (1,)
        assert k1p.members == (0,)
        assert pairs == ((0, 1),)

    def test_complete_stable_vertex_gets_first_partner(self):
        g = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
        s1p, k1p, pairs = minimal_neighbor_cover(g, vs(3, [0, 1]), vs(3, [2]))
        assert s1p.members == (2,)
        assert k1p.members == (0,)
        assert pairs == ((0, 2),)

    def test_cover_is_inclusion_minimal(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4)])
        k = vs(5, [0, 1, 2])
        s1p, _, _ = minimal_neighbor_cover(g, k, vs(5, [3, 4]))
        for drop in s1p:
            rest = s1p.mask & ~(1 << drop)
            assert any(g.adj[v] & rest == 0 for v in k)

    def test_uncovered_clique_vertex_rejected(self):
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(InputError) as exc:
            minimal_neighbor_cover(g, vs(3, [2]), vs(3, [1]))
        assert "no neighbour" in str(exc.value)


class TestMinimalZCover:
    def test_vacuous_when_sc_misses_z(self):
        g = Graph.from_edges(3, [(0, 1)])
        s2, w, pairs = minimal_z_cover(g, vs(3, [0]), vs(3, [2]))
        assert s2.members == () and w.members == () and pairs == ()

    def test_both_vertices_needed(self):
        g = Graph.from_edges(4, [(0, 2), (1, 3)])
        s2, w, pairs = minimal_z_cover(g, vs(4, [0, 1]), vs(4, [2, 3]))
        assert s2.members == (0, 1)
        assert w.members == (2, 3)
        assert pairs == ((0, 2), (1, 3))

    def test_tie_break_keeps_lowest_index(self):
        g = Graph.from_edges(3, [(0, 2), (1, 2)])
        s2, w, pairs = minimal_z_cover(g, vs(3, [0, 1]), vs(3, [2]))
        assert s2.members == (0,)
        assert w.members == (2,)
        assert pairs == ((0, 2),)

    def test_overlap_rejected(self):
        g = Graph.empty(3)
        with pytest.raises(InputError):
            minimal_z_cover(g, vs(3, [0]), vs(3, [0, 1]))


class TestFindSeparator:
    def test_single_edge_intersection_branch(self):
        g = Graph.from_edges(2, [(0, 1)])
        rep = find_separator(g, 1, 1, vs(2, [0]), vs(2, [1]))
        assert rep.branch == "intersection-P1"
        assert rep.trace.v == 1
        assert rep.trace.k_prime.members == (0, 1)
        assert rep.trace.s_prime.members == (1,)
        assert rep.partition.x_side.members == (0,)
        assert rep.partition.y_side.members == (1,)

    def test_triangle_plus_edge_intersection_in_k(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
        rep = find_separator(g, 2, 2, vs(5, [0, 1, 2]), vs(5, [4]))
        assert rep.branch == "intersection-P1"
        assert rep.trace.v == 0
        assert rep.partition.x_side.members == (0, 1, 2)

    def test_small_cover_branch_needs_p_three(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
        rep = find_separator(g, 3, 3, vs(4, [0, 1]), vs(4, [2, 3]))
        assert rep.branch == "small-cover-P1"
        assert rep.trace.s1_prime.members == (2, 3)
        assert rep.trace.k1_prime.members == (0, 1)
        assert rep.partition.x_side.members == (0, 1)

    def test_c5_triple_branch_full_trace(self):
        rep = find_separator(c5(), 2, 2, vs(5, [0, 1]), vs(5, [2, 4]))
        assert rep.branch == "triple-P2"
        t = rep.trace
        assert t.k_prime.members == (0, 1)
        assert t.s_prime.members == (2, 4)
        assert t.s1_prime.members == (2, 4)
        assert t.k1_prime.members == (0, 1)
        assert t.s1.members == (2, 4)
        assert t.k1.members == (0, 1)
        assert t.z.members == ()
        assert t.sc.members == ()
        assert t.s2.members == ()
        assert t.w.members == ()
        assert rep.partition.x_side.members == (0, 1)
        assert rep.in_class and rep.s2_within_bound

    def test_returned_partition_in_default_family(self):
        g = c5()
        fam = full_family(g, 2, 2)
        rep = find_separator(g, 2, 2, vs(5, [0, 1]), vs(5, [2, 4]))
        assert rep.partition in fam

    def test_paper_mode_changes_r_and_stays_in_matching_family(self):
        g = c5()
        rep = find_separator(g, 2, 2, vs(5, [0, 1]), vs(5, [2, 4]), ramsey_mode="paper")
        assert rep.r == 4**2
        fam = full_family(g, 2, 2, FamilyOptions(ramsey_mode="paper"))
        assert rep.partition in fam

    def test_accepts_plain_iterables(self):
        g = Graph.from_edges(2, [(0, 1)])
        rep = find_separator(g, 1, 1, (0,), [1])
        assert rep.partition.x_side.members == (0,)

    def test_determinism(self):
        g = gen_random(8, 0.5, seed=3)
        a = find_separator(g, 2, 2, vs(8, []), vs(8, []))
        b = find_separator(g, 2, 2, vs(8, []), vs(8, []))
        assert a == b

    def test_outside_class_still_separates(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (2, 3)])
        rep = find_separator(g, 1, 1, vs(4, [0, 1]), vs(4, [3]))
        assert rep.in_class is False
        assert check_separation(rep.partition, vs(4, [0, 1]), vs(4, [3]))

    def test_input_validation(self):
        g = c5()
        with pytest.raises(InputError):
            find_separator(g, 0, 1, vs(5, [0]), vs(5, [2]))
        with pytest.raises(InputError):
            find_separator(g, 1, 1, vs(5, [0, 2]), vs(5, [3]))
        with pytest.raises(InputError):
            find_separator(g, 1, 1, vs(5, [0]), vs(5, [1, 2]))
        with pytest.raises(InputError):
            find_separator(g, 1, 1, vs(5, [0]), vs(5, [0]))

    def test_every_pair_on_small_class_members(self):
        for seed in range(4):
            g = gen_random(7, 0.4, seed=seed)
            fam = None
            for p, q in [(1, 1), (2, 2)]:
                from cssep.patterns import is_in_class

                if not is_in_class(g, p, q):
                    continue
                fam = full_family(g, p, q)
                cliques = enumerate_cliques(g)
                stables = enumerate_stable_sets(g)
                for k in cliques:
                    for s in stables:
                        if k.mask & s.mask:
                            continue
                        rep = find_separator(g, p, q, k, s)
                        assert check_separation(rep.partition, k, s)
                        assert rep.partition in fam
