import math

import pytest

from cssep.errors import InputError, ResourceLimitError
from cssep.graph import Graph, VertexSet, complement, neighbors
from cssep.separators import (
    FamilyOptions,
    TripleX,
    a_x,
    complement_family,
    faithful_triple_count,
    full_family,
    p1_family,
    p2_family,
    structural_triple_ok,
)


def c5():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def p4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def vs(n, verts):
    return VertexSet.from_vertices(n, verts)


class TestTripleX:
    def test_size_mismatch_rejected(self):
        with pytest.raises(InputError):
            TripleX(vs(4, [0]), vs(4, [1, 2]), vs(4, []))

    def test_empty_k1_rejected(self):
        with pytest.raises(InputError):
            TripleX(vs(4, []), vs(4, []), vs(4, [1]))

    def test_overlap_rejected(self):
        with pytest.raises(InputError):
            TripleX(vs(4, [0]), vs(4, [0]), vs(4, []))
        with pytest.raises(InputError):
            TripleX(vs(4, [0]), vs(4, [1]), vs(4, [1]))

    def test_universe_mismatch_rejected(self):
        with pytest.raises(InputError):
            TripleX(vs(4, [0]), vs(5, [1]), vs(4, []))

    def test_empty_s2_allowed(self):
        t = TripleX(vs(4, [0]), vs(4, [1]), vs(4, []))
        assert t.n == 4


class TestStructuralTriple:
    def test_c5_matched_edge(self):
        g = c5()
        assert structural_triple_ok(g, TripleX(vs(5, [0, 1]), vs(5, [4, 2]), vs(5, [])))

    def test_unmatched_pair_fails(self):
        g = c5()
        assert not structural_triple_ok(g, TripleX(vs(5, [0]), vs(5, [2]), vs(5, [])))

    def test_s2_must_be_complete_to_k1(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        # K1={0}, S1={1} matched; S2={3} sees nothing of K1.
        assert not structural_triple_ok(g, TripleX(vs(4, [0]), vs(4, [1]), vs(4, [3])))


class TestP1Family:
    def test_edgeless_n5_p2(self):
        fam = p1_family(Graph.empty(5), 2)
        assert len(fam) == 6
        sides = [p.x_side.members for p in fam]
        assert sides[0] == ()
        assert all(len(s) <= 1 for s in sides)

    def test_any_graph_p1_is_trivial_partition(self):
        for g in (c5(), p4(), Graph.complete(4)):
            fam = p1_family(g, 1)
            assert [p.x_side.members for p in fam] == [()]

    def test_c5_p2_has_eleven(self):
        fam = p1_family(c5(), 2)
        assert len(fam) == 11
        sizes = sorted(len(p.x_side) for p in fam)
        assert sizes == [0] + [2] * 5 + [3] * 5

    def test_singleton_extension_at_p1(self):
        fam = p1_family(c5(), 1, include_singletons=True)
        assert len(fam) == 11
        assert fam.stats_dict()["p1_singleton_extra"] == 10

    def test_pre_dedup_formula(self):
        for g in (c5(), Graph.empty(5), Graph.complete(5)):
            for p in (1, 2, 3):
                fam = p1_family(g, p)
                stats = fam.stats_dict()
                expected = 2 * sum(math.comb(g.n, i) for i in range(p))
                assert stats["p1_pre_dedup"] == expected
                assert stats["p1_pre_dedup"] <= stats["p1_bound_2np"] == 2 * g.n**p

    def test_budget_guard(self):
        with pytest.raises(ResourceLimitError) as exc:
            p1_family(Graph.empty(30), 4, budget=100)
        assert exc.value.count > 100

    def test_invalid_p(self):
        with pytest.raises(InputError):
            p1_family(c5(), 0)


class TestAX:
    def test_triangle_with_pendant(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
        part = a_x(g, TripleX(vs(4, [0]), vs(4, [3]), vs(4, [])))
        assert part.x_side.members == (0,)

    def test_p4_middle(self):
        part = a_x(p4(), TripleX(vs(4, [1]), vs(4, [0]), vs(4, [2])))
        assert part.x_side.members == (1,)

    def test_star_center(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        part = a_x(g, TripleX(vs(4, [0]), vs(4, [1]), vs(4, [])))
        assert part.x_side.members == (0,)

    def test_universe_mismatch_rejected(self):
        with pytest.raises(InputError):
            a_x(p4(), TripleX(vs(5, [0]), vs(5, [1]), vs(5, [])))

    def test_matched_triples_avoid_s1_and_z(self):
        g = c5()
        t = TripleX(vs(5, [0, 1]), vs(5, [4, 2]), vs(5, []))
        part = a_x(g, t)
        z = [v for v in range(5) if g.adj[v] & (t.k1.mask | t.s1.mask) == 0]
        assert part.x_side.mask & t.s1.mask == 0
        assert all(not part.x_side.mask >> v & 1 for v in z)


class TestP2Family:
    def test_p4_faithful_triple_count(self):
        fam = p2_family(p4(), 1, 1, mode="faithful")
        stats = fam.stats_dict()
        assert stats["p2_triples_faithful"] == 12
        assert stats["p2_triples_enumerated"] == 12
        assert faithful_triple_count(4, 1, 1, True) == 12

    def test_empty_range_when_empty_s2_disallowed_at_r1(self):
        for g in (p4(), c5()):
            fam = p2_family(g, 1, 1, allow_empty_s2=False)
            assert len(fam) == 0
            assert fam.stats_dict()["p2_triples_faithful"] == 0

    def test_pruned_partitions_subset_of_faithful(self):
        from cssep.testbed import gen_random

        graphs = [c5(), p4(), gen_random(6, 0.5, seed=0), gen_random(6, 0.3, seed=1)]
        for g in graphs:
            for p, q in [(1, 1), (2, 2)]:
                pruned = p2_family(g, p, q, mode="pruned")
                faithful = p2_family(g, p, q, mode="faithful")
                assert set(pruned.x_masks()) <= set(faithful.x_masks())
                st_p = pruned.stats_dict()
                st_f = faithful.stats_dict()
                assert st_p["p2_triples_enumerated"] <= st_f["p2_triples_enumerated"]

    def test_budget_error_names_count(self):
        with pytest.raises(ResourceLimitError) as exc:
            p2_family(p4(), 1, 1, mode="faithful", budget=3)
        assert exc.value.count == 12
        assert "12" in str(exc.value)

    def test_paper_ramsey_mode_changes_r(self):
        fam = p2_family(p4(), 1, 1, ramsey_mode="paper")
        assert fam.params.r == 4
        assert p2_family(p4(), 1, 1).params.r == 1

    def test_bound_stat(self):
        fam = p2_family(c5(), 2, 2)
        stats = fam.stats_dict()
        assert stats["p2_bound_paper"] == 5 ** (2 * 2 + 4**2)
        assert stats["p2_triples_faithful"] < stats["p2_bound_paper"]

    def test_invalid_parameters(self):
        with pytest.raises(InputError):
            p2_family(c5(), 0, 1)
        with pytest.raises(InputError):
            p2_family(c5(), 1, 1, mode="other")


class TestFullFamily:
    def test_edgeless_strict_family_is_trivial_partition_plus_p2(self):
        g = Graph.empty(4)
        fam = full_family(g, 1, 1, FamilyOptions(p1_singletons=False))
        assert [p.x_side.members for p in fam] == [()]
        # P2 triples exist but every A_X is empty on an edgeless graph.
        assert fam.stats_dict()["p2_triples_enumerated"] == 0

    def test_stats_account_for_both_stages(self):
        fam = full_family(c5(), 2, 2)
        st = fam.stats_dict()
        assert st["pre_dedup_total"] == (
            st["p1_pre_dedup"] + st["p1_singleton_extra"] + st["p2_triples_enumerated"]
        )
        assert len(fam) == st["post_dedup"] <= st["pre_dedup_total"]

    def test_no_duplicate_sides_and_canonical_order(self):
        fam = full_family(c5(), 2, 2)
        sides = [p.x_side.members for p in fam]
        assert len(set(sides)) == len(sides)
        assert sides == sorted(sides)

    def test_provenance_regenerates_every_partition(self):
        g = c5()
        fam = full_family(g, 2, 2)
        for part, prov in zip(fam.partitions, fam.provenance):
            if prov.kind in ("p1-open", "p1-closed"):
                x = VertexSet.from_vertices(g.n, prov.sets[0])
                mode = "open" if prov.kind == "p1-open" else "closed"
                assert neighbors(g, x, mode).mask == part.x_side.mask
            else:
                assert prov.kind == "p2"
                k1, s1, s2 = (VertexSet.from_vertices(g.n, s) for s in prov.sets)
                regen = a_x(g, TripleX(k1, s1, s2))
                assert regen.x_side.mask == part.x_side.mask

    def test_membership_queries(self):
        fam = full_family(c5(), 2, 2)
        part = fam.partitions[0]
        assert part in fam
        assert part.x_side in fam
        assert fam.contains_mask(part.x_side.mask)
        assert not fam.contains_mask(0b11111)

    def test_budget_propagates(self):
        with pytest.raises(ResourceLimitError):
            full_family(c5(), 1, 1, FamilyOptions(budget=5, family_mode="faithful"))

    def test_options_validation(self):
        with pytest.raises(InputError):
            FamilyOptions(ramsey_mode="loose")
        with pytest.raises(InputError):
            FamilyOptions(family_mode="quick")
        with pytest.raises(InputError):
            FamilyOptions(budget=0)


class TestComplementFamily:
    def test_sides_swap(self):
        g = Graph.from_edges(3, [(0, 1), (0, 2)])
        fam = full_family(g, 1, 1)
        swapped = complement_family(fam)
        assert sorted(p.x_side.members for p in swapped) == sorted(
            p.y_side.members for p in fam
        )
        assert all(prov.kind == "complement" for prov in swapped.provenance)

    def test_involution_on_partitions(self):
        fam = full_family(c5(), 2, 2)
        back = complement_family(complement_family(fam))
        assert [p.x_side.mask for p in back] == [p.x_side.mask for p in fam]
        assert back.params.complemented is False
        assert complement_family(fam).params.complemented is True

    def test_swapped_family_lives_on_complement_graph(self):
        from cssep.testbed import verify_family_covers

        g = c5()
        swapped = complement_family(full_family(g, 2, 2))
        rep = verify_family_covers(complement(g), swapped, check_witness=False)
        assert rep.covered
