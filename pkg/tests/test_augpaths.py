from itertools import combinations

import pytest

from streammatch import (
    AugPathSet,
    Matching,
    WingContext,
    apply_augmenting_paths,
    both_wing_paths,
    max_matching_bruteforce,
    paths_from_connector,
    select_disjoint,
    three_aug_from_wings,
)

# Test ids: A side 0..19, B side 20..39. Matched edges are (i, 20 + i).


def ctx_of(m0_pairs, p1_edges=(), q1_edges=()):
    m0 = Matching([(i, 20 + i) for i in m0_pairs])
    return WingContext.build(m0, Matching(p1_edges), Matching(q1_edges))


class TestWingContext:
    def test_mp_mq_are_touched_edges(self):
        # p1 wing on edge 0, q1 wing on edge 1
        ctx = ctx_of([0, 1, 2], p1_edges=[(0, 30)], q1_edges=[(10, 21)])
        assert ctx.mp == {(0, 20)}
        assert ctx.mq == {(1, 21)}

    def test_wing_lookup(self):
        ctx = ctx_of([0], p1_edges=[(0, 30)], q1_edges=[(10, 20)])
        assert ctx.upper_wing((0, 20)) == (0, 30)
        assert ctx.lower_wing((0, 20)) == (10, 20)

    def test_membership_helpers(self):
        ctx = ctx_of([0, 1], p1_edges=[(0, 30)], q1_edges=[(10, 21)])
        assert ctx.in_b_mp(20) and not ctx.in_b_mp(21)
        assert ctx.in_a_mq(1) and not ctx.in_a_mq(0)


class TestThreeAugFromWings:
    def test_unique_construction_p_side(self):
        ctx = ctx_of([0], p1_edges=[(0, 30)])
        out = three_aug_from_wings(ctx, Matching([(10, 20)]), side="p")
        assert len(out) == 1
        assert out.paths[0].edges == ((0, 30), (0, 20), (10, 20))

    def test_unique_construction_q_side(self):
        ctx = ctx_of([0], q1_edges=[(10, 20)])
        out = three_aug_from_wings(ctx, Matching([(0, 30)]), side="q")
        assert out.paths[0].edges == ((0, 30), (0, 20), (10, 20))

    def test_empty_second_wings(self):
        ctx = ctx_of([0], p1_edges=[(0, 30)])
        assert len(three_aug_from_wings(ctx, Matching(), side="p")) == 0

    def test_contract_violation_raises(self):
        ctx = ctx_of([0, 1], p1_edges=[(0, 30)])
        # lands on B(m0) but not B(mp)
        with pytest.raises(ValueError):
            three_aug_from_wings(ctx, Matching([(10, 21)]), side="p")

    def test_three_parallel_structures_grow_by_three(self):
        m0_pairs = [0, 1, 2]
        ctx = ctx_of(
            m0_pairs,
            p1_edges=[(0, 30), (1, 31), (2, 32)],
        )
        p2 = Matching([(10, 20), (11, 21), (12, 22)])
        out = three_aug_from_wings(ctx, p2, side="p")
        assert len(out) == 3
        grown = apply_augmenting_paths(ctx.m0, out)
        assert len(grown) == len(ctx.m0) + 3
        # the full instance really admits a matching of that size
        instance = [e for p in out for e in p.edges]
        assert max_matching_bruteforce(instance) == 6


class TestPathsFromConnector:
    def test_degenerate_connector_gives_three_path(self):
        # connector (0, 20) is the matched edge itself: both wings present
        ctx = ctx_of([0], p1_edges=[(0, 30)], q1_edges=[(10, 20)])
        out = paths_from_connector(ctx, Matching([(0, 20)]))
        assert len(out) == 1
        assert out.paths[0].edges == ((0, 30), (0, 20), (10, 20))

    def test_distinct_edges_give_five_path(self):
        # e0 = (0, 20) with upper wing (0, 30); e1 = (1, 21) with lower wing
        # (11, 21); connector (1, 20)
        ctx = ctx_of([0, 1], p1_edges=[(0, 30)], q1_edges=[(11, 21)])
        out = paths_from_connector(ctx, Matching([(1, 20)]))
        assert len(out) == 1
        assert out.paths[0].edges == ((0, 30), (0, 20), (1, 20), (1, 21), (11, 21))

    def test_two_disjoint_connectors_grow_by_two(self):
        ctx = ctx_of(
            [0, 1, 2, 3],
            p1_edges=[(0, 30), (2, 32)],
            q1_edges=[(11, 21), (13, 23)],
        )
        c = Matching([(1, 20), (3, 22)])
        out = paths_from_connector(ctx, c)
        assert len(out) == 2
        grown = apply_augmenting_paths(ctx.m0, out)
        assert len(grown) == len(ctx.m0) + 2
        instance = [e for p in out for e in p.edges]  # 12 vertices
        assert len({v for e in instance for v in e}) == 12
        assert max_matching_bruteforce(instance) == 6

    def test_endpoint_outside_context_raises(self):
        ctx = ctx_of([0, 1], p1_edges=[(0, 30)], q1_edges=[(11, 21)])
        with pytest.raises(ValueError):
            paths_from_connector(ctx, Matching([(0, 21)]))

    def test_double_duty_edge_skips_later_connector(self):
        # edge (1, 21) has both wings; connector (1, 20) uses it as the
        # mq-side edge, connector (2, 21) would reuse it as the mp-side edge
        ctx = ctx_of(
            [0, 1, 2],
            p1_edges=[(0, 30), (1, 31)],
            q1_edges=[(11, 21), (12, 22)],
        )
        c = Matching([(1, 20), (2, 21)])
        out = paths_from_connector(ctx, c)
        assert len(out) == 1  # the corner case: second path would overlap
        assert out.paths[0].edges == ((0, 30), (0, 20), (1, 20), (1, 21), (11, 21))


class TestBothWingPaths:
    def test_emits_one_path_per_double_winged_edge(self):
        ctx = ctx_of([0, 1], p1_edges=[(0, 30), (1, 31)], q1_edges=[(10, 20)])
        out = both_wing_paths(ctx)
        assert len(out) == 1
        assert out.paths[0].edges == ((0, 30), (0, 20), (10, 20))

    def test_no_double_winged_edges(self):
        ctx = ctx_of([0, 1], p1_edges=[(0, 30)], q1_edges=[(11, 21)])
        assert len(both_wing_paths(ctx)) == 0


def exhaustive_best_disjoint(paths):
    """Independent oracle: largest disjoint subset by explicit enumeration."""
    best = 0
    for k in range(len(paths), 0, -1):
        for combo in combinations(paths, k):
            seen = set()
            ok = True
            for p in combo:
                vs = p.vertices()
                if seen & vs:
                    ok = False
                    break
                seen |= vs
            if ok:
                return k
    return best


class TestSelectDisjoint:
    def test_disjoint_families_union(self):
        ctx = ctx_of([0, 1], p1_edges=[(0, 30)], q1_edges=[(11, 21)])
        p_side = three_aug_from_wings(ctx, Matching([(10, 20)]), side="p")
        q_side = three_aug_from_wings(ctx, Matching([(1, 31)]), side="q")
        out = select_disjoint([p_side, q_side])
        assert len(out) == 2

    def test_priority_keeps_earlier_family(self):
        ctx = ctx_of([0], p1_edges=[(0, 30)], q1_edges=[(10, 20)])
        both = both_wing_paths(ctx)                       # uses edge (0, 20)
        p_side = three_aug_from_wings(ctx, Matching([(11, 20)]), side="p")
        out = select_disjoint([both, p_side])
        assert out.paths == both.paths

    def test_overlap_instance_matches_exhaustive_oracle(self):
        # Rich overlap: edge 0 reachable through a connector, both wings,
        # and a P-side second wing; edges 2 and 5 P-side; 3 Q-side; 4 both.
        ctx = ctx_of(
            [0, 1, 2, 3, 4, 5],
            p1_edges=[(0, 30), (2, 32), (4, 34), (5, 35)],
            q1_edges=[(10, 20), (11, 21), (13, 23), (14, 24)],
        )
        connector = paths_from_connector(ctx, Matching([(1, 20)]))
        both = both_wing_paths(ctx)
        p_side = three_aug_from_wings(
            ctx, Matching([(15, 20), (12, 22), (16, 25)]), side="p"
        )
        q_side = three_aug_from_wings(ctx, Matching([(3, 33)]), side="q")
        families = [connector, both, p_side, q_side]
        out = select_disjoint(families)
        all_paths = [p for fam in families for p in fam]
        assert len(all_paths) <= 8
        seen = set()
        for p in out:
            assert not (seen & p.vertices())
            seen |= p.vertices()
        assert len(out) >= max(len(f) for f in families)
        assert len(out) <= exhaustive_best_disjoint(all_paths)

    def test_output_applies_cleanly(self):
        ctx = ctx_of(
            [0, 1, 2],
            p1_edges=[(0, 30), (1, 31)],
            q1_edges=[(11, 21), (12, 22)],
        )
        families = [
            paths_from_connector(ctx, Matching([(1, 20)])),
            both_wing_paths(ctx),
            three_aug_from_wings(ctx, Matching([(15, 20)]), side="p"),
            three_aug_from_wings(ctx, Matching([(2, 33)]), side="q"),
        ]
        out = select_disjoint(families)
        grown = apply_augmenting_paths(ctx.m0, out)
        assert len(grown) == len(ctx.m0) + len(out)
