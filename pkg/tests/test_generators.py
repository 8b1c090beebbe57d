import logging

import pytest

from streammatch import (
    gen_konrad_hard,
    gen_planted_bipartite,
    gen_random_general,
    load_edgelist,
    max_matching_bipartite,
    max_matching_bruteforce,
    max_matching_general,
    save_edgelist,
)
from streammatch.generators import EdgeListError


class TestKonradHard:
    def test_n4_edge_set(self):
        g = gen_konrad_hard(4)
        assert g.n == 8 and g.m == 8
        identity = {(i, 4 + i) for i in range(4)}
        block = {(i, 4 + j) for i in (0, 1) for j in (2, 3)}
        assert set(g.edges) == identity | block

    def test_n2_has_three_edges(self):
        assert gen_konrad_hard(2).m == 3

    def test_edge_count_formula(self):
        for n in (2, 4, 10, 50):
            assert gen_konrad_hard(n).m == n + (n // 2) ** 2

    def test_perfect_matching_exists(self):
        for n in (2, 6, 12):
            g = gen_konrad_hard(n)
            assert len(max_matching_bipartite(g.edges, g.bipartition)) == n

    def test_rejects_odd_or_tiny(self):
        with pytest.raises(ValueError):
            gen_konrad_hard(5)
        with pytest.raises(ValueError):
            gen_konrad_hard(0)


class TestPlantedBipartite:
    def test_p_zero_is_perfect_matching_only(self):
        g = gen_planted_bipartite(7, 0.0, seed=1)
        assert set(g.edges) == {(i, 7 + i) for i in range(7)}

    def test_p_one_is_complete(self):
        g = gen_planted_bipartite(5, 1.0, seed=1)
        assert g.m == 25

    def test_deterministic_and_planted_mu(self):
        g1 = gen_planted_bipartite(40, 0.05, seed=9)
        g2 = gen_planted_bipartite(40, 0.05, seed=9)
        assert g1.edges == g2.edges
        assert len(max_matching_bipartite(g1.edges, g1.bipartition)) == 40

    def test_different_seeds_differ(self):
        assert gen_planted_bipartite(30, 0.2, 0).edges != gen_planted_bipartite(30, 0.2, 1).edges


class TestRandomGeneral:
    def test_p_zero_empty(self):
        assert gen_random_general(10, 0.0, seed=3).m == 0

    def test_triangle(self):
        g = gen_random_general(3, 1.0, seed=0)
        assert g.m == 3
        assert len(max_matching_general(g.edges)) == 1

    def test_mu_matches_bruteforce(self):
        g = gen_random_general(14, 0.3, seed=77)
        assert len(max_matching_general(g.edges)) == max_matching_bruteforce(g.edges)

    def test_deterministic(self):
        assert gen_random_general(20, 0.1, 5).edges == gen_random_general(20, 0.1, 5).edges


class TestEdgeListFiles:
    def test_documented_example(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("4 2 bipartite\n2\n0 2\n1 3\n")
        g = load_edgelist(f)
        assert g.n == 4 and g.m == 2
        assert g.bipartition is not None
        assert set(g.edges) == {(0, 2), (1, 3)}

    def test_comments_and_blank_lines(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("# a graph\n3 1 general\n\n0 1  # an edge\n")
        assert load_edgelist(f).m == 1

    def test_empty_edge_section(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("5 0 general\n")
        g = load_edgelist(f)
        assert g.n == 5 and g.m == 0

    def test_non_crossing_edge_rejected_with_line(self, tmp_path):
        f = tmp_path / "g.txt"
        # odd cycle cannot cross the declared split; (1,2) is the offender
        f.write_text("3 3 bipartite\n1\n0 1\n1 2\n0 2\n")
        with pytest.raises(EdgeListError, match=":4:"):
            load_edgelist(f)

    def test_parse_error_carries_line_number(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("3 1 general\n0 x\n")
        with pytest.raises(EdgeListError, match=":2:"):
            load_edgelist(f)

    def test_wrong_edge_count_rejected(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("3 2 general\n0 1\n")
        with pytest.raises(EdgeListError, match="declares 2"):
            load_edgelist(f)

    def test_bad_header_rejected(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("3 1 directed\n0 1\n")
        with pytest.raises(EdgeListError, match="header"):
            load_edgelist(f)

    def test_duplicates_warned_and_dropped(self, tmp_path, caplog):
        f = tmp_path / "g.txt"
        f.write_text("3 3 general\n0 1\n1 0\n1 2\n")
        with caplog.at_level(logging.WARNING):
            g = load_edgelist(f)
        assert g.m == 2 and g.dropped_duplicates == 1
        assert any("duplicate" in rec.message for rec in caplog.records)

    def test_round_trip(self, tmp_path):
        g = gen_planted_bipartite(9, 0.3, seed=4)
        f = tmp_path / "g.txt"
        save_edgelist(g, f)
        g2 = load_edgelist(f)
        assert g2.n == g.n and set(g2.edges) == set(g.edges)
        assert g2.bipartition is not None

    def test_round_trip_general(self, tmp_path):
        g = gen_random_general(12, 0.3, seed=4)
        f = tmp_path / "g.txt"
        save_edgelist(g, f)
        assert set(load_edgelist(f).edges) == set(g.edges)

    def test_self_loop_rejected(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("3 1 general\n1 1\n")
        with pytest.raises(EdgeListError, match="self-loop"):
            load_edgelist(f)
