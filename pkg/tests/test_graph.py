import random

import pytest

from rainbow_cliques import (
    ColoredGraph,
    ECGParseError,
    counts,
    delete_vertex,
    format_ecg,
    induced_subgraph,
    is_complete,
    lexicographic,
    extremal,
    parse_ecg,
    saturation,
)
from conftest import random_colored_graph


def rainbow_k4() -> ColoredGraph:
    edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    return ColoredGraph(4, {e: i + 1 for i, e in enumerate(edges)})


class TestParse:
    def test_smallest_rainbow_triangle(self):
        g = parse_ecg("3 3\n1 2 1\n1 3 2\n2 3 3")
        assert counts(g) == (3, 3)
        assert g.color_of(2, 3) == 3

    def test_single_edge(self):
        g = parse_ecg("2 1\n1 2 5")
        assert counts(g) == (1, 1)

    def test_duplicate_edge_names_line(self):
        with pytest.raises(ECGParseError, match="line 3"):
            parse_ecg("3 2\n1 2 1\n1 2 2")

    def test_self_loop(self):
        with pytest.raises(ECGParseError, match="self-loop"):
            parse_ecg("3 1\n2 2 1")

    def test_out_of_range(self):
        with pytest.raises(ECGParseError, match="out of range"):
            parse_ecg("3 1\n1 4 1")

    def test_nonpositive_color(self):
        with pytest.raises(ECGParseError, match="color"):
            parse_ecg("3 1\n1 2 0")

    def test_endpoints_out_of_order(self):
        with pytest.raises(ECGParseError, match="order"):
            parse_ecg("3 1\n2 1 1")

    def test_malformed_line(self):
        with pytest.raises(ECGParseError, match="line 2"):
            parse_ecg("3 1\n1 2")

    def test_edge_count_mismatch(self):
        with pytest.raises(ECGParseError):
            parse_ecg("3 2\n1 2 1")

    def test_comments_blanks_crlf(self):
        g = parse_ecg("# a comment\r\n\r\n3 2\r\n1 2 1\r\n\r\n# another\r\n2 3 4\r\n")
        assert counts(g) == (2, 2)

    def test_empty_document(self):
        with pytest.raises(ECGParseError):
            parse_ecg("# nothing here\n")


class TestFormat:
    def test_writer_sorted_lf(self):
        g = ColoredGraph(3, {(2, 3): 7, (1, 2): 1})
        assert format_ecg(g) == "3 2\n1 2 1\n2 3 7\n"

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_colored_graph(rng)
            assert parse_ecg(format_ecg(g)) == g


class TestCounts:
    def test_rainbow_k4(self):
        assert counts(rainbow_k4()) == (6, 6)

    def test_extremal_anchors(self):
        assert counts(extremal(8, 4)) == (28, 17)
        assert counts(extremal(9, 5)) == (36, 28)


class TestInducedSubgraph:
    def test_identity(self):
        g = rainbow_k4()
        assert induced_subgraph(g, range(1, 5)) == g

    def test_rainbow_k4_to_k3(self):
        sub = induced_subgraph(rainbow_k4(), [1, 2, 4])
        assert sub.n == 3 and sub.e == 3
        assert len(set(sub.colors.values())) == 3

    def test_lexicographic_delete_last(self):
        sub = delete_vertex(lexicographic(5), 5)
        assert sub == lexicographic(4)
        for (u, v), c in sub.colors.items():
            assert c == min(u, v)

    def test_extremal_part_is_monochromatic(self):
        # first part of extremal(8,4) is vertices 1..4
        sub = induced_subgraph(extremal(8, 4), [1, 2, 3, 4])
        assert counts(sub) == (6, 1)

    def test_counts_never_increase(self):
        rng = random.Random(11)
        for _ in range(50):
            g = random_colored_graph(rng)
            keep = [v for v in range(1, g.n + 1) if rng.random() < 0.7] or [1]
            sub = induced_subgraph(g, keep)
            assert sub.e <= g.e and sub.c <= g.c

    def test_empty_keep(self):
        with pytest.raises(ValueError):
            induced_subgraph(rainbow_k4(), [])

    def test_out_of_range_keep(self):
        with pytest.raises(ValueError):
            induced_subgraph(rainbow_k4(), [1, 5])


class TestSaturation:
    def test_rainbow_k4(self):
        prof = saturation(rainbow_k4())
        assert set(prof.ds.values()) == {3}
        assert prof.tallies == (0, 0, 6)

    def test_monochromatic_k3(self):
        g = ColoredGraph(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})
        prof = saturation(g)
        assert set(prof.ds.values()) == {0}
        assert prof.tallies == (1, 0, 0)

    def test_extremal_8_4(self):
        prof = saturation(extremal(8, 4))
        assert set(prof.ds.values()) == {4}
        assert prof.tallies == (1, 0, 16)

    def test_identities_random_suite(self):
        rng = random.Random(3)
        for _ in range(200):
            g = random_colored_graph(rng)
            prof = saturation(g)
            c0, c1, c2 = prof.tallies
            assert c0 + c1 + c2 == g.c
            assert 2 * c2 + c1 == prof.sum_ds
            assert prof.sum_ds <= 2 * g.c
            for v in range(1, g.n + 1):
                assert prof.ds[v] <= g.degree(v)

    def test_deletion_identity(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_colored_graph(rng)
            prof = saturation(g)
            v = rng.randint(1, g.n)
            if g.n == 1:
                continue
            assert delete_vertex(g, v).c == g.c - prof.ds[v]


class TestIsComplete:
    def test_k4(self):
        assert is_complete(rainbow_k4())

    def test_single_edge_on_three(self):
        assert not is_complete(ColoredGraph(3, {(1, 2): 1}))
