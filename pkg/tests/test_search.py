import random
from itertools import combinations

import pytest

from rainbow_cliques import (
    ColoredGraph,
    count_rainbow_cliques,
    count_rainbow_cliques_naive,
    counterexample_n7,
    delete_vertex,
    extremal,
    find_monochromatic_cycle,
    find_monochromatic_path,
    find_properly_colored_c4,
    find_rainbow_clique,
    find_rainbow_complete_bipartite,
    find_rainbow_turan,
    k6_variant,
    lexicographic,
    perturb_fresh_colors,
    validate_witness,
)
from conftest import random_colored_graph, random_complete_colored_graph


def rainbow_complete(n: int) -> ColoredGraph:
    colors = {}
    for i, e in enumerate(combinations(range(1, n + 1), 2)):
        colors[e] = i + 1
    return ColoredGraph(n, colors)


def mono_complete(n: int) -> ColoredGraph:
    return ColoredGraph(n, {e: 1 for e in combinations(range(1, n + 1), 2)})


def k6_minus_11_colors() -> ColoredGraph:
    """K6 minus edge (1,2); rainbow K_{2,4} between {1,2} and {3..6} (colors
    1..8), the K4 on {3..6} colored lexicographically with 3 new colors."""
    colors = {}
    c = 1
    for u in (1, 2):
        for v in (3, 4, 5, 6):
            colors[(u, v)] = c
            c += 1
    for u, v in combinations((3, 4, 5, 6), 2):
        colors[(u, v)] = 8 + (u - 2)
    return ColoredGraph(6, colors)


class TestFindRainbowClique:
    def test_lexicographic_k6_no_triangle(self):
        assert find_rainbow_clique(lexicographic(6), 3) is None

    def test_extremal_8_4_no_k4(self):
        assert find_rainbow_clique(extremal(8, 4), 4) is None
        # exhaustive cross-check over all 70 4-subsets
        assert count_rainbow_cliques_naive(extremal(8, 4), 4) == 0

    def test_rainbow_k4(self):
        w = find_rainbow_clique(rainbow_complete(4), 4)
        assert w is not None and w.vertices == (1, 2, 3, 4)

    def test_lexicographic_least_witness(self):
        w = find_rainbow_clique(rainbow_complete(6), 3)
        assert w.vertices == (1, 2, 3)

    def test_degenerate_sizes(self):
        g = rainbow_complete(3)
        assert find_rainbow_clique(g, 1).vertices == (1,)
        assert find_rainbow_clique(g, 2).vertices == (1, 2)
        assert count_rainbow_cliques(g, 1) == 3
        assert count_rainbow_cliques(g, 2) == 3

    def test_k_larger_than_n(self):
        assert find_rainbow_clique(rainbow_complete(3), 4) is None

    def test_bad_k(self):
        with pytest.raises(ValueError):
            find_rainbow_clique(rainbow_complete(3), 0)


class TestCountRainbowCliques:
    def test_rainbow_k5_triangles(self):
        assert count_rainbow_cliques(rainbow_complete(5), 3) == 10

    def test_extremal_8_4_triangles(self):
        g = extremal(8, 4)
        assert count_rainbow_cliques(g, 3) == 48
        assert count_rainbow_cliques_naive(g, 3) == 48

    def test_extremal_8_4_no_k4(self):
        assert count_rainbow_cliques(extremal(8, 4), 4) == 0

    def test_matches_naive_oracle(self):
        rng = random.Random(23)
        for _ in range(100):
            g = random_colored_graph(rng, rng.randint(3, 9))
            for k in (3, 4):
                assert count_rainbow_cliques(g, k) == count_rainbow_cliques_naive(g, k)

    def test_find_iff_count_positive(self):
        rng = random.Random(29)
        for _ in range(100):
            g = random_colored_graph(rng, rng.randint(3, 9))
            for k in (3, 4):
                present = find_rainbow_clique(g, k) is not None
                assert present == (count_rainbow_cliques(g, k) > 0)

    def test_monotone_under_deletion(self):
        rng = random.Random(31)
        for _ in range(50):
            g = random_colored_graph(rng, rng.randint(4, 9))
            v = rng.randint(1, g.n)
            assert count_rainbow_cliques(delete_vertex(g, v), 3) <= count_rainbow_cliques(g, 3)

    def test_existence_theorem_on_random_suite(self):
        # whenever e+c meets the existence threshold, a rainbow K_k exists
        from rainbow_cliques import thresholds
        rng = random.Random(37)
        checked = 0
        for _ in range(1000):
            n = rng.randint(6, 12)
            g = random_complete_colored_graph(rng, n, rng.randint(2, n * (n - 1) // 2))
            for k in (4, 5):
                if g.e + g.c >= thresholds(n, k)[1]:
                    checked += 1
                    assert find_rainbow_clique(g, k) is not None
        assert checked > 0


class TestRainbowBipartite:
    def test_rainbow_k6(self):
        w = find_rainbow_complete_bipartite(rainbow_complete(6), 2, 4)
        assert w is not None and validate_witness(rainbow_complete(6), w)

    def test_mono_k6_absent(self):
        assert find_rainbow_complete_bipartite(mono_complete(6), 2, 4) is None

    def test_k6_minus_lemma_instance(self):
        g = k6_minus_11_colors()
        assert g.e == 14 and g.c == 11
        assert find_rainbow_clique(g, 4) is None  # lemma hypothesis
        w = find_rainbow_complete_bipartite(g, 2, 4)
        assert w is not None and validate_witness(g, w)

    def test_bad_sizes(self):
        with pytest.raises(ValueError):
            find_rainbow_complete_bipartite(rainbow_complete(4), 0, 2)


class TestRainbowTuran:
    def test_extremal_8_4(self):
        hit = find_rainbow_turan(extremal(8, 4), 2)
        assert hit is not None
        part, w = hit
        assert part.sizes == (4, 4)
        assert validate_witness(extremal(8, 4), w)

    def test_mono_c6_variant_absent(self):
        assert find_rainbow_turan(k6_variant("mono-c6"), 2) is None

    def test_extremal_9_5(self):
        hit = find_rainbow_turan(extremal(9, 5), 3)
        assert hit is not None and hit[0].sizes == (3, 3, 3)

    def test_bad_r(self):
        with pytest.raises(ValueError):
            find_rainbow_turan(rainbow_complete(4), 5)


class TestMonochromaticCycle:
    def test_mono_k3(self):
        g = ColoredGraph(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})
        w = find_monochromatic_cycle(g, 3)
        assert w is not None and validate_witness(g, w)

    def test_mono_c6_variant(self):
        g = k6_variant("mono-c6")
        w = find_monochromatic_cycle(g, 6)
        assert w is not None and validate_witness(g, w)

    def test_lexicographic_k5_no_mono_triangle(self):
        assert find_monochromatic_cycle(lexicographic(5), 3) is None

    def test_bad_length(self):
        with pytest.raises(ValueError):
            find_monochromatic_cycle(lexicographic(5), 2)


class TestMonochromaticPath:
    def test_mono_c4(self):
        g = ColoredGraph(4, {(1, 2): 1, (2, 3): 1, (3, 4): 1, (1, 4): 1})
        w = find_monochromatic_path(g, 4)
        assert w is not None and validate_witness(g, w)

    def test_lexicographic_k6_no_p4(self):
        # each color class is a star; stars contain no 4-vertex path
        assert find_monochromatic_path(lexicographic(6), 4) is None

    def test_rainbow_k4_no_p3(self):
        assert find_monochromatic_path(rainbow_complete(4), 3) is None

    def test_bad_size(self):
        with pytest.raises(ValueError):
            find_monochromatic_path(rainbow_complete(4), 1)


class TestProperC4:
    def test_rainbow_k4(self):
        w = find_properly_colored_c4(rainbow_complete(4))
        assert w is not None and validate_witness(rainbow_complete(4), w)

    def test_mono_k4_absent(self):
        assert find_properly_colored_c4(mono_complete(4)) is None

    def test_threshold_falsification_search(self):
        # e+c >= C(8,2)+8+1 = 37 always yields a properly colored C4
        from math import comb
        target = comb(8, 2) + 8 + 1
        for seed in range(1000):
            g = perturb_fresh_colors(mono_complete(8), target, seed)
            assert g.e + g.c >= target
            assert find_properly_colored_c4(g) is not None


class TestWitnessValidation:
    def test_all_finders_validate(self):
        rng = random.Random(41)
        for _ in range(100):
            g = random_colored_graph(rng, rng.randint(4, 9))
            for k in (3, 4):
                w = find_rainbow_clique(g, k)
                if w is not None:
                    assert validate_witness(g, w)
            w = find_properly_colored_c4(g)
            if w is not None:
                assert validate_witness(g, w)
            w = find_monochromatic_cycle(g, 3)
            if w is not None:
                assert validate_witness(g, w)
            w = find_monochromatic_path(g, 3)
            if w is not None:
                assert validate_witness(g, w)

    def test_wrong_color_rejected(self):
        g = rainbow_complete(4)
        w = find_rainbow_clique(g, 3)
        from rainbow_cliques import Witness
        bad = Witness(w.kind, w.vertices, tuple((u, v, c + 99) for u, v, c in w.edges))
        assert not validate_witness(g, bad)
