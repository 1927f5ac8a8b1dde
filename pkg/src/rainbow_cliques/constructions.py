"""Generators for the explicit colorings exhibited in the rainbow-clique
extremal analysis: the extremal pattern, the lexicographic coloring, the two
K6 dichotomy colorings, the 7-vertex tightness counterexample, and seeded
fresh-color perturbations for supersaturation experiments.

Fresh colors are always allocated as max-existing-id + 1, 2, ... so id
collisions are impossible and outputs are reproducible.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import ColoredGraph
from .turan import turan_partition


def extremal(n: int, k: int) -> ColoredGraph:
    """Complete K_n with t_{n,k-2} pairwise distinct colors on the cross
    edges of a balanced (k-2)-partition and one single shared color on every
    intra-part edge.  Counts: e = C(n,2), c = t_{n,k-2} + 1.

    k = 3 is allowed as the degenerate single-part pattern (monochromatic
    K_n), used as the base graph of supersaturation experiments.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got k={k}")
    if n < k - 2 or n < 2:
        raise ValueError(f"need n >= max(2, k-2), got n={n}, k={k}")
    sizes = turan_partition(n, k - 2).sizes
    part_of = {}
    v = 1
    for idx, s in enumerate(sizes):
        for _ in range(s):
            part_of[v] = idx
            v += 1
    colors = {}
    next_color = 1
    for u, w in combinations(range(1, n + 1), 2):
        if part_of[u] != part_of[w]:
            colors[(u, w)] = next_color
            next_color += 1
    shared = next_color  # the one intra-part color, largest id
    for u, w in combinations(range(1, n + 1), 2):
        if part_of[u] == part_of[w]:
            colors[(u, w)] = shared
    return ColoredGraph(n, colors)


def lexicographic(n: int) -> ColoredGraph:
    """Complete K_n with color(u,v) = min(u,v); counts (C(n,2), n-1)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    colors = {(u, v): u for u, v in combinations(range(1, n + 1), 2)}
    return ColoredGraph(n, colors)


def k6_variant(which: str) -> ColoredGraph:
    """K6 with 10 colors and no rainbow K4, one of two shapes:

    * ``turan-pair``: rainbow T_{6,2} on parts {1,2,3} | {4,5,6} (9 distinct
      cross colors) plus both intra-part triangles in one shared 10th color.
    * ``mono-c6``: the 6-cycle 1-2-3-4-5-6-1 in one color plus the remaining
      9 edges in 9 fresh distinct colors.
    """
    if which == "turan-pair":
        colors = {}
        next_color = 1
        for u in (1, 2, 3):
            for v in (4, 5, 6):
                colors[(u, v)] = next_color
                next_color += 1
        for u, v in [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]:
            colors[(u, v)] = 10
        return ColoredGraph(6, colors)
    if which == "mono-c6":
        cycle = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]
        colors = {e: 1 for e in cycle}
        next_color = 2
        for u, v in combinations(range(1, 7), 2):
            if (u, v) not in colors:
                colors[(u, v)] = next_color
                next_color += 1
        return ColoredGraph(6, colors)
    raise ValueError(f"unknown K6 variant {which!r}")


def counterexample_n7() -> ColoredGraph:
    """The 7-vertex, e+c = 34 graph with no rainbow K4 that is not complete:
    a lexicographic K5 on vertices 1..5 plus two nonadjacent vertices 6 and 7,
    each joined to all of 1..5 with five fresh pairwise-distinct colors."""
    colors = {(u, v): u for u, v in combinations(range(1, 6), 2)}
    next_color = 5  # lexicographic K5 uses colors 1..4
    for w in (6, 7):
        for u in range(1, 6):
            colors[(u, w)] = next_color
            next_color += 1
    return ColoredGraph(7, colors)


def perturb_fresh_colors(g: ColoredGraph, target_ec: int, seed: int) -> ColoredGraph:
    """Recolor uniformly random (seeded) edges of monochromatic classes with
    fresh distinct colors until e(G)+c(G) >= target_ec.  The edge set never
    changes and the result is deterministic for a fixed seed."""
    from .graph import is_complete

    if not is_complete(g):
        raise ValueError("perturbation requires a complete host graph")
    max_ec = 2 * g.e
    if target_ec > max_ec:
        raise ValueError(f"target e+c={target_ec} unreachable, maximum is {max_ec}")
    colors = dict(g.colors)
    ec = g.e + len(set(colors.values()))
    if ec >= target_ec:
        return g
    rng = random.Random(seed)
    next_color = max(colors.values()) + 1
    class_size: dict[int, int] = {}
    for c in colors.values():
        class_size[c] = class_size.get(c, 0) + 1
    while ec < target_ec:
        candidates = sorted(e for e, c in colors.items() if class_size[c] >= 2)
        edge = candidates[rng.randrange(len(candidates))]
        old = colors[edge]
        class_size[old] -= 1
        colors[edge] = next_color
        class_size[next_color] = 1
        next_color += 1
        ec += 1
    return ColoredGraph(g.n, colors)
