import random
from itertools import combinations

from rainbow_cliques import ColoredGraph


def random_colored_graph(rng: random.Random, n: int | None = None) -> ColoredGraph:
    """Seeded random edge-colored graph on up to 12 vertices: independent
    edges with probability ~0.6, colors drawn from a palette of random size."""
    if n is None:
        n = rng.randint(3, 12)
    palette = rng.randint(1, max(2, n * (n - 1) // 2))
    colors = {}
    for u, v in combinations(range(1, n + 1), 2):
        if rng.random() < 0.6:
            colors[(u, v)] = rng.randint(1, palette)
    if not colors:
        colors[(1, 2)] = 1
    return ColoredGraph(n, colors)


def random_complete_colored_graph(rng: random.Random, n: int, palette: int) -> ColoredGraph:
    colors = {
        (u, v): rng.randint(1, palette)
        for u, v in combinations(range(1, n + 1), 2)
    }
    return ColoredGraph(n, colors)
