"""Desk-scale exhaustive and randomized verification of the rainbow-clique
lemmas, using the same reductions the statements themselves rely on to keep
search spaces tractable.

Each verifier returns a :class:`VerificationReport`; an empty counterexample
list means success.  Reports serialize to a line-oriented text format
(``LEMMA <id> SPACE <count> CE <count> TIME <ms>``) followed by the
counterexamples as embedded ECG blocks.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, log

import numpy as np

from .constructions import extremal, perturb_fresh_colors
from .graph import ColoredGraph, format_ecg, parse_ecg, saturation
from .partitions import iter_all_partitions, stirling2
from .search import (
    count_rainbow_cliques,
    find_monochromatic_cycle,
    find_rainbow_clique,
    find_rainbow_turan,
)
from .turan import thresholds, turan_number


@dataclass
class VerificationReport:
    lemma_id: str
    space_size: int
    counterexamples: list[ColoredGraph] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def format_report(report: VerificationReport) -> str:
    ms = int(report.elapsed * 1000)
    lines = [
        f"LEMMA {report.lemma_id} SPACE {report.space_size} "
        f"CE {len(report.counterexamples)} TIME {ms}"
    ]
    for g in report.counterexamples:
        lines.append(format_ecg(g).rstrip("\n"))
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> VerificationReport:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("LEMMA "):
        raise ValueError("report must start with a LEMMA line")
    fields = lines[0].split()
    lemma_id = fields[1]
    space = int(fields[fields.index("SPACE") + 1])
    ce_count = int(fields[fields.index("CE") + 1])
    ms = int(fields[fields.index("TIME") + 1])
    ces = []
    pos = 1
    for _ in range(ce_count):
        while pos < len(lines) and not lines[pos].strip():
            pos += 1
        header = lines[pos].split()
        m = int(header[1])
        block = lines[pos:pos + m + 1]
        ces.append(parse_ecg("\n".join(block)))
        pos += m + 1
    return VerificationReport(lemma_id, space, ces, ms / 1000.0)


# -- Theorem: rainbow triangle above C(n,2)+n ------------------------------


def verify_triangle_threshold(n: int) -> VerificationReport:
    """Enumerate every edge subset of K_n and every set partition of it into
    color classes; assert each coloring with e+c >= C(n,2)+n has a rainbow
    triangle."""
    if not (3 <= n <= 5):
        raise ValueError(f"triangle verifier supports 3 <= n <= 5, got n={n}")
    t0 = time.perf_counter()
    all_edges = list(combinations(range(1, n + 1), 2))
    triples = list(combinations(range(1, n + 1), 3))
    threshold = comb(n, 2) + n
    space = 0
    ces: list[ColoredGraph] = []
    for subset_mask in range(1 << len(all_edges)):
        edges = [all_edges[i] for i in range(len(all_edges)) if subset_mask >> i & 1]
        m = len(edges)
        edge_index = {e: i for i, e in enumerate(edges)}
        tri_edge_ids = [
            tuple(edge_index[e] for e in ((a, b), (a, c), (b, c)))
            for a, b, c in triples
            if (a, b) in edge_index and (a, c) in edge_index and (b, c) in edge_index
        ]
        for rgs in iter_all_partitions(m):
            space += 1
            c = (max(rgs) + 1) if rgs else 0
            if m + c < threshold:
                continue
            rainbow = any(
                rgs[i] != rgs[j] and rgs[j] != rgs[k] and rgs[i] != rgs[k]
                for i, j, k in tri_edge_ids
            )
            if not rainbow:
                colors = {edges[i]: rgs[i] + 1 for i in range(m)}
                ces.append(ColoredGraph(n, colors))
    return VerificationReport(
        f"triangle-n{n}", space, ces, time.perf_counter() - t0
    )


# -- Lemma: K6 with 10 colors dichotomy ------------------------------------

# Edges of K6 in colex order so that the K4 on the first j vertices is
# completed as early as possible, which lets whole subtrees be skipped as soon
# as a completed 4-subset is rainbow.
_K6_EDGES = sorted(combinations(range(1, 7), 2), key=lambda e: (e[1], e[0]))


@lru_cache(maxsize=None)
def _completions_to(m_left: int, blocks: int, r: int) -> int:
    """Number of restricted-growth completions of m_left more positions that
    end with exactly r blocks, starting from `blocks` blocks."""
    if m_left == 0:
        return 1 if blocks == r else 0
    total = 0
    if blocks > 0:
        total += blocks * _completions_to(m_left - 1, blocks, r)
    if blocks < r:
        total += _completions_to(m_left - 1, blocks + 1, r)
    return total


def verify_k6_dichotomy() -> VerificationReport:
    """Enumerate all set partitions of the 15 edges of K6 into exactly 10
    classes.  Any coloring with a rainbow K4 satisfies the lemma vacuously,
    so a subtree is skipped (with its size counted exactly) once a completed
    4-subset is rainbow.  Each surviving coloring must have saturation
    tallies (c_2,c_1,c_0) = (9,0,1) and contain a rainbow T_{6,2} or a
    monochromatic C_6."""
    t0 = time.perf_counter()
    m, r = 15, 10
    edges = _K6_EDGES
    edge_index = {e: i for i, e in enumerate(edges)}
    # 4-subsets keyed by the position at which their last edge is assigned
    finishing_at: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for sub in combinations(range(1, 7), 4):
        ids = tuple(edge_index[e] for e in combinations(sub, 2))
        finishing_at[max(ids)].append(ids)
    rgs = [0] * m
    survivors: list[tuple[int, ...]] = []
    space = 0

    def rec(pos: int, blocks: int):
        nonlocal space
        if pos == m:
            space += 1
            survivors.append(tuple(rgs))
            return
        remaining_after = m - pos - 1
        for b in range(min(blocks + 1, r)):
            new_blocks = blocks if b < blocks else blocks + 1
            if new_blocks + remaining_after < r:
                continue
            rgs[pos] = b
            vacuous = False
            for ids in finishing_at[pos]:
                i0, i1, i2, i3, i4, i5 = ids
                cs = {rgs[i0], rgs[i1], rgs[i2], rgs[i3], rgs[i4], rgs[i5]}
                if len(cs) == 6:
                    vacuous = True
                    break
            if vacuous:
                # every completion contains this rainbow K4
                space += _completions_to(remaining_after, new_blocks, r)
                continue
            rec(pos + 1, new_blocks)

    rec(0, 0)

    ces: list[ColoredGraph] = []
    for rgs_t in survivors:
        colors = {edges[i]: rgs_t[i] + 1 for i in range(m)}
        g = ColoredGraph(6, colors)
        prof = saturation(g)
        c0, c1, c2 = prof.tallies
        if (c2, c1, c0) != (9, 0, 1):
            ces.append(g)
            continue
        if find_rainbow_turan(g, 2) is None and find_monochromatic_cycle(g, 6) is None:
            ces.append(g)
    report = VerificationReport(
        "k6-dichotomy", space, ces, time.perf_counter() - t0
    )
    assert report.space_size == stirling2(m, r), "partition accounting mismatch"
    return report


# -- labeled regular graph enumeration -------------------------------------


def labeled_regular_graphs(n: int, d: int):
    """Yield every labeled simple d-regular graph on vertices 0..n-1 exactly
    once, as tuples of adjacency bitmasks.  Backtracking: the smallest
    deficient vertex is completed first, connecting only forward."""
    if n * d % 2 != 0 or d >= n:
        return
    adj = [0] * n
    deg = [0] * n

    def rec(u: int):
        while u < n and deg[u] == d:
            u += 1
        if u == n:
            yield tuple(adj)
            return
        need = d - deg[u]
        candidates = [v for v in range(u + 1, n) if deg[v] < d and not adj[u] >> v & 1]
        for chosen in combinations(candidates, need):
            deg[u] += need
            for v in chosen:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                deg[v] += 1
            yield from rec(u)
            deg[u] -= need
            for v in chosen:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                deg[v] -= 1

    yield from rec(0)


def _subsets_with_few_edges(adj: tuple[int, ...], size: int, min_edges: int):
    """First `size`-subset spanning fewer than min_edges edges, or None."""
    n = len(adj)
    for sub in combinations(range(n), size):
        cnt = 0
        for i in range(size):
            ai = adj[sub[i]]
            for j in range(i + 1, size):
                if ai >> sub[j] & 1:
                    cnt += 1
                    if cnt >= min_edges:
                        break
            if cnt >= min_edges:
                break
        if cnt < min_edges:
            return sub
    return None


def canonical_form(adj: tuple[int, ...]) -> int:
    """Canonical adjacency code: minimum over all vertex permutations of the
    upper-triangle bit packing.  Vectorized; intended for n <= 8."""
    n = len(adj)
    A = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        for j in range(n):
            if adj[i] >> j & 1:
                A[i, j] = 1
    from itertools import permutations

    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    B = A[perms[:, :, None], perms[:, None, :]]
    iu, ju = np.triu_indices(n, k=1)
    bits = B[:, iu, ju].astype(np.int64)
    weights = 1 << np.arange(len(iu) - 1, -1, -1, dtype=np.int64)
    codes = bits @ weights
    return int(codes.min())


def _mono_graph(adj: tuple[int, ...]) -> ColoredGraph:
    """Plain graph as a monochromatic ColoredGraph (for report embedding)."""
    n = len(adj)
    colors = {}
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i] >> j & 1:
                colors[(i + 1, j + 1)] = 1
    return ColoredGraph(n, colors)


def _two_disjoint_k4(adj: tuple[int, ...]) -> bool:
    comps = _components(adj)
    if len(comps) != 2:
        return False
    for comp in comps:
        if len(comp) != 4:
            return False
        for i in comp:
            for j in comp:
                if i != j and not adj[i] >> j & 1:
                    return False
    return True


def _components(adj: tuple[int, ...]) -> list[list[int]]:
    n = len(adj)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            m = adj[v]
            while m:
                b = m & -m
                w = b.bit_length() - 1
                m ^= b
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def verify_k8_reduction() -> VerificationReport:
    """Enumerate all labeled 3-regular graphs H on 8 vertices; keep those in
    which every 4-subset spans >= 2 edges; assert the survivors are exactly
    the 35 labeled copies of K4 + K4 (one isomorphism class).  Also check
    that the (c2,c1,c0) solution list for c=17, 32 <= 2c2+c1 <= 34 matches
    the four admissible tuples."""
    t0 = time.perf_counter()
    space = 0
    survivors = []
    for adj in labeled_regular_graphs(8, 3):
        space += 1
        if _subsets_with_few_edges(adj, 4, 2) is None:
            survivors.append(adj)
    ces: list[ColoredGraph] = []
    canon = set()
    for adj in survivors:
        canon.add(canonical_form(adj))
        if not _two_disjoint_k4(adj):
            ces.append(_mono_graph(adj))
    if not ces and (len(survivors) != 35 or len(canon) != 1):
        ces.extend(_mono_graph(a) for a in survivors)
    expected = [(17, 0, 0), (16, 1, 0), (16, 0, 1), (15, 2, 0)]
    assert verify_saturation_solutions(17, 32, 34) == expected, \
        "saturation tally elimination list mismatch at c=17"
    return VerificationReport("k8-reduction", space, ces, time.perf_counter() - t0)


def _cycle_type(adj: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in _components(adj)), reverse=True))


def verify_k9_reduction() -> VerificationReport:
    """Enumerate all labeled 2-regular graphs on 9 vertices (disjoint cycle
    covers with cycle lengths >= 3); keep those in which every 5-subset spans
    >= 2 edges; assert only the 3+3+3 cycle type survives, and that the three
    eliminated types (C9, C6+C3, C5+C4) each exhibit a violating 5-tuple."""
    t0 = time.perf_counter()
    space = 0
    ces: list[ColoredGraph] = []
    for adj in labeled_regular_graphs(9, 2):
        space += 1
        bad = _subsets_with_few_edges(adj, 5, 2)
        if bad is None:
            if _cycle_type(adj) != (3, 3, 3):
                ces.append(_mono_graph(adj))
        else:
            if _cycle_type(adj) == (3, 3, 3):
                ces.append(_mono_graph(adj))

    # canonical representatives of the eliminated types, 0-based cycles
    def cycle_adj(cycles: list[list[int]]) -> tuple[int, ...]:
        adj = [0] * 9
        for cyc in cycles:
            for i, v in enumerate(cyc):
                w = cyc[(i + 1) % len(cyc)]
                adj[v] |= 1 << w
                adj[w] |= 1 << v
        return tuple(adj)

    eliminated = [
        cycle_adj([[0, 1, 2, 3, 4, 5, 6, 7, 8]]),
        cycle_adj([[0, 1, 2, 3, 4, 5], [6, 7, 8]]),
        cycle_adj([[0, 1, 2, 3, 4], [5, 6, 7, 8]]),
    ]
    for adj in eliminated:
        if _subsets_with_few_edges(adj, 5, 2) is None:
            ces.append(_mono_graph(adj))
    return VerificationReport("k9-reduction", space, ces, time.perf_counter() - t0)


def verify_saturation_solutions(c_total: int, lo: int, hi: int) -> list[tuple[int, int, int]]:
    """All nonnegative integer triples (c2, c1, c0) with c2+c1+c0 = c_total
    and lo <= 2*c2+c1 <= hi, sorted descending by c2 then c1."""
    if lo > hi:
        raise ValueError(f"need lo <= hi, got lo={lo}, hi={hi}")
    out = []
    for c2 in range(c_total, -1, -1):
        for c1 in range(c_total - c2, -1, -1):
            c0 = c_total - c2 - c1
            if lo <= 2 * c2 + c1 <= hi:
                out.append((c2, c1, c0))
    return out


def verify_tightness(n: int, k: int, seed: int = 0) -> VerificationReport:
    """Assert the extremal construction sits exactly at the extremal
    threshold with no rainbow K_k, and that recoloring any single intra-part
    edge with a fresh color creates a rainbow K_k (exhaustive over intra-part
    edges)."""
    if k not in (4, 5):
        raise ValueError(f"tightness verified for k in {{4,5}}, got k={k}")
    t0 = time.perf_counter()
    g = extremal(n, k)
    extremal_ec, _ = thresholds(n, k)
    ces: list[ColoredGraph] = []
    space = 1
    if g.e + g.c != extremal_ec or find_rainbow_clique(g, k) is not None:
        ces.append(g)
    shared = max(g.colors.values())
    fresh = shared + 1
    intra_edges = sorted(e for e, c in g.colors.items() if c == shared)
    for edge in intra_edges:
        space += 1
        colors = dict(g.colors)
        colors[edge] = fresh
        perturbed = ColoredGraph(n, colors)
        if find_rainbow_clique(perturbed, k) is None:
            ces.append(perturbed)
    return VerificationReport(
        f"tightness-n{n}-k{k}", space, ces, time.perf_counter() - t0
    )


def falsify_two_cliques(
    k: int, n: int, trials: int, seed: int
) -> VerificationReport:
    """Seeded randomized search for a coloring at or above the existence
    threshold with exactly one rainbow K_k; success is finding none.  A hit
    would be a genuine counterexample and is emitted."""
    if not (n > k >= 6 or (k == 5 and n >= 10)):
        raise ValueError(
            f"two-cliques theorem covers n > k >= 6 or k=5, n >= 10; got k={k}, n={n}"
        )
    t0 = time.perf_counter()
    target = comb(n, 2) + turan_number(n, k - 2) + 2
    e = comb(n, 2)
    rng = random.Random(seed)
    all_edges = list(combinations(range(1, n + 1), 2))
    palette = max(target - e, 1)
    ces: list[ColoredGraph] = []
    for _ in range(trials):
        colors = {edge: rng.randrange(1, palette + 1) for edge in all_edges}
        class_size: dict[int, int] = {}
        for c in colors.values():
            class_size[c] = class_size.get(c, 0) + 1
        ec = e + len(class_size)
        next_color = palette + 1
        while ec < target:
            dup_edges = [edge for edge in all_edges if class_size[colors[edge]] >= 2]
            edge = dup_edges[rng.randrange(len(dup_edges))]
            class_size[colors[edge]] -= 1
            colors[edge] = next_color
            class_size[next_color] = 1
            next_color += 1
            ec += 1
        g = ColoredGraph(n, colors)
        if count_rainbow_cliques(g, k) == 1:
            ces.append(g)
    return VerificationReport(
        f"two-cliques-k{k}-n{n}", trials, ces, time.perf_counter() - t0
    )


def supersaturation_experiment(
    k: int, ns: list[int], eps: float, seed: int
) -> tuple[list[tuple[int, int, int]], float]:
    """For each n, perturb the extremal pattern up to the supersaturation
    budget (1 + (k-3)/(k-2) + 2*eps) * C(n,2) and count rainbow K_k exactly.
    Returns the rows (n, e+c, count) and the least-squares slope of
    log(count) against log(n)."""
    if k not in (3, 4):
        raise ValueError(f"experiment supports k in {{3,4}}, got k={k}")
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    rows = []
    for n in ns:
        if n > 100:
            raise ValueError(f"experiment capped at n <= 100, got n={n}")
        target = int(np.ceil((1 + (k - 3) / (k - 2) + 2 * eps) * comb(n, 2)))
        if target > 2 * comb(n, 2):
            raise ValueError(f"target {target} exceeds the all-rainbow maximum at n={n}")
        g = perturb_fresh_colors(extremal(n, k), target, seed)
        cnt = count_rainbow_cliques(g, k)
        rows.append((n, g.e + g.c, cnt))
    xs = [log(n) for n, _, _ in rows]
    ys = [log(cnt) for _, _, cnt in rows]
    slope = float(np.polyfit(xs, ys, 1)[0])
    return rows, slope
