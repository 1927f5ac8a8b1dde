"""Edge-colored graph core: representation, ECG text format, saturation bookkeeping.

Vertices are labeled 1..n.  Edges are unordered pairs with a positive integer
color id; color ids need not be contiguous.  All values are immutable after
construction and every operation is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping


class ECGParseError(ValueError):
    """Raised on malformed ECG input; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class SaturationProfile:
    """Per-vertex saturated degrees and the (c_0, c_1, c_2) color tallies.

    A color is saturated at v when v is incident to one of its edges and the
    color disappears from the graph once v is deleted.  c_t counts colors
    saturated at exactly t vertices; no color can be saturated at 3 or more.
    """

    ds: Mapping[int, int]
    tallies: tuple[int, int, int]  # (c_0, c_1, c_2)

    @property
    def sum_ds(self) -> int:
        return sum(self.ds.values())


@dataclass(frozen=True)
class Witness:
    """A vertex subset plus its edge-color assignment certifying a pattern.

    kind is one of: rainbow-clique, rainbow-bipartite, rainbow-turan,
    mono-cycle, mono-path, proper-c4.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (u, v, color)


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class ColoredGraph:
    """Immutable edge-colored simple graph on vertices 1..n."""

    n: int
    colors: dict[tuple[int, int], int] = field(repr=False)

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for (u, v), c in self.colors.items():
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge ({u},{v}) for n={self.n}")
            if c <= 0:
                raise ValueError(f"nonpositive color {c} on edge ({u},{v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "ColoredGraph":
        colors: dict[tuple[int, int], int] = {}
        for u, v, c in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = _edge_key(u, v)
            if key in colors:
                raise ValueError(f"duplicate edge {key}")
            colors[key] = c
        return cls(n, colors)

    # -- basic accessors ---------------------------------------------------

    @property
    def e(self) -> int:
        return len(self.colors)

    @cached_property
    def c(self) -> int:
        return len(set(self.colors.values()))

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.colors)

    def color_of(self, u: int, v: int) -> int | None:
        return self.colors.get(_edge_key(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return _edge_key(u, v) in self.colors

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmasks indexed by vertex (index 0 unused); bit v set
        means adjacency to vertex v."""
        masks = [0] * (self.n + 1)
        for u, v in self.colors:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def color_matrix(self) -> tuple[tuple[int, ...], ...]:
        """(n+1)x(n+1) color lookup, 0 where no edge.  Fast path for search."""
        m = [[0] * (self.n + 1) for _ in range(self.n + 1)]
        for (u, v), c in self.colors.items():
            m[u][v] = c
            m[v][u] = c
        return tuple(tuple(row) for row in m)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> list[int]:
        m = self.adj[v]
        out = []
        while m:
            b = m & -m
            out.append(b.bit_length() - 1)
            m ^= b
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.n == other.n and self.colors == other.colors


# -- operations -----------------------------------------------------------


def counts(g: ColoredGraph) -> tuple[int, int]:
    """(e(G), c(G)): number of edges and number of distinct colors."""
    return g.e, g.c


def is_complete(g: ColoredGraph) -> bool:
    return g.e == g.n * (g.n - 1) // 2


def induced_subgraph(g: ColoredGraph, keep: Iterable[int]) -> ColoredGraph:
    """Subgraph on `keep`, vertices relabeled 1..|keep| preserving relative
    order; colors preserved verbatim."""
    ks = sorted(set(keep))
    if not ks:
        raise ValueError("keep set must be nonempty")
    if ks[0] < 1 or ks[-1] > g.n:
        raise ValueError(f"vertex out of range in keep set: {ks[0] if ks[0] < 1 else ks[-1]}")
    relabel = {v: i + 1 for i, v in enumerate(ks)}
    colors = {}
    for (u, v), c in g.colors.items():
        if u in relabel and v in relabel:
            colors[_edge_key(relabel[u], relabel[v])] = c
    return ColoredGraph(len(ks), colors)


def delete_vertex(g: ColoredGraph, v: int) -> ColoredGraph:
    """G - v with order-preserving relabeling."""
    return induced_subgraph(g, [u for u in range(1, g.n + 1) if u != v])


def saturation(g: ColoredGraph) -> SaturationProfile:
    """Saturated degrees d^s(v) and tallies (c_0, c_1, c_2).

    Computed in one pass: per color, intersect the endpoint pairs of its
    edges.  A single-edge color is saturated at both endpoints; a color whose
    edges all share one vertex is saturated there; otherwise at no vertex.
    """
    common: dict[int, set[int]] = {}
    for (u, v), c in g.colors.items():
        if c in common:
            common[c] &= {u, v}
        else:
            common[c] = {u, v}
    ds = {v: 0 for v in range(1, g.n + 1)}
    tallies = [0, 0, 0]
    for c, verts in common.items():
        assert len(verts) <= 2, f"color {c} saturated at 3+ vertices"
        tallies[len(verts)] += 1
        for v in verts:
            ds[v] += 1
    return SaturationProfile(ds=ds, tallies=(tallies[0], tallies[1], tallies[2]))


# -- ECG text format ------------------------------------------------------
#
# line 1: `n m`; then exactly m lines `u v c` with 1 <= u < v <= n and c >= 1.
# Lines beginning `#` and blank lines are ignored.  LF or CRLF accepted; the
# writer emits LF with edges sorted lexicographically by (u, v).


def parse_ecg(text: str) -> ColoredGraph:
    n = m = None
    colors: dict[tuple[int, int], int] = {}
    seen_edges = 0
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise ECGParseError(line_no, f"expected header 'n m', got {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ECGParseError(line_no, f"non-integer header field in {line!r}") from None
            if n <= 0 or m < 0:
                raise ECGParseError(line_no, f"invalid header values n={n} m={m}")
            continue
        if len(parts) != 3:
            raise ECGParseError(line_no, f"expected edge line 'u v c', got {line!r}")
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise ECGParseError(line_no, f"non-integer edge field in {line!r}") from None
        if u == v:
            raise ECGParseError(line_no, f"self-loop at vertex {u}")
        if u > v:
            raise ECGParseError(line_no, f"edge endpoints out of order: {u} > {v}")
        if not (1 <= u and v <= n):
            raise ECGParseError(line_no, f"vertex out of range in edge ({u},{v}), n={n}")
        if c <= 0:
            raise ECGParseError(line_no, f"nonpositive color {c}")
        if (u, v) in colors:
            raise ECGParseError(line_no, f"duplicate edge ({u},{v})")
        colors[(u, v)] = c
        seen_edges += 1
        if seen_edges > m:
            raise ECGParseError(line_no, f"more than the declared {m} edges")
    if n is None:
        raise ECGParseError(1, "empty document")
    if seen_edges != m:
        raise ECGParseError(line_no, f"declared {m} edges but found {seen_edges}")
    return ColoredGraph(n, colors)


def format_ecg(g: ColoredGraph) -> str:
    lines = [f"{g.n} {g.e}"]
    for u, v in g.edges():
        lines.append(f"{u} {v} {g.colors[(u, v)]}")
    return "\n".join(lines) + "\n"
