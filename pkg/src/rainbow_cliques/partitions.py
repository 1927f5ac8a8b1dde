"""Streaming set-partition enumeration via restricted growth strings.

A coloring of m edges with exactly r colors, considered up to color renaming,
is a set partition of the edge list into r nonempty classes.  Partitions are
emitted as restricted growth strings: position i holds the block index of
element i, blocks numbered by first appearance.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator


@lru_cache(maxsize=None)
def stirling2(m: int, r: int) -> int:
    """Stirling number of the second kind via the direct recurrence
    S(m,r) = r*S(m-1,r) + S(m-1,r-1)."""
    if m == 0:
        return 1 if r == 0 else 0
    if r <= 0 or r > m:
        return 0
    return r * stirling2(m - 1, r) + stirling2(m - 1, r - 1)


def bell(m: int) -> int:
    return sum(stirling2(m, r) for r in range(m + 1))


class EdgePartitionCursor:
    """Iterates every set partition of {0..m-1} into exactly r nonempty
    blocks exactly once, as restricted growth strings."""

    def __init__(self, m: int, r: int):
        if m < 0 or r < 0:
            raise ValueError(f"need m, r >= 0, got m={m}, r={r}")
        self.m = m
        self.r = r

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        m, r = self.m, self.r
        if r > m or (m > 0 and r == 0):
            return
        if m == 0:
            yield ()
            return
        rgs = [0] * m

        def rec(pos: int, blocks: int) -> Iterator[tuple[int, ...]]:
            if pos == m:
                if blocks == r:
                    yield tuple(rgs)
                return
            remaining = m - pos - 1
            for b in range(min(blocks + 1, r)):
                new_blocks = blocks if b < blocks else blocks + 1
                # prune: must still be able to reach exactly r blocks
                if new_blocks + remaining < r:
                    continue
                rgs[pos] = b
                yield from rec(pos + 1, new_blocks)

        yield from rec(0, 0)

    def count(self) -> int:
        return stirling2(self.m, self.r)


def iter_all_partitions(m: int) -> Iterator[tuple[int, ...]]:
    """Every set partition of {0..m-1} into any number of blocks, as
    restricted growth strings."""
    if m == 0:
        yield ()
        return
    rgs = [0] * m

    def rec(pos: int, blocks: int) -> Iterator[tuple[int, ...]]:
        if pos == m:
            yield tuple(rgs)
            return
        for b in range(blocks + 1):
            rgs[pos] = b
            yield from rec(pos + 1, blocks if b < blocks else blocks + 1)

    yield from rec(0, 0)


def blocks_of(rgs: tuple[int, ...]) -> list[list[int]]:
    nblocks = max(rgs) + 1 if rgs else 0
    out: list[list[int]] = [[] for _ in range(nblocks)]
    for i, b in enumerate(rgs):
        out[b].append(i)
    return out
