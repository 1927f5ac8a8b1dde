"""Exact Turán numbers, the increment identity, balanced partitions, and the
e(G)+c(G) thresholds for rainbow cliques.

All arithmetic is exact integer arithmetic: thresholds are compared for
equality downstream, so no floating point enters here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class TuranPartition:
    """Part sizes of a balanced partition, nonincreasing."""

    sizes: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def k(self) -> int:
        return len(self.sizes)


def turan_number(n: int, k: int) -> int:
    """Edge count t_{n,k} of the complete balanced k-partite graph on n
    vertices: (k-1)(n^2-i^2)/(2k) + C(i,2) with i = n mod k."""
    if k <= 0:
        raise ValueError(f"part count must be positive, got k={k}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got n={n}")
    i = n % k
    num = (k - 1) * (n * n - i * i)
    assert num % (2 * k) == 0
    return num // (2 * k) + comb(i, 2)


def turan_increment(n: int, k: int) -> int:
    """t_{n+1,k} - t_{n,k} = n - (n-i)/k with i = n mod k."""
    if k <= 0:
        raise ValueError(f"part count must be positive, got k={k}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got n={n}")
    i = n % k
    return n - (n - i) // k


def turan_partition(n: int, k: int) -> TuranPartition:
    """Balanced part sizes: the first n mod k parts get ceil(n/k), the rest
    floor(n/k); nonincreasing order."""
    if k <= 0:
        raise ValueError(f"part count must be positive, got k={k}")
    if k > n:
        raise ValueError(f"cannot split {n} vertices into {k} nonempty parts")
    q, i = divmod(n, k)
    return TuranPartition(tuple([q + 1] * i + [q] * (k - i)))


def thresholds(n: int, k: int) -> tuple[int, int]:
    """(extremal, existence) values of e(G)+c(G) for rainbow K_k on n vertices.

    For k >= 4: existence = C(n,2) + t_{n,k-2} + 2 and the extremal value is
    one less.  For k = 3 the existence threshold is C(n,2) + n.
    """
    if k < 3:
        raise ValueError(f"rainbow clique thresholds need k >= 3, got k={k}")
    if k == 3:
        existence = comb(n, 2) + n
    else:
        existence = comb(n, 2) + turan_number(n, k - 2) + 2
    return existence - 1, existence


def max_cross_edges_brute_force(n: int, k: int) -> int:
    """Independent oracle: maximum cross-edge count over all partitions of n
    labeled vertices into at most k parts, by enumerating part-size
    compositions.  Cross edges depend only on the size multiset."""
    if k <= 0:
        raise ValueError(f"part count must be positive, got k={k}")
    best = 0

    def rec(remaining: int, parts_left: int, max_size: int, sizes: list[int]):
        nonlocal best
        if parts_left == 0:
            if remaining == 0:
                cross = sum(
                    sizes[i] * sizes[j]
                    for i in range(len(sizes))
                    for j in range(i + 1, len(sizes))
                )
                best = max(best, cross)
            return
        lo = (remaining + parts_left - 1) // parts_left
        for s in range(min(max_size, remaining), lo - 1, -1):
            rec(remaining - s, parts_left - 1, s, sizes + [s])

    rec(n, k, n, [])
    return best
