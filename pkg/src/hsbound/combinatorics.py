"""Labeled trees counted by degree sequence.

``cayley_count`` is the multinomial (n-2)! / prod (d_i - 1)!; the Prüfer
enumeration below counts the same thing by brute force and serves as its
oracle.
"""

import heapq
import math
from collections import Counter

import numpy as np

from .errors import InvalidSequenceError, UnsupportedSizeError

PRUFER_MAX_N = 9


def check_degree_sequence(degrees):
    degrees = tuple(int(x) for x in degrees)
    n = len(degrees)
    if n < 2:
        raise InvalidSequenceError(f"need at least 2 vertices, got {n}")
    if min(degrees) < 1:
        raise InvalidSequenceError(f"every degree must be >= 1: {degrees}")
    if sum(degrees) != 2 * n - 2:
        raise InvalidSequenceError(f"degrees sum to {sum(degrees)}, a tree on {n} vertices needs {2 * n - 2}")
    return degrees


def cayley_count(degrees):
    """Number of labeled trees on {1..n} where vertex i has degree degrees[i-1]."""
    degrees = check_degree_sequence(degrees)
    # product of binomials keeps every intermediate an exact, minimal integer
    count = 1
    placed = 0
    for d in degrees:
        placed += d - 1
        count *= math.comb(placed, d - 1)
    return count


def prufer_decode(seq, n):
    """Edge list of the labeled tree (vertices 1..n) encoded by ``seq``."""
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def prufer_enumerate(n):
    """Histogram {degree sequence: number of labeled trees} over all n^(n-2) Prüfer words."""
    if isinstance(n, bool) or not isinstance(n, int) or not 2 <= n <= PRUFER_MAX_N:
        raise UnsupportedSizeError(f"n must be an integer in 2..{PRUFER_MAX_N}, got {n!r}")
    if n == 2:
        return {(1, 1): 1}
    length = n - 2
    total = n**length
    # word index -> digits base n, one column per position
    idx = np.arange(total, dtype=np.int64)
    counts = np.ones((total, n), dtype=np.int8)
    for _ in range(length):
        counts[np.arange(total), idx % n] += 1
        idx //= n
    rows, mult = np.unique(counts, axis=0, return_counts=True)
    return {tuple(int(x) for x in r): int(m) for r, m in zip(rows, mult)}


def degree_sequences(n):
    """All valid degree sequences for trees on n labeled vertices."""
    def rec(prefix, remaining, slots):
        if slots == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        for extra in range(remaining + 1):
            yield from rec(prefix + [1 + extra], remaining - extra, slots - 1)

    yield from rec([], n - 2, n)


def tree_degrees(edges, n):
    c = Counter()
    for u, v in edges:
        c[u] += 1
        c[v] += 1
    return tuple(c[v] for v in range(1, n + 1))
