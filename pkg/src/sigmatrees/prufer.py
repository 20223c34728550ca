"""Prüfer-sequence tree enumeration, kept as an independent cross-check of
the level-sequence generator.

``free_trees_via_prufer(n)`` decodes Prüfer sequences and deduplicates the
resulting labeled trees by canonical form. By default only non-decreasing
sequences with ``seq[t] > t + 1`` (1-based labels) are decoded: labeling a
tree in reverse BFS order from any root gives such a sequence, so every
isomorphism class is still reached while the work drops from ``n**(n-2)``
labeled trees to a Catalan number of them.
"""

from __future__ import annotations

import heapq
import itertools
from typing import Iterable, Iterator, Sequence

from .constructions import CanonicalForm, canonical_form
from .tree import Tree


def prufer_decode(seq: Sequence[int], n: int) -> Tree:
    """Decode a Prüfer sequence over labels ``0..n-1`` into a labeled tree."""
    if n == 1:
        return Tree(1, [[]])
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree.from_edges(n, edges)


def prufer_encode(t: Tree) -> list[int]:
    n = t.n
    degree = t.degrees()
    removed = [False] * n
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = True
        nbr = next(v for v in t.adjacency[leaf] if not removed[v])
        seq.append(nbr)
        degree[nbr] -= 1
        if degree[nbr] == 1:
            heapq.heappush(leaves, nbr)
    return seq


def all_sequences(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(n), repeat=max(n - 2, 0))


def reduced_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing sequences ``s`` over ``0..n-1`` with ``s[t] > t``."""
    length = max(n - 2, 0)
    seq = [0] * length

    def rec(t: int, low: int) -> Iterator[tuple[int, ...]]:
        if t == length:
            yield tuple(seq)
            return
        for v in range(max(low, t + 1), n):
            seq[t] = v
            yield from rec(t + 1, v)

    return rec(0, 0)


def free_trees_via_prufer(
    n: int, max_degree: int | None = None, reduced: bool = True
) -> dict[CanonicalForm, Tree]:
    """One labeled representative per isomorphism class, keyed by canonical form."""
    seqs: Iterable[tuple[int, ...]] = reduced_sequences(n) if reduced else all_sequences(n)
    found: dict[CanonicalForm, Tree] = {}
    for seq in seqs:
        t = prufer_decode(seq, n)
        if max_degree is not None and n > 1 and t.max_degree() > max_degree:
            continue
        key = canonical_form(t)
        if key not in found:
            found[key] = t
    return found
