"""Extremal tree families and AHU canonical forms for isomorphism tests."""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import DomainError
from .tree import Tree


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Parenthesis encoding of a free tree rooted at its center.

    Equal encodings iff the trees are isomorphic.
    """

    encoding: bytes

    def __str__(self) -> str:
        return self.encoding.decode("ascii")


def centers(t: Tree) -> list[int]:
    """The one or two central vertices, found by repeated leaf removal."""
    n = t.n
    if n <= 2:
        return list(range(n))
    deg = t.degrees()
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for v in t.adjacency[leaf]:
                deg[v] -= 1
                if deg[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def rooted_encoding(t: Tree, root: int) -> bytes:
    adj = t.adjacency
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for u in order:
        for v in adj[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
    children: list[list[bytes]] = [[] for _ in range(t.n)]
    code = b""
    for u in reversed(order):
        kids = children[u]
        kids.sort()
        code = b"(" + b"".join(kids) + b")"
        if u != root:
            children[parent[u]].append(code)
    return code


def canonical_form(t: Tree) -> CanonicalForm:
    return CanonicalForm(min(rooted_encoding(t, c) for c in centers(t)))


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def _check_delta(k: int, delta: int) -> None:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if delta < 4:
        raise DomainError(f"delta must be >= 4, got {delta}")


def _tt1_edges(k: int, delta: int) -> list[tuple[int, int]]:
    # path vertices v_1..v_{2k+1} get ids 0..2k; pendants follow
    edges = [(p, p + 1) for p in range(2 * k)]
    nxt = 2 * k + 1
    for p in range(1, 2 * k, 2):
        for _ in range(delta - 2):
            edges.append((p, nxt))
            nxt += 1
    return edges


def tt1_opt(k: int, delta: int) -> Tree:
    """Path on ``2k+1`` vertices with ``delta-2`` pendants on every even vertex.

    Order ``delta*k + 1``.
    """
    _check_delta(k, delta)
    return Tree.from_edges(delta * k + 1, _tt1_edges(k, delta))


def tt0_positions(k: int) -> list[int]:
    """Admissible (1-based, odd) subdivision positions for :func:`tt0_opt`."""
    return list(range(3, 2 * k, 2))


def tt0_opt(k: int, delta: int, position: int) -> Tree:
    """Subdivide path edge ``v_pos v_{pos+1}`` of ``tt1_opt(k, delta)`` and hang
    ``delta-2`` pendants on the new vertex. Order ``delta*k + delta``.
    """
    _check_delta(k, delta)
    if k == 1:
        raise DomainError("family empty for k=1: no odd position in [3, 2k-1]")
    if position % 2 == 0 or not 3 <= position <= 2 * k - 1:
        raise DomainError(f"position must be odd in [3, {2 * k - 1}], got {position}")
    edges = _tt1_edges(k, delta)
    a, b = position - 1, position
    edges.remove((a, b))
    w = delta * k + 1
    edges += [(a, w), (w, b)]
    edges += [(w, w + 1 + s) for s in range(delta - 2)]
    return Tree.from_edges(delta * k + delta, edges)


def tt0_family(k: int, delta: int) -> list[Tree]:
    return [tt0_opt(k, delta, pos) for pos in tt0_positions(k)]


def double_star(delta: int) -> Tree:
    """Two adjacent centers each carrying ``delta-1`` leaves."""
    if delta < 1:
        raise DomainError(f"delta must be >= 1, got {delta}")
    edges = [(0, 1)]
    edges += [(0, 2 + s) for s in range(delta - 1)]
    edges += [(1, delta + 1 + s) for s in range(delta - 1)]
    return Tree.from_edges(2 * delta, edges)


def star(leaves: int) -> Tree:
    return Tree.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def path(n: int) -> Tree:
    return Tree.from_edges(n, [(v, v + 1) for v in range(n - 1)])
