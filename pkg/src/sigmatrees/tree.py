"""Labeled trees, degree profiles, the sigma index and graph6 I/O."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class TreeError(ValueError):
    """A graph that violates one of the tree invariants."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Tree:
    """Undirected tree on the vertex ids ``0..n-1``.

    The adjacency lists are validated on construction and stored as sorted
    tuples; instances are immutable. Degrees are derived from adjacency.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 1:
            raise TreeError(f"tree must have at least one vertex, got n={n}")
        if len(adjacency) != n:
            raise TreeError(f"adjacency has {len(adjacency)} rows, expected n={n}")
        adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        _check_tree(n, adj)
        self._n = n
        self._adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tree":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, adj)

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "Tree":
        """Build from a parent array; the root carries parent ``-1``."""
        return cls.from_edges(len(parents), ((v, p) for v, p in enumerate(parents) if p >= 0))

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees())

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self._adj) for v in nbrs if u < v]

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
        return Tree.from_edges(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Tree(n={self._n}, edges={self.edges()})"


def _check_tree(n: int, adj: tuple[tuple[int, ...], ...]) -> None:
    half_edges = 0
    for u, nbrs in enumerate(adj):
        for i, v in enumerate(nbrs):
            if not 0 <= v < n:
                raise TreeError(f"vertex {u} lists neighbor {v} outside 0..{n - 1}")
            if v == u:
                raise TreeError(f"self-loop at vertex {u}")
            if i and nbrs[i - 1] == v:
                raise TreeError(f"duplicate neighbor {v} at vertex {u}")
            if u not in adj[v]:
                raise TreeError(f"adjacency not symmetric: {u} lists {v} but not conversely")
        half_edges += len(nbrs)
    m = half_edges // 2
    if m != n - 1:
        raise TreeError(f"graph has {m} edges, expected n-1 = {n - 1}")
    seen = [False] * n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                reached += 1
                stack.append(v)
    if reached != n:
        raise TreeError(f"graph is disconnected: {reached} of {n} vertices reachable from 0")


def sigma(t: Tree) -> int:
    """Sum over edges ``uv`` of ``(deg u - deg v)**2``."""
    deg = t.degrees()
    return sum((deg[u] - deg[v]) ** 2 for u, v in t.edges())


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex-degree counts ``n_i`` and edge degree-pair counts ``m_{i,j}``.

    ``pair_counts`` is keyed by ``(i, j)`` with ``i <= j``; only nonzero
    entries are stored, lookups through :meth:`m` default to 0.
    """

    delta: int
    degree_counts: Mapping[int, int]
    pair_counts: Mapping[tuple[int, int], int] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return sum(self.degree_counts.values())

    def count(self, i: int) -> int:
        return self.degree_counts.get(i, 0)

    def m(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.pair_counts.get((i, j), 0)

    def sigma(self) -> int:
        return sum(c * (i - j) ** 2 for (i, j), c in self.pair_counts.items())

    def weighted_edge_sum(self) -> Fraction:
        """Sum of ``(1/i + 1/j) * m_{i,j}``; equals the order for any tree."""
        return sum(
            (Fraction(1, i) + Fraction(1, j)) * c for (i, j), c in self.pair_counts.items()
        ) or Fraction(0)

    def support(self) -> set[tuple[int, int]]:
        return {key for key, c in self.pair_counts.items() if c}

    def identity_violations(self) -> list[str]:
        """List every handshake identity that fails; empty for a valid tree profile."""
        n = self.order
        bad = []
        if sum(i * c for i, c in self.degree_counts.items()) != 2 * n - 2:
            bad.append("sum of i*n_i != 2n-2")
        for i in range(1, self.delta + 1):
            incident = sum(
                (2 * c if a == b else c)
                for (a, b), c in self.pair_counts.items()
                if i in (a, b)
            )
            if incident != i * self.count(i):
                bad.append(f"edges at degree {i}: {incident} != {i}*n_{i}")
        if n >= 2 or self.pair_counts:
            if sum(self.pair_counts.values()) != n - 1:
                bad.append("sum of m_ij != n-1")
            if self.weighted_edge_sum() != n:
                bad.append("sum of (1/i+1/j) m_ij != n")
        return bad


def profile(t: Tree) -> DegreeProfile:
    deg = t.degrees()
    pairs: Counter[tuple[int, int]] = Counter()
    for u, v in t.edges():
        a, b = deg[u], deg[v]
        pairs[(a, b) if a <= b else (b, a)] += 1
    return DegreeProfile(
        delta=max(deg),
        degree_counts=dict(sorted(Counter(deg).items())),
        pair_counts=dict(sorted(pairs.items())),
    )


def _graph6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(t: Tree) -> str:
    """Encode ``t`` as a graph6 line (no header, no trailing newline)."""
    n = t.n
    adj = t.adjacency
    out = bytearray(_graph6_size(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = set(adj[j])
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Tree:
    """Decode one graph6 line and check that it is a tree."""
    data = text.strip().encode("ascii", errors="replace")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
        base = 10
    else:
        base = 0
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside the graph6 range 63..126", base + pos)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field", base + len(data))
        n, pos = _decode6(data[2:8]), 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size field", base + len(data))
        n, pos = _decode6(data[1:4]), 4
    if n < 1:
        raise TreeError("graph has no vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} adjacency bytes for n={n}, found {len(body)}",
            base + pos + min(len(body), need),
        )
    adj: list[list[int]] = [[] for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i].append(j)
                adj[j].append(i)
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Tree(n, adj)


def _decode6(chunk: bytes) -> int:
    value = 0
    for byte in chunk:
        value = (value << 6) | (byte - 63)
    return value
