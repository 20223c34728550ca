"""Pure-Python implementations of the hot loops.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the compiled versions are tested against.

Free trees are produced as canonical level sequences rooted at a center
(Wright, Richmond, Odlyzko and McKay); ``L[i]`` is the depth of vertex ``i``
in preorder and the parent of ``i`` is the last earlier vertex one level up.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

INT64_DELTA_LIMIT = 4000


def initial_level_sequence(n: int) -> list[int]:
    return list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))


def next_rooted(L: list[int], p: int = -1) -> bool:
    """Advance ``L`` in place to the next rooted level sequence.

    Returns False when ``L`` was the last one.
    """
    n = len(L)
    if p < 0:
        p = n - 1
        while L[p] == 1:
            p -= 1
    if p == 0:
        return False
    q = p - 1
    while L[q] != L[p] - 1:
        q -= 1
    for i in range(p, n):
        L[i] = L[i - p + q]
    return True


def make_free(L: list[int]) -> None:
    """Move ``L`` forward to the first level sequence that is canonical for a free tree."""
    n = len(L)
    m = 2
    while m < n and L[m] != 1:
        m += 1
    left_h = max(L[1:m]) - 1
    rest_h = max(L[m:], default=0)
    valid = rest_h >= left_h
    if valid and rest_h == left_h:
        left_len = m - 1
        rest_len = n - m + 1
        if left_len > rest_len:
            valid = False
        elif left_len == rest_len:
            # left is L[1:m]-1, rest is [0] + L[m:]
            for a, b in zip(range(1, m), [-1] + list(range(m, n))):
                x = L[a] - 1
                y = 0 if b < 0 else L[b]
                if x != y:
                    valid = x < y
                    break
    if valid:
        return
    p = m - 1
    old = L[p]
    next_rooted(L, p)
    if old > 2:
        m = 2
        while m < n and L[m] != 1:
            m += 1
        h = max(L[1:m]) - 1
        for s in range(h + 1):
            L[n - 1 - h + s] = s + 1


def level_sequences(n: int) -> Iterator[list[int]]:
    """Yield one canonical level sequence per free tree of order ``n``."""
    if n < 1:
        return
    if n == 1:
        yield [0]
        return
    L = initial_level_sequence(n)
    while True:
        make_free(L)
        yield list(L)
        if not next_rooted(L):
            return


def parents_of(L: list[int]) -> list[int]:
    par = [-1] * len(L)
    last = [0] * (len(L) + 1)
    for i in range(1, len(L)):
        par[i] = last[L[i] - 1]
        last[L[i]] = i
    return par


def _degrees_sigma(L: list[int], par: list[int]) -> tuple[int, int]:
    n = len(L)
    deg = [1] * n
    deg[0] = 0
    for i in range(1, n):
        deg[par[i]] += 1
    s = 0
    for i in range(1, n):
        d = deg[i] - deg[par[i]]
        s += d * d
    return max(deg), s


def scan_sigma(n: int, lo: int, hi: int) -> tuple[int, int, list[list[int]]]:
    """Scan free trees of order ``n`` with ``lo <= max degree <= hi``.

    Returns ``(count, best_sigma, best_level_sequences)``; ``best_sigma`` is
    -1 when the class is empty.
    """
    count = 0
    best = -1
    winners: list[list[int]] = []
    for L in level_sequences(n):
        par = parents_of(L)
        dmax, s = _degrees_sigma(L, par)
        if dmax < lo or dmax > hi:
            continue
        count += 1
        if s > best:
            best = s
            winners = [L]
        elif s == best:
            winners.append(L)
    return count, best, winners


# --- integer-scaled slack sweeps -------------------------------------------
#
# For fixed delta, S(i, j) = delta*i*j*F(i, j) is an integer; comparisons
# between slack values are made on cleared denominators so every check is
# exact. The numpy paths stay within int64 for delta <= INT64_DELTA_LIMIT.


def _grid(delta: int, hi: int | None = None):
    hi = delta if hi is None else hi
    r = np.arange(1, hi + 1, dtype=np.int64)
    i, j = np.meshgrid(r, r, indexing="ij")
    keep = i <= j
    return i[keep], j[keep]


def _scaled_np(i, j, delta: int):
    d = np.int64(delta)
    ij = i * j
    return d * (4 * d - 6) * (i + j) + ij * (d * (d * d - 6 * d + 3) + 6) - d * ij * (i - j) ** 2


def _scaled_int(i: int, j: int, d: int) -> int:
    ij = i * j
    return d * (4 * d - 6) * (i + j) + ij * (d * (d * d - 6 * d + 3) + 6) - d * ij * (i - j) ** 2


def slack_pattern_witnesses(delta: int) -> list[tuple[int, int]]:
    """Pairs where the slack is negative, or zero off ``{(1,d), (2,d)}``, or nonzero on it."""
    if delta <= INT64_DELTA_LIMIT:
        i, j = _grid(delta)
        s = _scaled_np(i, j, delta)
        tight = (j == delta) & (i <= 2)
        bad = (s < 0) | ((s == 0) != tight)
        return list(zip(i[bad].tolist(), j[bad].tolist()))
    out = []
    for a in range(1, delta + 1):
        for b in range(a, delta + 1):
            s = _scaled_int(a, b, delta)
            if s < 0 or (s == 0) != (b == delta and a <= 2):
                out.append((a, b))
    return out


def minima_scan(delta: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]], list[int]]:
    """Check where ``j -> F(i, j)`` attains its minimum.

    For ``3 <= i <= t`` the minimum over ``1 <= j <= delta`` must include
    ``j = delta``; for ``t < i < delta`` the minimum over ``1 <= j < delta``
    must include ``j = 2``. Returns ``(witnesses, ties, flips)`` where ties
    are other minimizers and flips lists the ``i`` in the second range for
    which ``j = delta`` would lie strictly below the value at ``j = 2``.
    """
    d = delta
    A = 4 * d - 6
    t = (d + 3) // 2
    witnesses: list[tuple[int, int]] = []
    ties: list[tuple[int, int]] = []
    flips: list[int] = []
    js = np.arange(1, d, dtype=np.int64)
    use_np = d <= INT64_DELTA_LIMIT
    for i in range(3, d):
        if i <= t:
            ref = d
        else:
            ref = 2
        # ref * j * (g(j) - g(ref)) where g(j) = A/j - (i-j)**2
        if use_np:
            diff = A * (ref - js) - ref * js * ((i - js) ** 2 - (i - ref) ** 2)
            for j in js[diff < 0].tolist():
                witnesses.append((i, j))
            for j in js[(diff == 0) & (js != ref)].tolist():
                ties.append((i, j))
        else:
            for j in range(1, d):
                diff = A * (ref - j) - ref * j * ((i - j) ** 2 - (i - ref) ** 2)
                if diff < 0:
                    witnesses.append((i, j))
                elif diff == 0 and j != ref:
                    ties.append((i, j))
        if ref == 2:
            at_delta = A * (2 - d) - 2 * d * ((i - d) ** 2 - (i - 2) ** 2)
            if at_delta < 0:
                flips.append(i)
    return witnesses, ties, flips


def pair_floor_witnesses(delta: int) -> list[tuple[int, int]]:
    """Pairs ``p <= q <= t`` with ``F(p, q) < F(3, delta)``."""
    d = delta
    A = 4 * d - 6
    t = (d + 3) // 2
    if d <= INT64_DELTA_LIMIT:
        p, q = _grid(d, t)
        # 3*d*p*q * (F(p,q) - F(3,d))
        diff = A * (3 * d * q + 3 * d * p - d * p * q - 3 * p * q) - 3 * d * p * q * (
            (p - q) ** 2 - (d - 3) ** 2
        )
        bad = diff < 0
        return list(zip(p[bad].tolist(), q[bad].tolist()))
    out = []
    for a in range(1, t + 1):
        for b in range(a, t + 1):
            diff = A * (3 * d * b + 3 * d * a - d * a * b - 3 * a * b) - 3 * d * a * b * (
                (a - b) ** 2 - (d - 3) ** 2
            )
            if diff < 0:
                out.append((a, b))
    return out
