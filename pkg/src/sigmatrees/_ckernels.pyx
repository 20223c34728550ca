# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the loops in ``_pykernels``; same signatures and results."""

from libc.stdlib cimport malloc, free

ctypedef long long i64

INT64_DELTA_LIMIT = 4000


cdef inline bint _next_rooted(int* L, int n, int p) nogil:
    cdef int q, i
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


cdef inline void _make_free(int* L, int n) nogil:
    cdef int m = 2, i, left_h = 0, rest_h = 0, left_len, rest_len, x, y, p, old, h, s
    cdef bint valid
    while m < n and L[m] != 1:
        m += 1
    for i in range(1, m):
        if L[i] - 1 > left_h:
            left_h = L[i] - 1
    for i in range(m, n):
        if L[i] > rest_h:
            rest_h = L[i]
    valid = rest_h >= left_h
    if valid and rest_h == left_h:
        left_len = m - 1
        rest_len = n - m + 1
        if left_len > rest_len:
            valid = False
        elif left_len == rest_len:
            for i in range(left_len):
                x = L[1 + i] - 1
                y = 0 if i == 0 else L[m + i - 1]
                if x != y:
                    valid = x < y
                    break
    if valid:
        return
    p = m - 1
    old = L[p]
    _next_rooted(L, n, p)
    if old > 2:
        m = 2
        while m < n and L[m] != 1:
            m += 1
        h = 0
        for i in range(1, m):
            if L[i] - 1 > h:
                h = L[i] - 1
        for s in range(h + 1):
            L[n - 1 - h + s] = s + 1


def level_sequences(int n):
    """Yield one canonical level sequence per free tree of order ``n``."""
    cdef int* L
    cdef int i
    if n < 1:
        return
    if n == 1:
        yield [0]
        return
    L = <int*>malloc(n * sizeof(int))
    try:
        for i in range(n // 2 + 1):
            L[i] = i
        for i in range(1, (n + 1) // 2):
            L[n // 2 + i] = i
        while True:
            _make_free(L, n)
            yield [L[i] for i in range(n)]
            if not _next_rooted(L, n, -1):
                return
    finally:
        free(L)


def scan_sigma(int n, int lo, int hi):
    """Scan free trees of order ``n`` with ``lo <= max degree <= hi``.

    Returns ``(count, best_sigma, best_level_sequences)``.
    """
    cdef int* L
    cdef int* par
    cdef int* deg
    cdef int* last
    cdef int i, dmax, d
    cdef i64 s, best = -1, count = 0
    winners = []
    if n < 2:
        return list_scan_small(n, lo, hi)
    L = <int*>malloc(n * sizeof(int))
    par = <int*>malloc(n * sizeof(int))
    deg = <int*>malloc(n * sizeof(int))
    last = <int*>malloc((n + 1) * sizeof(int))
    try:
        for i in range(n // 2 + 1):
            L[i] = i
        for i in range(1, (n + 1) // 2):
            L[n // 2 + i] = i
        while True:
            _make_free(L, n)
            last[0] = 0
            deg[0] = 0
            for i in range(1, n):
                par[i] = last[L[i] - 1]
                last[L[i]] = i
                deg[i] = 1
            for i in range(1, n):
                deg[par[i]] += 1
            dmax = 0
            for i in range(n):
                if deg[i] > dmax:
                    dmax = deg[i]
            if lo <= dmax <= hi:
                count += 1
                s = 0
                for i in range(1, n):
                    d = deg[i] - deg[par[i]]
                    s += d * d
                if s > best:
                    best = s
                    winners = [[L[i] for i in range(n)]]
                elif s == best:
                    winners.append([L[i] for i in range(n)])
            if not _next_rooted(L, n, -1):
                break
    finally:
        free(L)
        free(par)
        free(deg)
        free(last)
    return count, best, winners


def list_scan_small(int n, int lo, int hi):
    if n == 1 and lo <= 0 <= hi:
        return 1, 0, [[0]]
    return 0, -1, []


cdef inline i64 _scaled(i64 i, i64 j, i64 d) nogil:
    cdef i64 ij = i * j
    return d * (4 * d - 6) * (i + j) + ij * (d * (d * d - 6 * d + 3) + 6) - d * ij * (i - j) * (i - j)


def slack_pattern_witnesses(int delta):
    if delta > INT64_DELTA_LIMIT:
        from . import _pykernels
        return _pykernels.slack_pattern_witnesses(delta)
    cdef i64 d = delta, i, j, s
    cdef bint tight
    out = []
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            s = _scaled(i, j, d)
            tight = j == d and i <= 2
            if s < 0 or (s == 0) != tight:
                out.append((i, j))
    return out


def minima_scan(int delta):
    if delta > INT64_DELTA_LIMIT:
        from . import _pykernels
        return _pykernels.minima_scan(delta)
    cdef i64 d = delta, A = 4 * delta - 6, t = (delta + 3) // 2, i, j, ref, diff
    witnesses = []
    ties = []
    flips = []
    for i in range(3, d):
        ref = d if i <= t else 2
        for j in range(1, d):
            diff = A * (ref - j) - ref * j * ((i - j) * (i - j) - (i - ref) * (i - ref))
            if diff < 0:
                witnesses.append((i, j))
            elif diff == 0 and j != ref:
                ties.append((i, j))
        if ref == 2:
            diff = A * (2 - d) - 2 * d * ((i - d) * (i - d) - (i - 2) * (i - 2))
            if diff < 0:
                flips.append(i)
    return witnesses, ties, flips


def pair_floor_witnesses(int delta):
    if delta > INT64_DELTA_LIMIT:
        from . import _pykernels
        return _pykernels.pair_floor_witnesses(delta)
    cdef i64 d = delta, A = 4 * delta - 6, t = (delta + 3) // 2, p, q, diff
    out = []
    for p in range(1, t + 1):
        for q in range(p, t + 1):
            diff = A * (3 * d * q + 3 * d * p - d * p * q - 3 * p * q) - 3 * d * p * q * (
                (p - q) * (p - q) - (d - 3) * (d - 3)
            )
            if diff < 0:
                out.append((p, q))
    return out
