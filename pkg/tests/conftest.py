import random

import pytest
from hypothesis import strategies as st

from sigmatrees.prufer import prufer_decode
from sigmatrees.tree import Tree


@st.composite
def trees(draw, min_n=1, max_n=40):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return Tree.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(seq, n)


def random_capped_tree(rng: random.Random, n: int, delta: int) -> Tree:
    """Random tree of order ``n`` with maximum degree exactly ``delta``.

    Starts from a star with ``delta`` leaves and attaches each further vertex
    to a uniformly chosen vertex that still has room.
    """
    edges = [(0, v) for v in range(1, delta + 1)]
    deg = [delta] + [1] * delta
    for v in range(delta + 1, n):
        u = rng.choice([w for w in range(v) if deg[w] < delta])
        edges.append((u, v))
        deg[u] += 1
        deg.append(1)
    perm = list(range(n))
    rng.shuffle(perm)
    return Tree.from_edges(n, [(perm[a], perm[b]) for a, b in edges])


@pytest.fixture
def rng():
    return random.Random(20261017)


ACCEPTANCE: dict[str, list[tuple[bool, str]]] = {}


def record(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(criterion, []).append((ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE, key=lambda c: int(c.split()[0][2:])):
        rows = ACCEPTANCE[criterion]
        ok = all(r[0] for r in rows)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}")
        for good, detail in rows:
            if not good:
                terminalreporter.write_line(f"        failed: {detail}")
