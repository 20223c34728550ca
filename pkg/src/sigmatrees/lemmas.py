"""Exact sweeps confirming the structural facts about the dual slack ``F``.

Each check clears denominators and compares integers, so a pass is exact for
every ``delta`` in the scanned range.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .certificate import format_rational, scaled_slack, slack
from .enumeration import enumerate_free_trees
from .tree import DegreeProfile, profile

LEMMA_IDS = ("F-nonneg", "L4.2", "L4.3", "L4.4", "L4.5", "L4.6")


def split_point(delta: int) -> int:
    """``floor((delta + 3) / 2)``, the degree separating the two slack regimes."""
    return (delta + 3) // 2


@dataclass
class LemmaReport:
    lemma_id: str
    delta_range: tuple[int, int]
    status: str
    witnesses: list[tuple] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "vacuous-pass")

    def to_dict(self) -> dict:
        def fmt(x):
            if isinstance(x, (tuple, list)):
                return [fmt(y) for y in x]
            if isinstance(x, dict):
                return {k: fmt(v) for k, v in x.items()}
            if isinstance(x, int) or x is None or isinstance(x, str):
                return x
            return format_rational(x)

        return {
            "lemma_id": self.lemma_id,
            "delta_range": list(self.delta_range),
            "status": self.status,
            "witnesses": fmt(self.witnesses),
            "details": fmt(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _status(witnesses: list, vacuous_all: bool) -> str:
    if witnesses:
        return "fail"
    return "vacuous-pass" if vacuous_all else "pass"


def _deltas(delta_range: Iterable[int]) -> list[int]:
    deltas = list(delta_range)
    if not deltas or min(deltas) < 4:
        raise ValueError("delta range must be nonempty with every delta >= 4")
    return deltas


def verify_slack_pattern(delta_range: Iterable[int]) -> LemmaReport:
    """``F >= 0`` on all pairs ``1 <= i <= j <= delta``, zero exactly at ``(1,delta), (2,delta)``."""
    deltas = _deltas(delta_range)
    witnesses = []
    for d in deltas:
        for i, j in kernels.slack_pattern_witnesses(d):
            witnesses.append((d, i, j, slack(i, j, d)))
    return LemmaReport("F-nonneg", (deltas[0], deltas[-1]), _status(witnesses, False), witnesses)


def verify_minima_locations(delta_range: Iterable[int]) -> LemmaReport:
    """Where ``j -> F(i, j)`` is minimal: at ``j = delta`` for ``3 <= i <= t``,
    at ``j = 2`` (over ``j < delta``) for ``t < i < delta``.

    Ties are recorded, not failed. ``details["delta_beats_2"]`` lists the
    ``(delta, i)`` in the upper range where ``j = delta`` would undercut ``j = 2``.
    """
    deltas = _deltas(delta_range)
    witnesses, ties, flips = [], [], []
    for d in deltas:
        bad, tie, flip = kernels.minima_scan(d)
        t = split_point(d)
        for i, j in bad:
            ref = d if i <= t else 2
            witnesses.append((d, i, j, slack(i, j, d), slack(i, ref, d)))
        ties.extend((d, i, j) for i, j in tie)
        flips.extend((d, i) for i in flip)
    return LemmaReport(
        "L4.2",
        (deltas[0], deltas[-1]),
        _status(witnesses, False),
        witnesses,
        {"ties": ties, "delta_beats_2": flips},
    )


def verify_dominance(delta_range: Iterable[int]) -> tuple[LemmaReport, LemmaReport]:
    """``i*F(i,2) > F(d,d)`` for ``t < i < d`` and ``(d-1)*F(i,d) > F(d,d)`` for ``3 <= i <= t``."""
    deltas = _deltas(delta_range)
    w3, w4, vacuous3 = [], [], []
    for d in deltas:
        t = split_point(d)
        s_dd = scaled_slack(d, d, d)
        upper = range(t + 1, d)
        if not upper:
            vacuous3.append(d)
        for i in upper:
            # i*F(i,2) = S(i,2)/(2d),  F(d,d) = S(d,d)/d**3
            if scaled_slack(i, 2, d) * d * d <= 2 * s_dd:
                w3.append((d, i, i * slack(i, 2, d), slack(d, d, d)))
        for i in range(3, t + 1):
            # F(i,d) = S(i,d)/(i*d**2)
            if (d - 1) * d * scaled_slack(i, d, d) <= i * s_dd:
                w4.append((d, i, (d - 1) * slack(i, d, d), slack(d, d, d)))
    span = (deltas[0], deltas[-1])
    r3 = LemmaReport(
        "L4.3", span, _status(w3, len(vacuous3) == len(deltas)), w3, {"vacuous": vacuous3}
    )
    r4 = LemmaReport("L4.4", span, _status(w4, False), w4)
    return r3, r4


def verify_pair_floor(delta_range: Iterable[int]) -> LemmaReport:
    """``F(p, q) >= F(3, delta)`` for all ``1 <= p <= q <= t``."""
    deltas = _deltas(delta_range)
    witnesses = []
    for d in deltas:
        for p, q in kernels.pair_floor_witnesses(d):
            witnesses.append((d, p, q, slack(p, q, d), slack(3, d, d)))
    return LemmaReport("L4.6", (deltas[0], deltas[-1]), _status(witnesses, False), witnesses)


def block_qualifies(p: DegreeProfile) -> bool:
    d = p.delta
    if d < 4 or p.order % d:
        return False
    t = split_point(d)
    if any(p.count(i) for i in range(t + 1, d)):
        return False
    return p.m(d, d) == 0


def low_block_edges(p: DegreeProfile) -> int:
    """Number of edges with both endpoint degrees ``<= t``."""
    t = split_point(p.delta)
    return sum(c for (i, j), c in p.pair_counts.items() if j <= t)


def verify_block_bound(profiles: Iterable[DegreeProfile]) -> LemmaReport:
    """Trees with ``delta | n``, no degrees strictly between ``t`` and ``delta``
    and no ``(delta, delta)`` edge have at least ``delta - 1`` edges inside
    degrees ``<= t``. Profiles outside that hypothesis are skipped.
    """
    witnesses = []
    checked = skipped = 0
    seen = set()
    for p in profiles:
        if not block_qualifies(p):
            skipped += 1
            continue
        checked += 1
        seen.add(p.delta)
        e = low_block_edges(p)
        if e < p.delta - 1:
            witnesses.append((p.delta, p.order, e, dict(p.pair_counts)))
    span = (min(seen), max(seen)) if seen else (0, 0)
    return LemmaReport(
        "L4.5",
        span,
        _status(witnesses, checked == 0),
        witnesses,
        {"checked": checked, "skipped": skipped},
    )


def block_bound_profiles(max_order: int = 16, deltas: Iterable[int] | None = None):
    """Profiles of every tree with ``delta | n``, ``n <= max_order`` and maximum degree ``delta``."""
    for d in deltas if deltas is not None else range(4, max_order // 2 + 1):
        for n in range(2 * d, max_order + 1, d):
            for t in enumerate_free_trees(n, d):
                if t.max_degree() == d:
                    yield profile(t)


def verify_all(delta_range: Iterable[int], block_max_order: int = 16) -> list[LemmaReport]:
    deltas = _deltas(delta_range)
    r3, r4 = verify_dominance(deltas)
    block_deltas = [d for d in deltas if 2 * d <= block_max_order]
    return [
        verify_slack_pattern(deltas),
        verify_minima_locations(deltas),
        r3,
        r4,
        verify_block_bound(block_bound_profiles(block_max_order, block_deltas)),
        verify_pair_floor(deltas),
    ]
