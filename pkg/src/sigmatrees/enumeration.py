"""Exhaustive free-tree enumeration and brute-force sigma maximization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Literal

from . import kernels
from .certificate import (
    DomainError,
    NotCovered,
    exact_sigma_max,
    format_rational,
    lp_bound,
)
from .constructions import CanonicalForm, canonical_form
from .tree import Tree, write_graph6

DegreeFilter = Literal["exact", "at-most"]

#: largest order searched without an explicit override
SIZE_GUARD = 24


class SizeGuardError(DomainError):
    pass


def tree_from_level_sequence(L: list[int]) -> Tree:
    return Tree.from_parents(kernels.parents_of(L))


def enumerate_free_trees(n: int, max_degree: int | None = None) -> Iterator[Tree]:
    """Yield one tree per isomorphism class of order ``n``.

    With ``max_degree`` only trees whose maximum degree is at most that
    value are produced.
    """
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    cap = n if max_degree is None else max_degree
    for L in kernels.level_sequences(n):
        t = tree_from_level_sequence(L)
        if n == 1 or t.max_degree() <= cap:
            yield t


@dataclass(frozen=True)
class ExtremalTree:
    canonical: CanonicalForm
    graph6: str
    degree_set: tuple[int, ...]


@dataclass
class SearchReport:
    n: int
    delta: int
    degree_filter: str
    tree_count: int
    sigma_max: int
    extremal_trees: list[ExtremalTree]
    bound: Fraction | None
    theorem_value: Fraction | None
    notes: list[str] = field(default_factory=list)

    @property
    def bound_status(self) -> str | None:
        if self.bound is None:
            return None
        return "tight" if self.sigma_max == self.bound else "gap"

    @property
    def gap(self) -> Fraction | None:
        return None if self.bound is None else self.bound - self.sigma_max

    @property
    def degree_sets(self) -> list[tuple[int, ...]]:
        return sorted({e.degree_set for e in self.extremal_trees})

    def to_dict(self) -> dict:
        opt = lambda x: None if x is None else format_rational(x)  # noqa: E731
        return {
            "n": self.n,
            "delta": self.delta,
            "residue": self.n % self.delta,
            "degree_filter": self.degree_filter,
            "tree_count": self.tree_count,
            "sigma_max": self.sigma_max,
            "bound": opt(self.bound),
            "bound_status": self.bound_status,
            "gap": opt(self.gap),
            "theorem_value": opt(self.theorem_value),
            "extremal_count": len(self.extremal_trees),
            "extremal_trees": [
                {"graph6": e.graph6, "canonical": str(e.canonical), "degrees": list(e.degree_set)}
                for e in self.extremal_trees
            ],
            "degree_sets": [list(s) for s in self.degree_sets],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


CSV_FIELDS = [
    "n",
    "delta",
    "residue",
    "degree_filter",
    "tree_count",
    "sigma_max",
    "bound",
    "bound_status",
    "gap",
    "theorem_value",
    "extremal_count",
    "degree_sets",
    "extremal_graph6",
]


def reports_to_csv(reports: Iterable[SearchReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = r.to_dict()
        row["degree_sets"] = " ".join("-".join(map(str, s)) for s in r.degree_sets)
        row["extremal_graph6"] = " ".join(e.graph6 for e in r.extremal_trees)
        writer.writerow({k: ("" if row[k] is None else row[k]) for k in CSV_FIELDS})
    return buf.getvalue()


def search_sigma_max(
    n: int,
    delta: int,
    degree_filter: DegreeFilter = "exact",
    override_size_guard: bool = False,
) -> SearchReport:
    """Brute-force maximum of sigma over free trees of order ``n``.

    ``degree_filter="exact"`` restricts to maximum degree exactly ``delta``,
    ``"at-most"`` to maximum degree at most ``delta``. Every extremal
    isomorphism class is kept.
    """
    if degree_filter not in ("exact", "at-most"):
        raise DomainError(f"unknown degree filter {degree_filter!r}")
    if delta < 1 or delta > n - 1:
        raise DomainError(f"no tree of order n={n} has maximum degree delta={delta}")
    if n > SIZE_GUARD and not override_size_guard:
        raise SizeGuardError(
            f"n={n} exceeds the enumeration guard n<={SIZE_GUARD}; "
            "pass override_size_guard (CLI: --override-size-guard) to run it anyway"
        )
    lo = delta if degree_filter == "exact" else 0
    count, best, winners = kernels.scan_sigma(n, lo, delta)
    extremal = []
    for L in winners:
        t = tree_from_level_sequence(L)
        extremal.append(
            ExtremalTree(canonical_form(t), write_graph6(t), tuple(sorted(set(t.degrees()))))
        )
    extremal.sort(key=lambda e: e.canonical)

    bound = theorem = None
    notes: list[str] = []
    if delta >= 4:
        bound = lp_bound(n, delta)
        value = exact_sigma_max(n, delta)
        if isinstance(value, NotCovered):
            notes.append("residue not covered by a closed form; LP bound is strict")
        else:
            theorem = value
        if n == 2 * delta:
            notes.append(
                "k=1 (n=2*delta): the equality case's m_{2,delta}>0 clause does not "
                "apply; extremal trees recorded from the search"
            )
    return SearchReport(
        n=n,
        delta=delta,
        degree_filter=degree_filter,
        tree_count=count,
        sigma_max=best,
        extremal_trees=extremal,
        bound=bound,
        theorem_value=theorem,
        notes=notes,
    )


def residue_scan(
    delta: int,
    orders: Iterable[int],
    degree_filter: DegreeFilter = "exact",
    override_size_guard: bool = False,
) -> list[SearchReport]:
    """One :class:`SearchReport` per order, in the order given."""
    orders = list(orders)
    for n in orders:
        if n > SIZE_GUARD and not override_size_guard:
            raise SizeGuardError(f"scan includes n={n} beyond the guard n<={SIZE_GUARD}")
    return [search_sigma_max(n, delta, degree_filter, override_size_guard) for n in orders]


def orders_for_k_range(delta: int, k_lo: int, k_hi: int) -> list[int]:
    """Orders ``delta*k + 1 .. delta*(k+1)`` for every ``k`` in ``[k_lo, k_hi]``."""
    return [n for k in range(k_lo, k_hi + 1) for n in range(delta * k + 1, delta * (k + 1) + 1)]
