"""Closed-form LP bound, dual certificate and penalty for sigma over trees.

For trees of order ``n`` with maximum degree ``delta`` the LP over edge
degree-pair counts has dual variables ``lam = 4*delta - 6`` and
``mu = delta**2 - 6*delta + 3 + 6/delta``. The dual slack of pair ``(i, j)`` is

    F(i, j) = lam * (1/i + 1/j) + mu - (i - j)**2

and every tree satisfies ``sigma(T) = lam*n + mu*(n-1) - sum F(i,j) m_ij``.
All arithmetic here is exact (:class:`fractions.Fraction`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .tree import DegreeProfile

Rational = Fraction

#: certificates up to this delta carry a full precomputed slack table
TABLE_LIMIT = 1000


class DomainError(ValueError):
    """Parameters outside the range where a result is defined."""


def format_rational(x: Fraction | int) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when integral."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def lam(delta: int) -> int:
    return 4 * delta - 6


def mu(delta: int) -> Fraction:
    return Fraction(delta * delta - 6 * delta + 3) + Fraction(6, delta)


def slack(i: int, j: int, delta: int) -> Fraction:
    """Dual slack ``F(i, j)`` for the certificate of ``delta``; symmetric in ``i, j``."""
    return lam(delta) * (Fraction(1, i) + Fraction(1, j)) + mu(delta) - (i - j) ** 2


def scaled_slack(i: int, j: int, delta: int) -> int:
    """``delta * i * j * F(i, j)`` as an exact integer (same sign as ``F``)."""
    ij = i * j
    return (
        delta * (4 * delta - 6) * (i + j)
        + ij * (delta * (delta * delta - 6 * delta + 3) + 6)
        - delta * ij * (i - j) ** 2
    )


@dataclass(frozen=True)
class DualCertificate:
    delta: int
    lam: Fraction
    mu: Fraction
    table: Mapping[tuple[int, int], Fraction] | None

    @property
    def a_const(self) -> Fraction:
        return self.lam

    @property
    def b_const(self) -> Fraction:
        return self.mu

    def F(self, i: int, j: int) -> Fraction:
        if not (1 <= i <= self.delta and 1 <= j <= self.delta):
            raise DomainError(f"pair ({i}, {j}) outside 1..{self.delta}")
        if i > j:
            i, j = j, i
        if self.table is not None:
            return self.table[(i, j)]
        return slack(i, j, self.delta)

    @property
    def slack(self) -> Mapping[tuple[int, int], Fraction]:
        if self.table is not None:
            return self.table
        d = self.delta
        return {(i, j): slack(i, j, d) for i in range(1, d + 1) for j in range(i, d + 1)}

    def tight_pairs(self) -> set[tuple[int, int]]:
        return {key for key, value in self.slack.items() if value == 0}


@lru_cache(maxsize=64)
def certificate(delta: int) -> DualCertificate:
    if delta < 4:
        raise DomainError(f"certificate requires delta >= 4, got {delta}")
    table = None
    if delta <= TABLE_LIMIT:
        table = {
            (i, j): slack(i, j, delta)
            for i in range(1, delta + 1)
            for j in range(i, delta + 1)
        }
    cert = DualCertificate(delta=delta, lam=Fraction(lam(delta)), mu=mu(delta), table=table)
    _check_certificate(cert)
    return cert


def _check_certificate(cert: DualCertificate) -> None:
    d = cert.delta
    if cert.lam != 4 * d - 6:
        raise AssertionError("lambda != 4*delta - 6")
    # the tight pairs pin lambda and mu down uniquely
    if cert.F(1, d) != 0 or cert.F(2, d) != 0:
        raise AssertionError(f"slack not tight at (1,{d}) and (2,{d})")
    if cert.table is not None:
        for (i, j), value in cert.table.items():
            zero = (i, j) in ((1, d), (2, d))
            if value < 0 or (value == 0) != zero:
                raise AssertionError(f"slack pattern violated at ({i}, {j}): {value}")


@dataclass(frozen=True)
class LpOptimum:
    n: int
    delta: int
    m_1_delta: Fraction
    m_2_delta: Fraction
    sigma_bound: Fraction

    @property
    def integral(self) -> bool:
        return self.m_1_delta.denominator == 1 and self.m_2_delta.denominator == 1


def _check_order(n: int, delta: int) -> None:
    if delta < 4:
        raise DomainError(f"requires delta >= 4, got {delta}")
    if n <= delta:
        raise DomainError(f"no tree of order n={n} has maximum degree delta={delta}")


def lp_bound(n: int, delta: int) -> Fraction:
    return lam(delta) * n + mu(delta) * (n - 1)


def lp_optimum(n: int, delta: int) -> LpOptimum:
    _check_order(n, delta)
    m1 = Fraction((delta - 2) * n + delta + 2, delta)
    m2 = Fraction(2 * (n - delta - 1), delta)
    return LpOptimum(n=n, delta=delta, m_1_delta=m1, m_2_delta=m2, sigma_bound=lp_bound(n, delta))


def penalty(p: DegreeProfile, cert: DualCertificate) -> Fraction:
    if p.delta != cert.delta:
        raise DomainError(f"profile has delta={p.delta}, certificate has delta={cert.delta}")
    return sum((cert.F(i, j) * c for (i, j), c in p.pair_counts.items()), Fraction(0))


def sigma_via_decomposition(p: DegreeProfile, cert: DualCertificate, n: int) -> Fraction:
    """``lam*n + mu*(n-1) - P``; valid for profiles whose degrees are all ``<= cert.delta``."""
    if p.delta > cert.delta:
        raise DomainError(f"profile has delta={p.delta} > certificate delta={cert.delta}")
    pen = sum((cert.F(i, j) * c for (i, j), c in p.pair_counts.items()), Fraction(0))
    return cert.lam * n + cert.mu * (n - 1) - pen


@dataclass(frozen=True)
class NotCovered:
    """Residue outside {0, 1} mod delta: only the strict LP upper bound is known."""

    upper_bound: Fraction
    strict: bool = True


def exact_sigma_max(n: int, delta: int) -> Union[Fraction, NotCovered]:
    """Maximum sigma over trees of order ``n`` and maximum degree ``delta``.

    Known in closed form for ``n % delta`` in {0, 1}; otherwise returns
    :class:`NotCovered` carrying the LP bound.
    """
    _check_order(n, delta)
    bound = lp_bound(n, delta)
    r = n % delta
    if r == 1:
        return bound
    if r == 0:
        return bound - certificate(delta).F(delta, delta)
    return NotCovered(upper_bound=bound)
