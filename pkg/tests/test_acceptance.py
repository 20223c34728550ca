"""Exit criteria. Each prints one PASS/FAIL line in the terminal summary."""

import random
import time
from fractions import Fraction

import pytest

from sigmatrees.certificate import certificate, lp_bound, penalty
from sigmatrees.constructions import (
    canonical_form,
    double_star,
    tt0_family,
    tt0_opt,
    tt1_opt,
)
from sigmatrees.enumeration import enumerate_free_trees, search_sigma_max
from sigmatrees.lemmas import (
    verify_dominance,
    verify_minima_locations,
    verify_pair_floor,
    verify_slack_pattern,
)
from sigmatrees.prufer import free_trees_via_prufer
from sigmatrees.tree import profile, sigma

from .conftest import random_capped_tree, record

AC1 = "AC1 residue-1 tightness and unique tt1_opt class"
AC2 = "AC2 residue-0 value and tt0_opt family"
AC3 = "AC3 k=1 anomaly probe (value only)"
AC4 = "AC4 strict LP bound off residues 0 and 1"
AC5 = "AC5 certificate suite for delta 4..1000"
AC6 = "AC6 decomposition identity"
AC7 = "AC7 enumeration matches Prufer oracle"
AC8 = "AC8 handshake identities"

RESIDUE_ONE = [
    (d, n) for d in range(4, 9) for n in range(d + 1, 19) if n % d == 1
]


@pytest.mark.parametrize("delta, n", RESIDUE_ONE)
def test_ac1_residue_one(delta, n):
    start = time.perf_counter()
    r = search_sigma_max(n, delta, "exact")
    elapsed = time.perf_counter() - start
    k = (n - 1) // delta
    expected = lp_bound(n, delta)
    target = canonical_form(tt1_opt(k, delta))
    forms = [e.canonical for e in r.extremal_trees]
    value_ok = r.sigma_max == expected
    class_ok = forms == [target]
    record(
        AC1,
        value_ok and class_ok and elapsed < 120,
        f"delta={delta} n={n}: sigma_max={r.sigma_max} bound={expected} "
        f"extremal classes={len(forms)} (tt1_opt among them: {target in forms})",
    )
    assert elapsed < 120
    assert value_ok
    assert class_ok, f"{len(forms)} extremal classes, expected only tt1_opt({k},{delta})"


RESIDUE_ZERO = [(4, 12), (4, 16), (5, 15), (6, 18)]


@pytest.mark.parametrize("delta, n", RESIDUE_ZERO)
def test_ac2_residue_zero(delta, n):
    r = search_sigma_max(n, delta, "exact")
    cert = certificate(delta)
    expected = lp_bound(n, delta) - cert.F(delta, delta)
    k = n // delta - 1
    family = {canonical_form(t) for t in tt0_family(k, delta)}
    forms = {e.canonical for e in r.extremal_trees}
    value_ok = r.sigma_max == expected
    family_ok = forms == family
    record(
        AC2,
        value_ok and family_ok,
        f"delta={delta} n={n}: sigma_max={r.sigma_max} expected={expected} "
        f"extremal classes={len(forms)} family classes={len(family)} "
        f"family subset of extremal: {family <= forms}",
    )
    assert value_ok
    assert family_ok, f"extremal set has {len(forms)} classes, family has {len(family)}"


@pytest.mark.parametrize("delta, n", [(4, 8), (5, 10)])
def test_ac3_k1_anomaly(delta, n):
    r = search_sigma_max(n, delta, "exact")
    cert = certificate(delta)
    expected = lp_bound(n, delta) - cert.F(delta, delta)
    forms = [e.canonical for e in r.extremal_trees]
    flagged = any("m_{2,delta}>0" in note for note in r.notes)
    ok = r.sigma_max == expected and flagged
    record(
        AC3,
        ok,
        f"delta={delta} n={n}: sigma_max={r.sigma_max} expected={expected} "
        f"extremal={[e.graph6 for e in r.extremal_trees]} "
        f"double star: {forms == [canonical_form(double_star(delta))]}",
    )
    assert r.sigma_max == expected
    assert flagged


@pytest.mark.parametrize("n", [10, 11, 14, 15])
def test_ac4_strict_bound(n):
    r = search_sigma_max(n, 4, "exact")
    ok = r.sigma_max < r.bound and r.bound_status == "gap"
    record(AC4, ok, f"delta=4 n={n}: sigma_max={r.sigma_max} bound={r.bound} gap={r.gap}")
    assert ok
    assert r.gap > 0


def test_ac5_certificate_suite():
    deltas = range(4, 1001)
    start = time.perf_counter()
    reports = [verify_slack_pattern(deltas), verify_minima_locations(deltas)]
    reports += list(verify_dominance(deltas))
    reports.append(verify_pair_floor(deltas))
    elapsed = time.perf_counter() - start
    vacuous = reports[2].details["vacuous"]
    ok = all(r.status == "pass" for r in reports) and vacuous == [4, 5] and elapsed < 60
    record(
        AC5,
        ok,
        f"statuses={[(r.lemma_id, r.status) for r in reports]} "
        f"L4.3 vacuous={vacuous} elapsed={elapsed:.1f}s",
    )
    for r in reports:
        assert r.status == "pass", (r.lemma_id, r.witnesses[:5])
    assert vacuous == [4, 5]
    assert elapsed < 60


def test_ac6_decomposition_identity():
    checked = 0
    bad = []
    for n in range(5, 13):
        for t in enumerate_free_trees(n, 8):
            d = t.max_degree()
            if d < 4:
                continue
            cert = certificate(d)
            if sigma(t) != cert.lam * n + cert.mu * (n - 1) - penalty(profile(t), cert):
                bad.append(t)
            checked += 1
    rng = random.Random(606)
    for _ in range(10_000):
        d = rng.randint(4, 8)
        n = rng.randint(13, 80)
        t = random_capped_tree(rng, n, d)
        cert = certificate(d)
        if sigma(t) != cert.lam * n + cert.mu * (n - 1) - penalty(profile(t), cert):
            bad.append(t)
        checked += 1
    record(AC6, not bad, f"checked={checked} mismatches={len(bad)}")
    assert not bad


def test_ac7_enumeration_oracle():
    mismatches = []
    for n in range(1, 13):
        produced = [canonical_form(t) for t in enumerate_free_trees(n)]
        oracle = free_trees_via_prufer(n)
        distinct = len(set(produced)) == len(produced)
        if not distinct or set(produced) != set(oracle) or len(produced) != len(oracle):
            mismatches.append((n, len(produced), len(oracle), distinct))
    record(AC7, not mismatches, f"n=1..12 mismatches={mismatches}")
    assert not mismatches


def test_ac8_handshake_identities():
    corpus = []
    for n in range(1, 13):
        corpus.extend(enumerate_free_trees(n))
    for delta in range(4, 9):
        for k in range(1, 6):
            corpus.append(tt1_opt(k, delta))
            if k >= 2:
                corpus.extend(tt0_family(k, delta))
        corpus.append(double_star(delta))
    rng = random.Random(808)
    corpus.extend(random_capped_tree(rng, rng.randint(9, 80), rng.randint(4, 8)) for _ in range(2000))
    bad = []
    for t in corpus:
        p = profile(t)
        if p.identity_violations() or p.order != t.n:
            bad.append(t)
        elif t.n >= 2 and p.weighted_edge_sum() != Fraction(t.n):
            bad.append(t)
    record(AC8, not bad, f"trees={len(corpus)} violations={len(bad)}")
    assert not bad
