import json
from fractions import Fraction

import pytest

from sigmatrees.certificate import DomainError
from sigmatrees.constructions import canonical_form, tt1_opt, tt0_opt
from sigmatrees.enumeration import (
    SizeGuardError,
    enumerate_free_trees,
    orders_for_k_range,
    reports_to_csv,
    residue_scan,
    search_sigma_max,
)
from sigmatrees.prufer import (
    free_trees_via_prufer,
    prufer_decode,
    prufer_encode,
    reduced_sequences,
)
from sigmatrees.tree import profile, sigma

# OEIS A000055
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def test_prufer_roundtrip():
    for seq in [(0, 0, 0), (3, 1, 1), (4, 4, 0)]:
        assert tuple(prufer_encode(prufer_decode(seq, 5))) == seq


@pytest.mark.parametrize("n", range(1, 9))
def test_reduced_prufer_reaches_every_class(n):
    assert set(free_trees_via_prufer(n, reduced=False)) == set(free_trees_via_prufer(n))


def test_reduced_sequences_shape():
    for s in reduced_sequences(7):
        assert all(a <= b for a, b in zip(s, s[1:]))
        assert all(v > t for t, v in enumerate(s))


def test_counts_n7_n10_against_oracle():
    assert len(free_trees_via_prufer(7)) == 11
    assert len(free_trees_via_prufer(10)) == 106
    assert sum(1 for _ in enumerate_free_trees(7)) == 11
    assert sum(1 for _ in enumerate_free_trees(10)) == 106


@pytest.mark.parametrize("n", range(1, 17))
def test_counts_match_known_sequence(n):
    assert sum(1 for _ in enumerate_free_trees(n)) == FREE_TREE_COUNTS[n - 1]


def test_degree_cap():
    assert [sorted(t.degrees()) for t in enumerate_free_trees(5, 2)] == [[1, 1, 2, 2, 2]]
    for t in enumerate_free_trees(11, 3):
        assert t.max_degree() <= 3


@pytest.mark.parametrize("n, cap", [(9, 4), (10, 3), (8, None)])
def test_capped_classes_match_oracle(n, cap):
    ours = {canonical_form(t) for t in enumerate_free_trees(n, cap)}
    assert ours == set(free_trees_via_prufer(n, max_degree=cap))


def test_search_n9():
    r = search_sigma_max(9, 4)
    assert r.sigma_max == 62
    assert [e.canonical for e in r.extremal_trees] == [canonical_form(tt1_opt(2, 4))]
    assert r.bound_status == "tight" and r.gap == 0


def test_search_n12():
    r = search_sigma_max(12, 4)
    assert r.sigma_max == 80
    assert {e.canonical for e in r.extremal_trees} == {canonical_form(tt0_opt(2, 4, 3))}


def test_search_n10_strict():
    r = search_sigma_max(10, 4)
    assert r.sigma_max == 62 < Fraction(137, 2)
    assert r.bound_status == "gap" and r.gap == Fraction(13, 2)
    assert r.theorem_value is None


def test_search_against_prufer_bruteforce():
    for n, d in [(8, 4), (9, 4), (10, 5), (11, 5)]:
        pool = [t for t in free_trees_via_prufer(n, max_degree=d).values() if t.max_degree() == d]
        best = max(sigma(t) for t in pool)
        r = search_sigma_max(n, d)
        assert r.sigma_max == best
        assert r.tree_count == len(pool)
        assert {e.canonical for e in r.extremal_trees} == {
            canonical_form(t) for t in pool if sigma(t) == best
        }


def test_at_most_filter_bound_holds():
    for n in range(5, 15):
        r = search_sigma_max(n, 4, "at-most")
        assert r.sigma_max <= r.bound
        assert r.tree_count >= search_sigma_max(n, 4).tree_count


def test_search_guards():
    with pytest.raises(SizeGuardError, match="override"):
        search_sigma_max(25, 4)
    with pytest.raises(DomainError):
        search_sigma_max(4, 4)
    with pytest.raises(DomainError):
        search_sigma_max(9, 4, "sometimes")


def test_search_deterministic():
    assert search_sigma_max(13, 4).to_json() == search_sigma_max(13, 4).to_json()


def test_report_embeds_reverifiable_data():
    from sigmatrees.tree import parse_graph6

    d = json.loads(search_sigma_max(11, 5).to_json())
    assert d["bound"] == "146" and d["sigma_max"] == 146
    for e in d["extremal_trees"]:
        assert sigma(parse_graph6(e["graph6"])) == d["sigma_max"]


def test_residue_scan_delta4():
    reports = residue_scan(4, range(9, 17))
    assert len(reports) == 8
    by_n = {r.n: r for r in reports}
    for n in (9, 12, 13, 16):
        assert by_n[n].sigma_max == by_n[n].theorem_value
    for n in (9, 13):
        assert by_n[n].bound_status == "tight"
    csv_text = reports_to_csv(reports)
    assert csv_text.splitlines()[0].startswith("n,delta,residue")
    assert len(csv_text.splitlines()) == 9


def test_residue_scan_delta5_n11():
    (r,) = residue_scan(5, [11])
    assert r.bound_status == "tight"
    assert [e.canonical for e in r.extremal_trees] == [canonical_form(tt1_opt(2, 5))]


def test_residue_scan_smallest_delta4():
    (r,) = residue_scan(4, [6])
    assert r.tree_count == 1 and r.sigma_max == 32


def test_orders_for_k_range():
    assert orders_for_k_range(4, 2, 3) == list(range(9, 17))
