import pytest

from sigmatrees import _pykernels, kernels

ckernels = pytest.importorskip("sigmatrees._ckernels")


@pytest.mark.parametrize("n", range(1, 15))
def test_level_sequences_agree(n):
    assert list(ckernels.level_sequences(n)) == list(_pykernels.level_sequences(n))


@pytest.mark.parametrize("n", [1, 2, 5, 9, 13, 15])
@pytest.mark.parametrize("lo, hi", [(0, 99), (4, 4), (2, 3), (5, 5)])
def test_scan_agrees(n, lo, hi):
    assert ckernels.scan_sigma(n, lo, hi) == _pykernels.scan_sigma(n, lo, hi)


@pytest.mark.parametrize("delta", [4, 5, 6, 9, 37, 128, 4001])
def test_sweeps_agree(delta):
    if delta > 1000:
        # past the int64 limit both fall back to Python integers
        assert ckernels.pair_floor_witnesses(delta) == _pykernels.pair_floor_witnesses(delta) == []
        return
    assert ckernels.slack_pattern_witnesses(delta) == _pykernels.slack_pattern_witnesses(delta)
    assert ckernels.minima_scan(delta) == _pykernels.minima_scan(delta)
    assert ckernels.pair_floor_witnesses(delta) == _pykernels.pair_floor_witnesses(delta)


def test_backend_selected(monkeypatch):
    import os

    expected = "python" if os.environ.get("SIGMATREES_PURE") == "1" else "compiled"
    assert kernels.BACKEND == expected
