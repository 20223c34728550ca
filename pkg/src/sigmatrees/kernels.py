"""Select the compiled kernels when built, else the pure-Python ones.

Set ``SIGMATREES_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("SIGMATREES_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

level_sequences = _impl.level_sequences
scan_sigma = _impl.scan_sigma
slack_pattern_witnesses = _impl.slack_pattern_witnesses
minima_scan = _impl.minima_scan
pair_floor_witnesses = _impl.pair_floor_witnesses
parents_of = _pykernels.parents_of
