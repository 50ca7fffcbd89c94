"""Backend selection for the scan kernels.

The compiled extension is used when built; the pure-Python twin otherwise.
Set GLMN_WEIGHTS_PURE=1 to force the pure backend (useful for debugging and
for the backend benchmark).
"""

from __future__ import annotations

import os

from . import _pykernels as pure

try:
    from . import _speedups as compiled
except ImportError:  # extension not built; pure fallback only
    compiled = None


def compiled_available() -> bool:
    return compiled is not None


def active_backend():
    if os.environ.get("GLMN_WEIGHTS_PURE", "0") not in ("", "0"):
        return pure
    return compiled if compiled is not None else pure
