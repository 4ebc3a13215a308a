"""Backend selection for the stepping kernel.

The compiled kernel is used when importable, unless ``RECTBILLIARD_PURE_PYTHON``
is set. Any call that overflows int64 is transparently rerun on the
pure-Python kernel, so results never depend on the backend.
"""
from __future__ import annotations

import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

CLOSED, VERTEX, TRUNCATED = _pykernel.CLOSED, _pykernel.VERTEX, _pykernel.TRUNCATED

_force_python = bool(os.environ.get("RECTBILLIARD_PURE_PYTHON"))

BACKEND = "cython" if (_ckernel is not None and not _force_python) else "python"


def compiled_available() -> bool:
    return _ckernel is not None


def run(x0, y0, dx, dy, w, h, max_steps, backend=None):
    """Dispatch one kernel call. ``backend`` may force "python" or "cython"."""
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        try:
            return _ckernel.run(x0, y0, dx, dy, w, h, max_steps)
        except OverflowError:
            pass
    return _pykernel.run(x0, y0, dx, dy, w, h, max_steps)
