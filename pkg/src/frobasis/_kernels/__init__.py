"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; otherwise
the NumPy implementations take over. ``FROBASIS_PURE_PYTHON=1`` forces
the fallback (useful for the backend benchmark and for debugging).
"""

import os

from . import pykernels

if os.environ.get("FROBASIS_PURE_PYTHON", "") not in ("", "0"):
    _impl = pykernels
    BACKEND = "python"
else:
    try:
        from . import fastkernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = pykernels
        BACKEND = "python"

jacobi_eigh = _impl.jacobi_eigh
aberth_roots = _impl.aberth_roots
power_norm = _impl.power_norm

__all__ = ["BACKEND", "jacobi_eigh", "aberth_roots", "power_norm", "pykernels"]
