"""Kernel backend selection.

The compiled extension is preferred when importable; the numpy twin is the
fallback.  Override with DRIVENQUBIT_BACKEND=python|cython (``cython`` raises
if the extension is missing, instead of silently degrading).
"""

from __future__ import annotations

import os

_choice = os.environ.get("DRIVENQUBIT_BACKEND", "auto").lower()

if _choice not in ("auto", "cython", "python"):
    raise ValueError(f"DRIVENQUBIT_BACKEND must be auto|cython|python, got {_choice!r}")

if _choice == "python":
    from . import _amp_python as _impl

    BACKEND = "python"
else:
    try:
        from . import _amp_cython as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        if _choice == "cython":
            raise
        from . import _amp_python as _impl

        BACKEND = "python"

amp_damp = _impl.amp_damp


def backend_name() -> str:
    """Name of the kernel implementation selected at import time."""
    return BACKEND
