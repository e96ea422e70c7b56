"""Kernel backend selection.

The compiled kernels are optional; set TRACEFORMS_PURE=1 to force the
pure-Python fallback (used by the benchmark and backend-parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("TRACEFORMS_PURE", "").lower() not in ("", "0", "false", "no"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND: str = kernels.BACKEND
