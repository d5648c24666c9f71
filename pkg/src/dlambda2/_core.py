"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python twins in ``_pure`` take over. Set ``DLAMBDA2_PURE=1`` to force
the fallback.
"""

import os

from . import _pure

if os.environ.get("DLAMBDA2_PURE", "") not in ("", "0"):
    kernels = _pure
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "compiled"
    except ImportError:  # extension not built
        kernels = _pure
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
