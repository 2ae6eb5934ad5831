"""Kernel selection: compiled extension when built, pure Python otherwise.

Set MAYMUST_PURE=1 to force the fallback (useful for benchmarking and for
checking the two implementations against each other).
"""

import os

if os.environ.get("MAYMUST_PURE", "") not in ("", "0"):
    from . import pure as _backend

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _backend  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import pure as _backend

        BACKEND = "pure"

scan_proper = _backend.scan_proper
gamma_step = _backend.gamma_step
