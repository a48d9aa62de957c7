"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
fallback. SEGCOVER_PURE=1 forces the fallback; benchmarks/bench_kernels.py
compares the two.
"""

import os

if os.environ.get("SEGCOVER_PURE") == "1":
    from . import _kernels_py as K

    BACKEND = "python"
else:
    try:
        from . import _kernels as K  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as K

        BACKEND = "python"

__all__ = ["K", "BACKEND"]
