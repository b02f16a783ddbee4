"""Kernel backend selection.

Prefers the compiled Cython kernels when the extension was built; falls back
to the pure-Python reference implementation otherwise. Set the environment
variable ``DICTLP_PURE_PYTHON=1`` to force the fallback (useful for
benchmarking and for debugging kernel parity).
"""

from __future__ import annotations

import os

if os.environ.get("DICTLP_PURE_PYTHON"):
    from dictlp import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from dictlp import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from dictlp import _pykernels as _impl  # type: ignore[no-redef]

        BACKEND = "python"

rref = _impl.rref
pivot_update = _impl.pivot_update
