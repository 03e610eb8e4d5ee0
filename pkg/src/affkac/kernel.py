"""Kernel selection: compiled extension when available, pure Python otherwise.

The two implementations are behavioural twins; ``AFFKAC_PURE=1`` forces the
pure-Python one (useful for benchmarking and debugging).
"""

import os

from . import _pykernel

if os.environ.get("AFFKAC_PURE") == "1":
    _impl = _pykernel
else:
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernel

USING_COMPILED = _impl is not _pykernel

freudenthal_mults = _impl.freudenthal_mults
convolve_truncated = _impl.convolve_truncated
