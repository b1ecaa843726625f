"""Kernel backend selection.

Imports the compiled kernels when available, otherwise the pure-Python
twin.  POLYVAL_PURE=1 forces the fallback (useful for benchmarking and for
verifying that both backends agree).
"""

import os

from . import _kernels_py

if os.environ.get("POLYVAL_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _kernels_py

poly_mul = _impl.poly_mul
poly_rem = _impl.poly_rem
series_mul = _impl.series_mul
BACKEND = _impl.BACKEND


def available_backends():
    """All importable kernel backends, for tests and benchmarks."""
    backends = {"python": _kernels_py}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        backends["cython"] = _speedups
    return backends
