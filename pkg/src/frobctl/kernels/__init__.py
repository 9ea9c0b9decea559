"""Hot kernels with a compiled core and a pure-Python fallback.

The Cython extension ``_fast`` is used when it has been built; set
``FROBCTL_PURE_PYTHON=1`` to force the fallback.  Both backends expose the
same functions and return identical results.
"""

from __future__ import annotations

import os

from . import _pure

pure = _pure

if os.environ.get("FROBCTL_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl
    except ImportError:  # extension not built
        _impl = _pure

fast = _impl if _impl is not _pure else None
BACKEND = _impl.BACKEND

convolve = _impl.convolve


def enumerate_paths(simple_roots, lam, denom, shift, cap, depth_bounds=None):
    if _impl is _pure:
        return _pure.enumerate_paths(simple_roots, lam, denom, shift, cap)
    return _impl.enumerate_paths(simple_roots, lam, denom, shift, cap, depth_bounds)


__all__ = ["BACKEND", "convolve", "enumerate_paths", "fast", "pure"]
