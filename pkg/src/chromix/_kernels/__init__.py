"""Hot kernels: a compiled column reduction with a pure-Python fallback.

Set ``CHROMIX_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pyreduce

try:
    if os.environ.get("CHROMIX_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _reduce as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
reduce_boundary = _compiled.reduce_boundary if _compiled is not None else _pyreduce.reduce_boundary
reduce_boundary_python = _pyreduce.reduce_boundary
reduce_boundary_compiled = _compiled.reduce_boundary if _compiled is not None else None

__all__ = ["BACKEND", "reduce_boundary", "reduce_boundary_python", "reduce_boundary_compiled"]
