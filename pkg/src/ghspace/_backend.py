"""Kernel selection.

The compiled ``_kernels`` extension is used when importable; otherwise the
numpy twin in ``_kernels_py``.  Set ``GHSPACE_PURE_PYTHON=1`` to force the
fallback.
"""
import os

from . import _kernels_py

COMPILED = False
kernels = _kernels_py

if not os.environ.get("GHSPACE_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        kernels = _compiled
        COMPILED = True

BACKEND = "cython" if COMPILED else "python"
