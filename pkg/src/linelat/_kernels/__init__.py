"""Kernel backend selection.

The compiled Cython core is used when present; otherwise (or when the
LINELAT_PURE_PYTHON environment variable is set to a non-empty value) the
NumPy fallback is selected at import time.  Both expose the same functions:

    csr_matvec(indptr, indices, data, x, out)
    emin_over_subsets(n, eu, ev)
"""
import os

if os.environ.get("LINELAT_PURE_PYTHON"):
    from . import fallback as _impl

    BACKEND = "fallback"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import fallback as _impl

        BACKEND = "fallback"

csr_matvec = _impl.csr_matvec
emin_over_subsets = _impl.emin_over_subsets

__all__ = ["BACKEND", "csr_matvec", "emin_over_subsets"]
