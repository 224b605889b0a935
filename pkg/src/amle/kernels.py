"""Backend selection for the hot loops.

The compiled extension ``amle._kernels`` is used when it imports; otherwise
the numpy implementations in ``amle._kernels_py`` are used.  Setting the
environment variable ``AMLE_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("AMLE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

ar1_path = _impl.ar1_path
laurent_eval = _impl.laurent_eval
log_bessel_i_vec = _impl.log_bessel_i_vec
