"""Backend selection for the exhaustive search kernels.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py`` module. Setting ``TRANSITIVITY_PURE_PYTHON=1``
forces the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("TRANSITIVITY_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"
MAX_VERTICES = _impl.MAX_VERTICES
transitive_order = _impl.transitive_order
grundy_order = _impl.grundy_order


def backends():
    """All importable backends by name, for parity tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["compiled"] = _kernels
    return out
