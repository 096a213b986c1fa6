"""Select the compiled kernels when available, otherwise the Python ones.

Set ``COEDGE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
charpoly_mod = _kernels_py.charpoly_mod
is_max_canonical = _kernels_py.is_max_canonical

if os.environ.get("COEDGE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None
    if _compiled is not None:
        BACKEND = "cython"
        charpoly_mod = _compiled.charpoly_mod
        is_max_canonical = _compiled.is_max_canonical

IMPLEMENTATIONS = {"python": _kernels_py}
try:
    from . import _kernels as _c

    IMPLEMENTATIONS["cython"] = _c
except ImportError:
    pass

__all__ = ["BACKEND", "IMPLEMENTATIONS", "charpoly_mod", "is_max_canonical"]
