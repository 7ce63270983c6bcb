"""Exact rational linear programming.

The simplex kernel is compiled from Cython when the extension is available
and falls back to an identical pure Python kernel otherwise.  Set
``SUPERTROP_PURE=1`` to force the fallback.
"""

import os

from . import _simplex_py

BACKEND = "python"
_compiled = None
if not os.environ.get("SUPERTROP_PURE"):
    try:
        from . import _simplex as _compiled
        BACKEND = "cython"
    except ImportError:
        _compiled = None


def set_backend(name):
    """Switch between "cython" and "python"; returns the previous name."""
    global BACKEND
    if name not in ("cython", "python"):
        raise ValueError("unknown backend %r" % name)
    if name == "cython" and _compiled is None:
        raise ValueError("compiled kernel is not built")
    prev, BACKEND = BACKEND, name
    return prev


def solve_std(rows, rhs, cost):
    if BACKEND == "cython":
        try:
            return _compiled.solve_std(rows, rhs, cost)
        except OverflowError:
            pass
    return _simplex_py.solve_std(rows, rhs, cost)


from .core import (  # noqa: E402
    LPResult, maximize, minimize, feasible_point, is_feasible,
)
from .fm import fm_feasible  # noqa: E402

__all__ = [
    "BACKEND", "set_backend", "solve_std", "LPResult", "maximize", "minimize",
    "feasible_point", "is_feasible", "fm_feasible",
]
