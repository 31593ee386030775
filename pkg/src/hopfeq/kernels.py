"""Backend selection for the mod-p hot kernels.

The compiled extension (_fastcore, Cython) is preferred; the pure-Python twin
(_purecore) is used when the extension was not built. Both expose the same
functions on flat row-major int matrices.
"""

from __future__ import annotations

try:
    from . import _fastcore as _impl

    BACKEND = "cython"
except ImportError:  # extension not built; fall back to the pure twin
    from . import _purecore as _impl

    BACKEND = "python"

EQUATION_CODES = {
    "hopf": _impl.EQ_HOPF,
    "pentagon": _impl.EQ_PENTAGON,
    "qybe": _impl.EQ_QYBE,
    "commutative": _impl.EQ_COMMUTATIVE,
    "cocommutative": _impl.EQ_COCOMMUTATIVE,
}

matmul_mod = _impl.matmul_mod
legs_mod = _impl.legs_mod
equation_holds_mod = _impl.equation_holds_mod
solutions_in_range_mod = _impl.solutions_in_range_mod


def backends():
    """All importable backends, for the benchmark and the twin tests."""
    from . import _purecore

    found = {"python": _purecore}
    try:
        from . import _fastcore

        found["cython"] = _fastcore
    except ImportError:
        pass
    return found
