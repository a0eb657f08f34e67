"""Select the reduction kernel at import time.

The compiled extension ``vanideal._ckernel`` is used when it has been built;
otherwise the pure-Python kernel is used.  ``VANIDEAL_KERNEL=python`` forces
the fallback, ``VANIDEAL_KERNEL=cython`` makes a missing extension an error.
"""

import functools
import os

from . import _pykernel

_choice = os.environ.get("VANIDEAL_KERNEL", "auto").lower()

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None
    if _choice == "cython":
        raise

if _ckernel is not None and _choice != "python":
    active = _ckernel
else:
    active = _pykernel


def available():
    """Names of the kernels that can be loaded in this environment."""
    return ["python"] + (["cython"] if _ckernel is not None else [])


def get(name=None):
    if name is None:
        return active
    if name == "python":
        return _pykernel
    if name == "cython":
        if _ckernel is None:
            raise ImportError("compiled kernel vanideal._ckernel is not built")
        return _ckernel
    raise ValueError(f"unknown kernel {name!r}")


def use(name):
    """Make ``name`` ("python" or "cython") the default kernel; returns the previous name."""
    global active
    previous = active.NAME
    active = get(name)
    return previous


def current():
    return active.NAME


def context(field, nvars, order, name=None):
    """Kernel context for a field, variable count and monomial order."""
    return _context(field, nvars, order, name or active.NAME)


@functools.lru_cache(maxsize=256)
def _context(field, nvars, order, name):
    return get(name).Context(field, nvars, order.weights(nvars))
