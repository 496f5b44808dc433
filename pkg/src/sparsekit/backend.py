"""Kernel backend selection: numba-jitted loops or pure numpy.

The hot conv-lowering kernels in :mod:`sparsekit.kernels` exist in two
variants that produce bit-identical results. The jitted variant is used
when numba imports cleanly; setting the environment variable
``SPARSEKIT_DISABLE_NUMBA=1`` before import forces the numpy fallback
(useful for debugging and for the backend benchmark).
"""

import os

NUMBA_DISABLED = os.environ.get("SPARSEKIT_DISABLE_NUMBA", "0") == "1"

if not NUMBA_DISABLED:
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False
else:
    NUMBA_ENABLED = False

if not NUMBA_ENABLED:

    def njit(*args, **kwargs):  # noqa: D103 - decorator stub, numba absent/disabled
        def wrap(func):
            return func

        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return wrap


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"
