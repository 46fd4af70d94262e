"""Grid-scan kernels with import-time backend selection.

The compiled Cython backend is used when present; ``GAMMA_OPKIT_PURE=1``
forces the numpy reference implementation.  Both backends expose the same
two functions and are cross-checked in the test suite.
"""

import os

import numpy as np

from . import _ref

if os.environ.get("GAMMA_OPKIT_PURE"):
    _impl = _ref
    BACKEND = "python"
else:
    try:
        from . import _speed as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _ref
        BACKEND = "python"

_SPEED_MAX_N = 15
_SPEED_MAX_DEG = 15


def torus_symmetrize(thetas):
    thetas = np.ascontiguousarray(thetas, dtype=float)
    if _impl is not _ref and thetas.shape[1] > _SPEED_MAX_N:
        return _ref.torus_symmetrize(thetas)
    return np.asarray(_impl.torus_symmetrize(thetas))


def monomial_values(alphas, points):
    alphas = np.ascontiguousarray(alphas, dtype=np.int64)
    points = np.ascontiguousarray(points, dtype=complex)
    if _impl is not _ref and (alphas.shape[1] > _SPEED_MAX_N
                              or alphas.max(initial=0) > _SPEED_MAX_DEG):
        return _ref.monomial_values(alphas, points)
    return np.asarray(_impl.monomial_values(alphas, points))
