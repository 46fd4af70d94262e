"""Pure-numpy reference implementation of the grid-scan kernels."""

from __future__ import annotations

import numpy as np


def torus_symmetrize(thetas: np.ndarray) -> np.ndarray:
    """Elementary symmetric polynomials of unimodular points.

    thetas: (m, n) angles.  Returns (m, n) with row i holding
    (e_1, ..., e_n) of (exp(i*theta_i1), ..., exp(i*theta_in)).
    """
    thetas = np.asarray(thetas, dtype=float)
    m, n = thetas.shape
    z = np.exp(1j * thetas)
    e = np.zeros((m, n + 1), dtype=complex)
    e[:, 0] = 1.0
    for j in range(n):
        # e_k <- e_k + z_j e_{k-1}, descending k keeps the recurrence in place
        for k in range(j + 1, 0, -1):
            e[:, k] += z[:, j] * e[:, k - 1]
    return e[:, 1:]


def monomial_values(alphas: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Values of the monomials x^alpha at each point.

    alphas: (T, nv) nonnegative integer exponents; points: (m, nv) complex.
    Returns (T, m).
    """
    alphas = np.asarray(alphas, dtype=np.int64)
    points = np.asarray(points, dtype=complex)
    T, nv = alphas.shape
    m = points.shape[0]
    maxdeg = int(alphas.max(initial=0))
    # power table: pw[v, d, :] = points[:, v] ** d
    pw = np.empty((nv, maxdeg + 1, m), dtype=complex)
    pw[:, 0, :] = 1.0
    for d in range(1, maxdeg + 1):
        pw[:, d, :] = pw[:, d - 1, :] * points.T
    out = np.ones((T, m), dtype=complex)
    for v in range(nv):
        out *= pw[v, alphas[:, v], :]
    return out
