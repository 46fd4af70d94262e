# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid-scan kernels: torus symmetrization and monomial evaluation."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin

cnp.import_array()

DEF MAX_N = 16
DEF MAX_DEG = 16


def torus_symmetrize(double[:, ::1] thetas):
    cdef Py_ssize_t m = thetas.shape[0]
    cdef Py_ssize_t n = thetas.shape[1]
    if n >= MAX_N:
        raise ValueError("torus_symmetrize: too many variables")
    out = np.empty((m, n), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    cdef double complex e[MAX_N + 1]
    cdef double complex z
    cdef double t
    cdef Py_ssize_t i, j, k
    for i in range(m):
        e[0] = 1.0
        for k in range(1, n + 1):
            e[k] = 0.0
        for j in range(n):
            t = thetas[i, j]
            z = cos(t) + 1j * sin(t)
            for k in range(j + 1, 0, -1):
                e[k] = e[k] + z * e[k - 1]
        for k in range(n):
            o[i, k] = e[k + 1]
    return out


def monomial_values(long long[:, ::1] alphas, double complex[:, ::1] points):
    cdef Py_ssize_t T = alphas.shape[0]
    cdef Py_ssize_t nv = alphas.shape[1]
    cdef Py_ssize_t m = points.shape[0]
    cdef Py_ssize_t i, v, t, d
    cdef long long maxdeg = 0
    for t in range(T):
        for v in range(nv):
            if alphas[t, v] > maxdeg:
                maxdeg = alphas[t, v]
    if nv >= MAX_N or maxdeg >= MAX_DEG:
        raise ValueError("monomial_values: exponent table too large")
    out = np.empty((T, m), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    cdef double complex pw[MAX_N][MAX_DEG + 1]
    cdef double complex acc
    for i in range(m):
        for v in range(nv):
            pw[v][0] = 1.0
            for d in range(1, maxdeg + 1):
                pw[v][d] = pw[v][d - 1] * points[i, v]
        for t in range(T):
            acc = 1.0
            for v in range(nv):
                acc = acc * pw[v][alphas[t, v]]
            o[t, i] = acc
    return out
