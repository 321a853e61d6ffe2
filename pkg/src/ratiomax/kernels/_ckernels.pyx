# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels. Must stay arithmetic-for-arithmetic identical to _pykernels."""

import numpy as np
from libc.math cimport sqrt


def ratio_argmax(const double[::1] num, const double[::1] den):
    cdef Py_ssize_t n = num.shape[0]
    cdef Py_ssize_t i, best = -1
    cdef double v, best_v = 0.0
    if den.shape[0] != n:
        raise ValueError("num and den must have the same length")
    for i in range(n):
        if den[i] == 0.0:
            raise ZeroDivisionError(i)
        v = num[i] / den[i]
        if best < 0 or v > best_v:
            best = i
            best_v = v
    return best, best_v


def polar_scan(double a0u, double a0v, double au, double av, double h0, double h,
               const double[::1] radii, const double[::1] cosines,
               const double[::1] sines):
    cdef Py_ssize_t nr = radii.shape[0], na = cosines.shape[0]
    cdef Py_ssize_t i, k, best_i = -1, best_k = -1
    cdef double s, t, rho, num, den, v, best_v = 0.0
    for i in range(nr):
        rho = radii[i]
        for k in range(na):
            s = rho * cosines[k]
            t = rho * sines[k]
            num = h0 + s * a0u + t * a0v
            den = h + s * au + t * av
            if den == 0.0:
                raise ZeroDivisionError((i, k))
            v = num / den
            if best_i < 0 or v > best_v:
                best_i = i
                best_k = k
                best_v = v
    return best_v, best_i, best_k


def ball_j_sweep(const double[::1] w0, const double[::1] w, double h0, double h,
                 double r, const double[::1] betas):
    cdef Py_ssize_t n = w0.shape[0], m = betas.shape[0], i, k
    cdef double beta, acc, d
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] res = out
    for k in range(m):
        beta = betas[k]
        acc = 0.0
        for i in range(n):
            d = w0[i] - beta * w[i]
            acc = acc + d * d
        res[k] = r * sqrt(acc) + h0 - beta * h
    return out
