# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot loops; see _kernels_py for the reference implementations."""
import numpy as np
cimport numpy as cnp
from libc.math cimport log, isfinite
from scipy.special.cython_special cimport ive

from .numerics.special import _log_bessel_series

cnp.import_array()


def ar1_path(double x0, double shift, double decay, double sd, const double[::1] z):
    cdef Py_ssize_t n = z.shape[0], t
    out = np.empty(n + 1)
    cdef double[::1] o = out
    cdef double x = x0
    o[0] = x0
    for t in range(n):
        x = shift + decay * x + sd * z[t]
        o[t + 1] = x
    return out


def laurent_eval(y, y0, coef, int pmin, int qmin):
    cdef const double[::1] yy = np.ascontiguousarray(y, dtype=np.float64)
    cdef const double[::1] yy0 = np.ascontiguousarray(y0, dtype=np.float64)
    cdef const double[:, ::1] c = np.ascontiguousarray(coef, dtype=np.float64)
    cdef Py_ssize_t n = yy.shape[0], P = c.shape[0], Q = c.shape[1], i, p, q
    out = np.empty(n)
    cdef double[::1] o = out
    cdef double yi, y0i, row, acc, ylow, y0low
    for i in range(n):
        yi = yy[i]
        y0i = yy0[i]
        # Horner in y0 of Horner-in-y rows, then scale by the lowest powers
        acc = 0.0
        for q in range(Q - 1, -1, -1):
            row = 0.0
            for p in range(P - 1, -1, -1):
                row = row * yi + c[p, q]
            acc = acc * y0i + row
        ylow = yi ** pmin
        y0low = y0i ** qmin
        o[i] = acc * ylow * y0low
    return out


def log_bessel_i_vec(double q, z):
    cdef const double[::1] zz = np.ascontiguousarray(z, dtype=np.float64)
    cdef Py_ssize_t n = zz.shape[0], i
    out = np.empty(n)
    cdef double[::1] o = out
    cdef double s
    for i in range(n):
        s = ive(q, zz[i])
        if s > 1e-280 and isfinite(s):
            o[i] = log(s) + zz[i]
        else:
            o[i] = _log_bessel_series(q, zz[i])
    return out
