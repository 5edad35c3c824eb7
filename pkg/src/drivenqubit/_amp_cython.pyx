# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_amp_python``: fused evaluation of A(t) and dA/dt.

Keep the arithmetic in exact lockstep with the pure-numpy kernels; the test
suite asserts agreement to roundoff.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double cabs(double complex)

DEF SERIES_THRESHOLD = 1e-6


def amp_damp(double complex M, double complex F, double complex pref, t):
    """Amplitude A(t) and derivative dA/dt over an array of times."""
    cdef cnp.ndarray[double, ndim=1] tt = np.ascontiguousarray(
        np.atleast_1d(np.asarray(t, dtype=np.float64)).ravel())
    cdef Py_ssize_t n = tt.shape[0]
    cdef cnp.ndarray[double complex, ndim=1] A = np.empty(n, dtype=np.complex128)
    cdef cnp.ndarray[double complex, ndim=1] dA = np.empty(n, dtype=np.complex128)
    cdef double complex sp = -0.5 * M + 0.25 * F
    cdef double complex sm = -0.5 * M - 0.25 * F
    cdef double complex ratio = 0.0
    cdef double complex dpref = 0.0
    cdef double absF = cabs(F)
    cdef bint degenerate = absF == 0.0
    if not degenerate:
        ratio = 2.0 * M / F
        dpref = pref / (2.0 * F)
    cdef double complex cp = 0.5 * (1.0 + ratio)
    cdef double complex cm = 0.5 * (1.0 - ratio)
    cdef double complex ep, em, e
    cdef double ti
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            ti = tt[i]
            if degenerate or absF * ti < SERIES_THRESHOLD:
                e = cexp(-0.5 * M * ti)
                A[i] = e * (1.0 + 0.5 * M * ti)
                dA[i] = pref * 0.25 * ti * e
            else:
                ep = cexp(sp * ti)
                em = cexp(sm * ti)
                A[i] = cp * ep + cm * em
                dA[i] = dpref * (ep - em)
    shape = np.shape(np.asarray(t))
    return A.reshape(shape), dA.reshape(shape)
