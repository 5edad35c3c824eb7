"""Pure-numpy implementation of the hot amplitude kernels.

Drop-in twin of the compiled extension ``_amp_cython``; the two must agree
to floating-point roundoff.  The amplitude is evaluated in mode form

    A(t)  = c+ * exp(s+ t) + c- * exp(s- t),   s+- = -M/2 +- F/4,
    A'(t) = pref/(2F) * (exp(s+ t) - exp(s- t)),

which never overflows (Re s+- <= 0 for physical parameters), with a series
switch to the critically damped limit when |F t| is tiny.
"""

from __future__ import annotations

import numpy as np

SERIES_THRESHOLD = 1e-6


def amp_damp(M: complex, F: complex, pref: complex, t):
    """Amplitude A(t) and derivative dA/dt over an array of times.

    Returns a pair of complex128 arrays with the shape of ``t``.
    """
    shape = np.shape(t)
    tt = np.atleast_1d(np.asarray(t, dtype=np.float64)).ravel()
    small = np.abs(F) * tt < SERIES_THRESHOLD
    if abs(F) == 0.0 or np.all(small):
        e = np.exp(-0.5 * M * tt)
        A = e * (1.0 + 0.5 * M * tt)
        dA = pref * 0.25 * tt * e
        return A.reshape(shape), dA.reshape(shape)
    sp = -0.5 * M + 0.25 * F
    sm = -0.5 * M - 0.25 * F
    ep = np.exp(sp * tt)
    em = np.exp(sm * tt)
    ratio = 2.0 * M / F
    A = 0.5 * (1.0 + ratio) * ep + 0.5 * (1.0 - ratio) * em
    dA = (pref / (2.0 * F)) * (ep - em)
    if np.any(small):
        e = np.exp(-0.5 * M * tt[small])
        A[small] = e * (1.0 + 0.5 * M * tt[small])
        dA[small] = pref * 0.25 * tt[small] * e
    return A.reshape(shape), dA.reshape(shape)
