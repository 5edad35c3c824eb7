"""Adaptive Simpson quadrature with node recording.

Used for the geometric-phase integral, where the evaluation nodes must be
available afterwards (the eigendecomposition is re-verified at every node by
the test suite).  Cross-checked against scipy.integrate.quad in the tests.
"""

from __future__ import annotations

from typing import Callable

__all__ = ["QuadratureError", "adaptive_simpson"]


class QuadratureError(RuntimeError):
    """Requested tolerance not reached within the subdivision budget."""


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     tol: float = 1e-9, max_depth: int = 60):
    """Integrate f over [a, b] to absolute tolerance tol.

    Returns (value, error_estimate, nodes) where nodes is the list of all
    abscissae at which f was evaluated.
    """
    if not tol > 0:
        raise QuadratureError(f"tol must be > 0, got {tol}")
    if a == b:
        return 0.0, 0.0, [a]

    nodes = []

    def feval(x):
        nodes.append(x)
        return f(x)

    def simpson(fa, fm, fb, h):
        return h / 6.0 * (fa + 4.0 * fm + fb)

    fa = feval(a)
    fb = feval(b)
    m = 0.5 * (a + b)
    fm = feval(m)
    whole = simpson(fa, fm, fb, b - a)

    # explicit stack: (a, m, b, fa, fm, fb, whole, tol, depth)
    total = 0.0
    err_total = 0.0
    stack = [(a, m, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        x0, xm, x1, f0, fmid, f1, s_whole, s_tol, depth = stack.pop()
        lm = 0.5 * (x0 + xm)
        rm = 0.5 * (xm + x1)
        flm = feval(lm)
        frm = feval(rm)
        s_left = simpson(f0, flm, fmid, xm - x0)
        s_right = simpson(fmid, frm, f1, x1 - xm)
        delta = s_left + s_right - s_whole
        if abs(delta) <= 15.0 * s_tol or depth >= max_depth:
            if depth >= max_depth and abs(delta) > 15.0 * s_tol:
                raise QuadratureError(
                    f"max depth {max_depth} reached on [{x0}, {x1}] "
                    f"with residual {abs(delta):.3e}"
                )
            total += s_left + s_right + delta / 15.0
            err_total += abs(delta) / 15.0
        else:
            stack.append((x0, lm, xm, f0, flm, fmid, s_left, s_tol / 2.0, depth + 1))
            stack.append((xm, rm, x1, fmid, frm, f1, s_right, s_tol / 2.0, depth + 1))
    return total, err_total, nodes
