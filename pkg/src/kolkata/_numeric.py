"""Bracketing root finder used for fixed points and inverse Lorenz values."""

from .errors import ConvergenceFailure

MAX_ITER = 200


def bisect(func, lo, hi, tol=1e-12, max_iter=MAX_ITER):
    """Find ``x`` in ``[lo, hi]`` with ``|func(x)| <= tol``.

    ``func(lo)`` and ``func(hi)`` must bracket a root (opposite signs or a
    zero at either end). Stops early when the bracket can no longer be
    halved in floating point.
    """
    f_lo = func(lo)
    if abs(f_lo) <= tol:
        return lo
    f_hi = func(hi)
    if abs(f_hi) <= tol:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ConvergenceFailure(f"root not bracketed on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid = func(mid)
        if abs(f_mid) <= tol or mid == lo or mid == hi:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    raise ConvergenceFailure(f"bisection did not converge in {max_iter} iterations")
