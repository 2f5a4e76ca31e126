import typing
import numpy as np

MAX_BISECTIONS = 200


def monotone_bisect(func: typing.Callable[[np.ndarray], np.ndarray],
                    lo, hi, target,
                    increasing: bool = True,
                    xtol: float = 0.0) -> np.ndarray:
    """
    Vectorised bisection on a monotone function.

    For a nondecreasing func, returns the smallest x in [lo, hi] with func(x) >= target.
    For a nonincreasing func, returns the largest x in [lo, hi] with func(x) >= target.
    The search runs until the bracket width is <= xtol or the midpoints stop moving
    (machine precision relative to the initial bracket when xtol is 0).

    example:
        # x such that x**3 == 0.5 for several targets at once
        monotone_bisect(lambda x: x**3, 0.0, 1.0, np.array([0.125, 0.5]))
    """
    target = np.asarray(target, dtype=float)
    lo = np.broadcast_to(np.asarray(lo, dtype=float), target.shape).copy()
    hi = np.broadcast_to(np.asarray(hi, dtype=float), target.shape).copy()
    # absolute resolution of the initial bracket, stops the descent into subnormals near 0
    resolution = np.maximum(xtol, 2.0 * np.finfo(float).eps * np.maximum(np.abs(lo), np.abs(hi)))

    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        stalled = (mid <= lo) | (mid >= hi) | (hi - lo <= resolution)
        if np.all(stalled):
            break
        above = func(mid) >= target
        if increasing:
            hi = np.where(above & ~stalled, mid, hi)
            lo = np.where(~above & ~stalled, mid, lo)
        else:
            lo = np.where(above & ~stalled, mid, lo)
            hi = np.where(~above & ~stalled, mid, hi)

    return hi if increasing else lo
