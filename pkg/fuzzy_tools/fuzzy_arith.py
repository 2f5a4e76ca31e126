import typing
import logging
import numpy as np
from dataclasses import dataclass

from .core import FuzzyNumber, SideFunctions, HermitePiece, validate, from_side_functions
from .helpers.tolerances import TOL_X, N_RES, D_INF_GRID_SIZE

logger = logging.getLogger(__name__)


def add(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """[u+v]_a = [u]_a + [v]_a, composed exactly on the side functions"""
    su, sv = u.side_functions, v.side_functions
    sides = SideFunctions(minus=su.minus.add(sv.minus), plus=su.plus.add(sv.plus))
    return validate(from_side_functions(sides))


def scale(u: FuzzyNumber, k: float) -> FuzzyNumber:
    """[k.u]_a = k.[u]_a; a negative factor swaps the sides"""
    k = float(k)
    if k == 0.0:
        return FuzzyNumber.crisp(0.0)
    if k == 1.0:
        return u
    su = u.side_functions
    if k > 0:
        sides = SideFunctions(minus=su.minus.scaled(k), plus=su.plus.scaled(k))
    else:
        sides = SideFunctions(minus=su.plus.scaled(k), plus=su.minus.scaled(k))
    return validate(from_side_functions(sides))


def neg(u: FuzzyNumber) -> FuzzyNumber:
    return scale(u, -1.0)


def sub(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """(u-v)- = u- - v+ and (u-v)+ = u+ - v-"""
    return add(u, neg(v))


def _levels(*numbers: FuzzyNumber, count: int) -> np.ndarray:
    grids = [np.linspace(0.0, 1.0, count)] + [n.side_functions.breakpoints() for n in numbers]
    return np.unique(np.clip(np.concatenate(grids), 0.0, 1.0))


def _resampled_branch(xs: np.ndarray, alphas: np.ndarray) -> typing.List[HermitePiece]:
    """
    monotone Hermite pieces through (x, alpha) nodes sorted by increasing x; a repeated x
    (a flat side function) ends a piece: membership jumps there
    """
    pieces = []
    start = 0
    for end in range(1, len(xs) + 1):
        if end == len(xs) or xs[end] - xs[end - 1] <= TOL_X:
            if end - start >= 2:
                pieces.append(HermitePiece.monotone_through(xs[start:end], alphas[start:end]))
            start = end
    return pieces


def mul(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """
    [u.v]_a = [min, max] of the four endpoint products, resampled at N_RES levels
    (plus the operands' breakpoints) into monotone Hermite pieces
    """
    levels = _levels(u, v, count=N_RES)
    u_lo, u_hi = u.cuts(levels)
    v_lo, v_hi = v.cuts(levels)
    corners = np.stack([u_lo * v_lo, u_lo * v_hi, u_hi * v_lo, u_hi * v_hi])
    lo = np.maximum.accumulate(np.min(corners, axis=0))
    hi = np.minimum.accumulate(np.max(corners, axis=0))

    left = _resampled_branch(lo, levels)
    right = _resampled_branch(hi[::-1], levels[::-1])
    result = FuzzyNumber.build(support=(lo[0], hi[0]), core=(lo[-1], hi[-1]), left=left, right=right)
    logger.debug(f"product resampled at {len(levels)} levels: {len(left)} left / {len(right)} right pieces")
    return validate(result)


@dataclass(frozen=True)
class DistanceReport:
    """
    d_inf evaluated on a level grid, with the certified bound of the supremum between grid levels:
    the exact supremum lies in [distance, distance + slack]
    """
    distance: float
    slack: float
    level: float            # level where the distance is reached
    grid_size: int


def _cell_bound(f_lo: np.ndarray, f_hi: np.ndarray, g_lo: np.ndarray, g_hi: np.ndarray) -> np.ndarray:
    # f, g monotone in the cell: f - g ranges between f_lo - g_hi and f_hi - g_lo (orientation-free)
    return np.maximum(np.abs(np.maximum(f_lo, f_hi) - np.minimum(g_lo, g_hi)),
                      np.abs(np.minimum(f_lo, f_hi) - np.maximum(g_lo, g_hi)))


def d_inf_report(u: FuzzyNumber, v: FuzzyNumber) -> DistanceReport:
    levels = _levels(u, v, count=D_INF_GRID_SIZE)
    su, sv = u.side_functions, v.side_functions

    u_lo, u_hi = u.cuts(levels)
    v_lo, v_hi = v.cuts(levels)
    u_lo_right, u_hi_right = su.minus.value_right(levels), su.plus.value_right(levels)
    v_lo_right, v_hi_right = sv.minus.value_right(levels), sv.plus.value_right(levels)

    gaps = np.maximum.reduce([np.abs(u_lo - v_lo), np.abs(u_hi - v_hi),
                              np.abs(u_lo_right - v_lo_right), np.abs(u_hi_right - v_hi_right)])
    k = int(np.argmax(gaps))
    distance = float(gaps[k])

    # cell (a_k, a_k+1]: from the right limit at a_k to the value at a_k+1
    bound = np.maximum(_cell_bound(u_lo_right[:-1], u_lo[1:], v_lo_right[:-1], v_lo[1:]),
                       _cell_bound(u_hi_right[:-1], u_hi[1:], v_hi_right[:-1], v_hi[1:]))
    slack = max(float(np.max(bound)) - distance, 0.0) if len(bound) else 0.0

    return DistanceReport(distance=distance, slack=slack, level=float(levels[k]), grid_size=len(levels))


def d_inf(u: FuzzyNumber, v: FuzzyNumber) -> float:
    """sup over levels of max(|u- - v-|, |u+ - v+|)"""
    return d_inf_report(u, v).distance
