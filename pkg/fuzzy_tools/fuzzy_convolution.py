import typing
import logging
import numpy as np
from dataclasses import dataclass

from .core import FuzzyNumber, FuzzyError, StepTooCoarse
from .fuzzy_arith import add
from .helpers.csv_export import write_rows, format_number_17
from .helpers.tolerances import TOL_X

logger = logging.getLogger(__name__)


def nabla(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """
    sup-min convolution (u nabla v)(x) = sup_y min(u(y), v(x-y)).
    For fuzzy numbers it coincides with the alpha-cut addition, which is what is computed here.
    """
    return add(u, v)


@dataclass(frozen=True)
class GridFunction:
    """membership samples at x0 + k*h"""
    x0: float
    h: float
    values: np.ndarray

    def __post_init__(self):
        if not self.h > 0:
            raise FuzzyError(f"grid step must be > 0, got {self.h!r}")
        if np.any(~np.isfinite(self.values)) or np.any(self.values < 0.0) or np.any(self.values > 1.0):
            raise FuzzyError("grid values must be in [0,1]")

    @property
    def xs(self) -> np.ndarray:
        return self.x0 + self.h * np.arange(len(self.values))

    def to_csv(self, stream: typing.TextIO):
        write_rows(stream, ('x', 'value'), zip(self.xs, self.values), formatter=format_number_17)


def _grid_count(width: float, h: float) -> int:
    return int(np.floor(width / h + 1e-9)) + 1


def sup_min_grid(u: FuzzyNumber, v: FuzzyNumber, h: float) -> GridFunction:
    """
    Brute-force sup-min convolution on the grid x = s_lo(u) + s_lo(v) + k*h, the supremum being taken over
    y = s_lo(u) + j*h plus the breakpoints of u (and the y that bring x-y on a breakpoint of v)
    """
    if not h > 0:
        raise FuzzyError(f"grid step must be > 0, got {h!r}")
    width_u = u.s_hi - u.s_lo
    width_v = v.s_hi - v.s_lo
    width = width_u + width_v
    if width > 0 and h > width / 8.0:
        raise StepTooCoarse(h, width)

    n = _grid_count(width_u, h)
    m = _grid_count(width_v, h)
    u_samples = u.membership(u.s_lo + h * np.arange(n))
    v_samples = v.membership(v.s_lo + h * np.arange(m))

    out = np.zeros(n + m - 1)
    for j in range(n):
        segment = out[j:j + m]
        np.maximum(segment, np.minimum(u_samples[j], v_samples), out=segment)

    xs = u.s_lo + v.s_lo + h * np.arange(n + m - 1)
    for y in u.breakpoints():
        np.maximum(out, np.minimum(u.membership(y), v.membership(xs - y)), out=out)
    for z in v.breakpoints():
        np.maximum(out, np.minimum(u.membership(xs - z), v.membership(z)), out=out)

    logger.debug(f"sup-min grid: {n} x {m} samples at h={h!r}")
    return GridFunction(x0=u.s_lo + v.s_lo, h=float(h), values=out)


def oracle_gap(u: FuzzyNumber, v: FuzzyNumber, h: float, exclude_radius: float = TOL_X) -> float:
    """
    max |sup_min_grid(u, v, h) - nabla(u, v)| over the grid, ignoring grid points within exclude_radius
    of a jump of the convolution (membership at a jump depends on a convention)
    """
    grid = sup_min_grid(u, v, h)
    exact = nabla(u, v)
    xs = grid.xs
    keep = np.ones(len(xs), dtype=bool)
    for x in exact.jump_abscissae():
        keep &= np.abs(xs - x) > exclude_radius
    if not np.any(keep):
        return 0.0
    gap = float(np.max(np.abs(grid.values[keep] - exact.membership(xs[keep]))))
    logger.debug(f"oracle gap at h={h!r}: {gap!r}")
    return gap
