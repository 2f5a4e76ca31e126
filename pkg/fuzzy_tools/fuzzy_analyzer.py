import math
import typing
import logging
import numpy as np
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from strenum import StrEnum

from .core import FuzzyNumber, Branch, GeneratorF, PointOutsideSupport, InvalidSchedule
from .fuzzy_arith import d_inf
from .fuzzy_convolution import nabla
from .fuzzy_smoother import SmootherFamily, make_smoother
from .helpers.csv_export import write_rows
from .helpers.timer import Timer
from .helpers.tolerances import TOL_X, KINK_THRESHOLD, DIFF_STEPS, DIFF_TOL, BOUNDARY_MARGIN, SINGULARITY_CAP, ALPHA_GRID_SIZE

logger = logging.getLogger(__name__)

PROBES_PER_BRANCH = 17


class SingularKind(StrEnum):

    KINK = 'kink'
    JUMP = 'jump'


@dataclass(frozen=True)
class SingularPoint:
    """
    A point of the open support where membership is not differentiable.
    left_limit / right_limit are the one-sided limits of u at x (the outer one is beta on the left branch,
    gamma on the right branch); left_slope / right_slope the one-sided derivatives.
    A jump at a core edge is recorded on its own branch, between the branch limit and the core value 1.
    """
    x: float
    side: Branch
    kind: SingularKind
    level: float
    left_limit: float
    right_limit: float
    left_slope: float
    right_slope: float
    at_core_edge: bool = False

    @property
    def is_kink(self) -> bool:
        return self.kind == SingularKind.KINK

    @property
    def is_jump(self) -> bool:
        return self.kind == SingularKind.JUMP

    @property
    def beta(self) -> typing.Optional[float]:
        return self.left_limit if self.is_jump else None

    @property
    def gamma(self) -> typing.Optional[float]:
        return self.right_limit if self.is_jump else None

    def to_row(self) -> tuple:
        slopes = (self.left_slope, self.right_slope) if self.is_kink else (None, None)
        return (self.x, str(self.side), str(self.kind), self.level, self.beta, self.gamma) + slopes


@dataclass(frozen=True)
class AnalysisReport:
    singulars: typing.Tuple[SingularPoint, ...]
    in_F_T: bool
    in_F_N: bool
    in_F_C: bool
    in_F_D: bool

    CSV_HEADER = ('x', 'side', 'kind', 'level', 'beta', 'gamma', 'left_slope', 'right_slope')

    def levels(self, side: Branch) -> typing.List[float]:
        return sorted(set(p.level for p in self.singulars if p.side == side))

    def to_csv(self, stream: typing.TextIO):
        write_rows(stream, self.CSV_HEADER, (p.to_row() for p in self.singulars))


def _slopes_differ(a: float, b: float) -> bool:
    if math.isinf(a) or math.isinf(b):
        return a != b
    return abs(a - b) > KINK_THRESHOLD


def _singular_point(u: FuzzyNumber, x: float, side: Branch, limits, slopes, at_core_edge: bool) -> typing.Optional[SingularPoint]:
    left_limit, right_limit = limits
    left_slope, right_slope = slopes
    if abs(left_limit - right_limit) > TOL_X:
        kind = SingularKind.JUMP
    elif _slopes_differ(left_slope, right_slope):
        kind = SingularKind.KINK
    else:
        return None
    level = 1.0 if at_core_edge else float(u.membership(x))
    return SingularPoint(x=float(x), side=side, kind=kind, level=level,
                         left_limit=float(left_limit), right_limit=float(right_limit),
                         left_slope=float(left_slope), right_slope=float(right_slope),
                         at_core_edge=at_core_edge)


def _end_slope(piece, x: float) -> float:
    with np.errstate(all='ignore'):
        return float(piece.derivative(x))


def find_singular_points(u: FuzzyNumber) -> typing.List[SingularPoint]:
    """kinks and jumps at the interior piece boundaries and at the core edges"""
    points = []

    for side in (Branch.LEFT, Branch.RIGHT):
        pieces = u.branch(side)
        for previous, current in zip(pieces[:-1], pieces[1:]):
            point = _singular_point(
                u, current.x_lo, side,
                limits=(previous.value_at_hi, current.value_at_lo),
                slopes=(_end_slope(previous, previous.x_hi), _end_slope(current, current.x_lo)),
                at_core_edge=False)
            if point is not None:
                points.append(point)

    points.extend(_core_edge_points(u))
    return sorted(points, key=lambda p: p.x)


def _core_edge_points(u: FuzzyNumber) -> typing.List[SingularPoint]:
    """
    singular points at the core edges interior to the support.  Each branch whose limit at its core edge
    is below u = 1 gives a jump of that branch; a single-point core reached by both branches can only be a kink.
    """
    last = u.left[-1] if u.left else None
    first = u.right[0] if u.right else None
    left_jumps = last is not None and abs(last.value_at_hi - 1.0) > TOL_X
    right_jumps = first is not None and abs(first.value_at_lo - 1.0) > TOL_X
    single = u.c_lo == u.c_hi

    if last is not None and first is not None and single and not left_jumps and not right_jumps:
        point = _singular_point(u, u.c_lo, Branch.LEFT,
                                limits=(last.value_at_hi, first.value_at_lo),
                                slopes=(_end_slope(last, last.x_hi), _end_slope(first, first.x_lo)),
                                at_core_edge=True)
        return [point] if point is not None else []

    points = []
    if last is not None and (left_jumps or not single):
        points.append(_singular_point(u, u.c_lo, Branch.LEFT,
                                      limits=(last.value_at_hi, 1.0),
                                      slopes=(_end_slope(last, last.x_hi), 0.0),
                                      at_core_edge=True))
    if first is not None and (right_jumps or not single):
        points.append(_singular_point(u, u.c_hi, Branch.RIGHT,
                                      limits=(1.0, first.value_at_lo),
                                      slopes=(0.0, _end_slope(first, first.x_lo)),
                                      at_core_edge=True))
    return [p for p in points if p is not None]


def _strictly_monotone(u: FuzzyNumber) -> bool:
    for side, _, piece in u.pieces():
        if piece.is_constant:
            return False
        values = piece.value(np.linspace(piece.x_lo, piece.x_hi, ALPHA_GRID_SIZE))
        steps = np.diff(values) if side == Branch.LEFT else -np.diff(values)
        if np.any(steps <= 0.0):
            return False
    return True


def analyze(u: FuzzyNumber) -> AnalysisReport:
    singulars = tuple(find_singular_points(u))
    in_F_C = not any(p.is_jump for p in singulars)
    in_F_N = all(p.at_core_edge for p in singulars)
    in_F_T = in_F_N and _strictly_monotone(u)
    in_F_D = len(singulars) == 0

    logger.debug(f"{len(singulars)} singular points; F_T={in_F_T} F_N={in_F_N} F_C={in_F_C} F_D={in_F_D}")
    return AnalysisReport(singulars=singulars, in_F_T=in_F_T, in_F_N=in_F_N, in_F_C=in_F_C, in_F_D=in_F_D)


class DiffMethod(StrEnum):

    CLOSED_FORM = 'closed-form'
    DIFFERENCE_QUOTIENTS = 'difference-quotients'


@dataclass(frozen=True)
class DiffVerdict:
    x: float
    passed: bool
    derivative: float           # closed-form value or symmetric quotient at the smallest step
    left_slope: float
    right_slope: float
    gap: float                  # |right - left| quotient gap at the smallest step
    extrapolated_gap: float     # gap extrapolated to a zero step, not used by the verdict
    method: DiffMethod


def _quotient_verdicts(u: FuzzyNumber, xs: np.ndarray, steps: np.ndarray, tol: float) -> typing.List[DiffVerdict]:
    f0 = u.membership(xs)[:, None]
    left = (f0 - u.membership(xs[:, None] - steps)) / steps
    right = (u.membership(xs[:, None] + steps) - f0) / steps
    gaps = np.abs(right - left)

    # quotient rounding error grows like eps / h
    noise = 16.0 * np.finfo(float).eps / steps
    shrinking = np.all(gaps[:, 1:] <= gaps[:, :-1] + noise[1:], axis=1)

    if len(steps) >= 2:
        ratio = steps[-2] / steps[-1]
        extrapolated = (ratio * gaps[:, -1] - gaps[:, -2]) / (ratio - 1.0)
    else:
        extrapolated = gaps[:, -1]
    extrapolated = np.where(np.isfinite(extrapolated), np.maximum(extrapolated, 0.0), math.inf)

    return [DiffVerdict(x=float(x), passed=bool(shrinking[k] and gaps[k, -1] <= tol),
                        derivative=float(0.5 * (left[k, -1] + right[k, -1])),
                        left_slope=float(left[k, -1]), right_slope=float(right[k, -1]),
                        gap=float(gaps[k, -1]), extrapolated_gap=float(extrapolated[k]),
                        method=DiffMethod.DIFFERENCE_QUOTIENTS)
            for k, x in enumerate(xs)]


def quotient_step_scale(p: float) -> float:
    """
    factor of the quotient steps for a number smoothed at radius p: the curvature of a synthesized smoother
    grows like 1 / p^2, so the steps shrink like p^2
    """
    return min(1.0, p) ** 2


def check_differentiable(u: FuzzyNumber, points: typing.Iterable[float], tol: float = DIFF_TOL,
                         steps: typing.Sequence[float] = DIFF_STEPS, step_scale: float = 1.0) -> typing.List[DiffVerdict]:
    """
    Per-point differentiability verdicts, in the order of the points.  Points farther than BOUNDARY_MARGIN
    from every piece boundary use the closed-form derivative of their piece.  Elsewhere one-sided difference
    quotients are taken at each step (times step_scale): the point passes when their gap does not grow as
    the step decreases and the gap at the smallest step is <= tol.
    """
    xs = np.asarray([float(x) for x in points], dtype=float)
    for x in xs:
        if not u.s_lo < x < u.s_hi:
            raise PointOutsideSupport(float(x), u.support)
    if len(xs) == 0:
        return []

    breakpoints = u.breakpoints()
    interior = np.min(np.abs(xs[:, None] - breakpoints[None, :]), axis=1) > BOUNDARY_MARGIN
    hs = np.asarray(steps, dtype=float) * step_scale
    verdicts = [None] * len(xs)

    if np.any(interior):
        slopes = np.atleast_1d(u.derivative(xs[interior]))
        for k, slope in zip(np.flatnonzero(interior), slopes):
            slope = float(slope)
            verdicts[k] = DiffVerdict(x=float(xs[k]), passed=bool(np.isfinite(slope)), derivative=slope,
                                      left_slope=slope, right_slope=slope, gap=0.0, extrapolated_gap=0.0,
                                      method=DiffMethod.CLOSED_FORM)
    if not np.all(interior):
        for k, verdict in zip(np.flatnonzero(~interior), _quotient_verdicts(u, xs[~interior], hs, tol)):
            verdicts[k] = verdict

    failed = [v.x for v in verdicts if not v.passed]
    if failed:
        logger.debug(f"differentiability fails at {failed}")
    return verdicts


def lipschitz_bound(u: FuzzyNumber) -> float:
    """largest closed-form membership slope over all pieces, jumps ignored"""
    bound = 0.0
    for _, _, piece in u.pieces():
        with np.errstate(all='ignore'):
            slopes = np.abs(piece.derivative(np.linspace(piece.x_lo, piece.x_hi, ALPHA_GRID_SIZE)))
        bound = max(bound, float(np.max(slopes)))
    return bound


@dataclass(frozen=True)
class ConvergenceRow:
    p: float
    d: float
    diff_ok: bool
    failed_points: typing.Tuple[float, ...] = ()

    CSV_HEADER = ('p', 'd_inf', 'diff_ok')

    def to_row(self) -> tuple:
        return self.p, self.d, self.diff_ok


def write_convergence_csv(stream: typing.TextIO, rows: typing.Iterable[ConvergenceRow]):
    write_rows(stream, ConvergenceRow.CSV_HEADER, (r.to_row() for r in rows))


def probe_points(u: FuzzyNumber, v: FuzzyNumber, w: FuzzyNumber, report: AnalysisReport) -> typing.List[float]:
    """
    where v = u nabla w must be checked: the images of the singular points of u (x + w-(level) on the left
    branch, x + w+(level) on the right one, both levels of a jump), the core edges of v and
    PROBES_PER_BRANCH uniform points per branch of v
    """
    sides = w.side_functions
    points = [v.c_lo, v.c_hi]
    for singular in report.singulars:
        levels = [singular.level]
        if singular.is_jump:
            levels.append(singular.left_limit if singular.side == Branch.LEFT else singular.right_limit)
        curve = sides.minus if singular.side == Branch.LEFT else sides.plus
        points.extend(singular.x + curve.value(level) for level in levels)

    for lo, hi in ((v.s_lo, v.c_lo), (v.c_hi, v.s_hi)):
        if hi > lo:
            points.extend(np.linspace(lo, hi, PROBES_PER_BRANCH + 2)[1:-1])

    inside = sorted(set(float(x) for x in points if v.s_lo < x < v.s_hi))
    return inside


def _check_schedule(schedule: typing.Sequence[float]):
    if len(schedule) == 0:
        raise InvalidSchedule("the schedule is empty")
    if any(not p > 0 for p in schedule):
        raise InvalidSchedule(f"schedule radii must be > 0: {list(schedule)}")
    if any(b >= a for a, b in zip(schedule[:-1], schedule[1:])):
        raise InvalidSchedule(f"schedule must be strictly decreasing: {list(schedule)}")


class Approximator:
    """
    Runs u nabla w for a schedule of smoother radii and records, per radius, the distance to u
    and whether the result passed the differentiability checks.

    example:
        approximator = Approximator(u, family=SmootherFamily.SYNTHESIZED, workers=4)
        rows = approximator.run([0.5, 0.25, 0.125])
    """

    def __init__(self,
                 u: FuzzyNumber,
                 family: SmootherFamily = SmootherFamily.SYNTHESIZED,
                 generator: GeneratorF = None,       # for the generator family, defaults to sqrt(1-t)
                 tol: float = DIFF_TOL,
                 singularity_cap: int = SINGULARITY_CAP,
                 derivative_tol: float = None,       # "derivative vanishes" tolerance of the synthesis
                 workers: int = 1
                 ):
        self._u = u
        self._family = family
        self._generator = generator
        self._tol = tol
        self._singularity_cap = singularity_cap
        self._derivative_tol = derivative_tol
        self._workers = max(1, workers)
        self._report = analyze(u)

    @property
    def report(self) -> AnalysisReport:
        return self._report

    def row(self, p: float) -> ConvergenceRow:
        w, _ = make_smoother(self._u, p, family=self._family, report=self._report,
                             generator=self._generator, singularity_cap=self._singularity_cap,
                             derivative_tol=self._derivative_tol)
        v = nabla(self._u, w)
        d = d_inf(self._u, v)
        verdicts = check_differentiable(v, probe_points(self._u, v, w, self._report),
                                        tol=self._tol, step_scale=quotient_step_scale(p))
        failed = tuple(verdict.x for verdict in verdicts if not verdict.passed)
        logger.info(f"p={p!r}: d_inf={d!r}, {len(verdicts)} points checked, {len(failed)} failed")
        return ConvergenceRow(p=float(p), d=d, diff_ok=len(failed) == 0, failed_points=failed)

    def run(self, schedule: typing.Sequence[float]) -> typing.List[ConvergenceRow]:
        _check_schedule(schedule)
        logger.info(f"----- Running convergence schedule of {len(schedule)} radii ({self._family} smoother)")
        with Timer.logged("convergence schedule"):
            if self._workers == 1:
                return [self.row(p) for p in schedule]
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                return list(executor.map(self.row, schedule))


def approximate(u: FuzzyNumber, schedule: typing.Sequence[float],
                family: SmootherFamily = SmootherFamily.SYNTHESIZED,
                generator: GeneratorF = None,
                tol: float = DIFF_TOL,
                singularity_cap: int = SINGULARITY_CAP,
                derivative_tol: float = None,
                workers: int = 1) -> typing.List[ConvergenceRow]:
    _check_schedule(schedule)
    approximator = Approximator(u, family=family, generator=generator, tol=tol,
                                singularity_cap=singularity_cap, derivative_tol=derivative_tol, workers=workers)
    return approximator.run(schedule)
