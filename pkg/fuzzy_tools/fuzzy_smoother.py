import typing
import logging
import numpy as np
from dataclasses import dataclass, field
from strenum import StrEnum

from .core import FuzzyNumber, GeneratorF, QuadraticPiece, GeneratorPiece, HermitePiece, Branch, validate
from .core import NonPositiveRadius, LevelsOutOfRange, DegenerateSpec, InfinitelyManySingularities, NumericFailure, FuzzyError
from .core.pieces import monotone_slopes
from .helpers.tolerances import SINGULARITY_CAP, tol_d

if typing.TYPE_CHECKING:
    from .fuzzy_analyzer import AnalysisReport

logger = logging.getLogger(__name__)


class SmootherFamily(StrEnum):

    SYNTHESIZED = 'synthesized'     # Hermite smoother built from the target's singular levels
    PARABOLIC = 'parabolic'         # w_p
    GENERATOR = 'generator'         # Z_p^f


def _check_radius(p: float):
    if not p > 0:
        raise NonPositiveRadius(p)


def make_w_p(p: float) -> FuzzyNumber:
    """w_p(x) = 1 - (x/p)^2 on [-p, p]"""
    _check_radius(p)
    a = -1.0 / (p * p)
    return validate(FuzzyNumber.build(
        support=(-p, p),
        core=(0.0, 0.0),
        left=[QuadraticPiece(x_lo=-p, x_hi=0.0, a=a, b=0.0, c=1.0)],
        right=[QuadraticPiece(x_lo=0.0, x_hi=p, a=a, b=0.0, c=1.0)]
    ))


def make_Z_p_f(f: GeneratorF, p: float) -> FuzzyNumber:
    """Z_p^f(x) = f^-1(|x| / p) on [-p, p]"""
    _check_radius(p)
    f.validate()
    if not f.satisfies_smoothing_criterion:
        logger.info(f"generator '{f.name}' does not satisfy the smoothing criterion (f' -> -inf at 1-)")
    return validate(FuzzyNumber.build(
        support=(-p, p),
        core=(0.0, 0.0),
        left=[GeneratorPiece.build(f, p, -1)],
        right=[GeneratorPiece.build(f, p, 1)]
    ))


def smoothing_criterion(w: FuzzyNumber) -> typing.Optional[bool]:
    """the generator's criterion flag for a Z_p^f smoother, None for other smoothers"""
    pieces = [p for _, _, p in w.pieces() if isinstance(p, GeneratorPiece)]
    if not pieces:
        return None
    return all(p.generator.satisfies_smoothing_criterion for p in pieces)


def _levels(values: typing.Iterable[float]) -> typing.Tuple[float, ...]:
    return tuple(sorted(set(float(v) for v in values)))


@dataclass(frozen=True)
class SmootherSpec:
    """
    What a synthesized smoother must satisfy: radius p, boundary values c_left = w(-p) and c_right = w(p),
    and the levels where its membership derivative must vanish on each branch.
    The defensive levels are the subset added for the upper level of a jump.
    """
    p: float
    c_left: float = 0.0
    c_right: float = 0.0
    levels_left: typing.Tuple[float, ...] = (1.0,)
    levels_right: typing.Tuple[float, ...] = (1.0,)
    defensive_left: typing.Tuple[float, ...] = field(default=())
    defensive_right: typing.Tuple[float, ...] = field(default=())

    def check(self) -> 'SmootherSpec':
        _check_radius(self.p)
        for name, c in (('c_left', self.c_left), ('c_right', self.c_right)):
            if not c >= 0.0:
                raise LevelsOutOfRange(f"{name}={c!r} must be in [0,1)")
            if c >= 1.0:
                raise DegenerateSpec(f"{name}={c!r}: a smoother can not start at membership 1")
        for name, levels in (('levels_left', self.levels_left), ('levels_right', self.levels_right),
                             ('defensive_left', self.defensive_left), ('defensive_right', self.defensive_right)):
            for level in levels:
                if not 0.0 < level <= 1.0:
                    raise LevelsOutOfRange(f"{name} contains {level!r}, outside (0,1]")
        return self

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            'c_left': self.c_left,
            'c_right': self.c_right,
            'levels_left': list(self.levels_left),
            'levels_right': list(self.levels_right),
            'defensive_left': list(self.defensive_left),
            'defensive_right': list(self.defensive_right)
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'SmootherSpec':
        try:
            return cls(
                p=float(data['p']),
                c_left=float(data.get('c_left', 0.0)),
                c_right=float(data.get('c_right', 0.0)),
                levels_left=_levels(data.get('levels_left', [1.0])),
                levels_right=_levels(data.get('levels_right', [1.0])),
                defensive_left=_levels(data.get('defensive_left', [])),
                defensive_right=_levels(data.get('defensive_right', []))
            ).check()
        except (KeyError, TypeError, ValueError) as e:
            raise FuzzyError(f"invalid smoother spec: {e!r}")


def _branch_nodes(boundary: float, constrained: typing.Sequence[float]) -> typing.Tuple[np.ndarray, np.ndarray]:
    """
    levels of the nodes from the support end to the core (boundary value first, 1 last)
    and the mask of the nodes whose slope must vanish
    """
    kept = [level for level in constrained if level > boundary]
    dropped = [level for level in constrained if level < boundary]
    if dropped:
        logger.warning(f"levels {dropped} are below the boundary value {boundary!r}: their preimage is the support end")
    levels = np.array(sorted(set([boundary] + kept + [1.0])))
    stationary = np.isin(levels, list(constrained) + [1.0])
    return levels, stationary


def _hermite_branch(xs: np.ndarray, levels: np.ndarray, stationary: np.ndarray) -> HermitePiece:
    slopes = monotone_slopes(xs, levels)
    slopes[stationary] = 0.0
    return HermitePiece.from_nodes(xs, levels, slopes)


def synthesize(spec: SmootherSpec, derivative_tol: float = None) -> FuzzyNumber:
    """
    Smoother with support [-p, p], core {0}, boundary values c_left / c_right and a vanishing membership
    derivative at every constrained level (and at level 1).  Each branch is one monotone C1 Hermite piece
    whose nodes are the sorted levels placed at equally spaced abscissae.
    """
    spec.check()
    p = spec.p

    levels, stationary = _branch_nodes(spec.c_left, spec.levels_left)
    left = _hermite_branch(np.linspace(-p, 0.0, len(levels)), levels, stationary)

    levels, stationary = _branch_nodes(spec.c_right, spec.levels_right)
    xs = np.linspace(0.0, p, len(levels))
    right = _hermite_branch(xs, levels[::-1], stationary[::-1])

    w = validate(FuzzyNumber.build(support=(-p, p), core=(0.0, 0.0), left=[left], right=[right]))

    tolerance = derivative_tol if derivative_tol is not None else tol_d()
    for piece in (left, right):
        for x, _, slope in piece.nodes:
            if slope == 0.0 and abs(float(piece.derivative(x))) > tolerance:
                raise NumericFailure(f"smoother derivative does not vanish at x={x!r}")

    logger.debug(f"synthesized smoother p={p!r}: {len(left.nodes)} left / {len(right.nodes)} right nodes")
    return w


def spec_for(u: FuzzyNumber, p: float, report: 'AnalysisReport', singularity_cap: int = SINGULARITY_CAP) -> SmootherSpec:
    """
    Levels where the smoother of u must be stationary: kink levels, both limits of jumps
    (the upper one defensively) and level 1 when the core does not touch the support end;
    boundary values are u at the support ends.
    """
    if len(report.singulars) > singularity_cap:
        raise InfinitelyManySingularities(len(report.singulars), singularity_cap)

    c_left, c_right = u.v_left, u.v_right
    levels = {Branch.LEFT: set(), Branch.RIGHT: set()}
    defensive = {Branch.LEFT: set(), Branch.RIGHT: set()}

    for point in report.singulars:
        if point.is_kink:
            if point.level < 1.0:
                levels[point.side].add(point.level)
        else:
            outer = point.left_limit if point.side == Branch.LEFT else point.right_limit
            levels[point.side].add(outer)
            levels[point.side].add(point.level)
            defensive[point.side].add(point.level)

    if u.s_lo < u.c_lo:
        levels[Branch.LEFT].add(1.0)
    if u.c_hi < u.s_hi:
        levels[Branch.RIGHT].add(1.0)

    def cleaned(values):
        return _levels(v for v in values if v > 0.0)

    spec = SmootherSpec(
        p=p,
        c_left=c_left,
        c_right=c_right,
        levels_left=cleaned(levels[Branch.LEFT]),
        levels_right=cleaned(levels[Branch.RIGHT]),
        defensive_left=cleaned(defensive[Branch.LEFT] - {1.0}),
        defensive_right=cleaned(defensive[Branch.RIGHT] - {1.0})
    )
    logger.debug(f"smoother spec for p={p!r}: left levels {spec.levels_left}, right levels {spec.levels_right}")
    return spec.check()


def make_smoother(u: FuzzyNumber, p: float, family: SmootherFamily = SmootherFamily.SYNTHESIZED,
                  report: 'AnalysisReport' = None, generator: GeneratorF = None,
                  singularity_cap: int = SINGULARITY_CAP,
                  derivative_tol: float = None) -> typing.Tuple[FuzzyNumber, typing.Optional[SmootherSpec]]:
    """the smoother of the requested family for u at radius p, with the spec it was synthesized from"""
    if family == SmootherFamily.PARABOLIC:
        return make_w_p(p), None
    if family == SmootherFamily.GENERATOR:
        return make_Z_p_f(generator or GeneratorF.sqrt(), p), None
    if report is None:
        from .fuzzy_analyzer import analyze
        report = analyze(u)
    spec = spec_for(u, p, report, singularity_cap=singularity_cap)
    return synthesize(spec, derivative_tol=derivative_tol), spec
