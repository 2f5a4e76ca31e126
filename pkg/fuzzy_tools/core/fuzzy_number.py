import typing
import logging
import numpy as np
from functools import cached_property
from dataclasses import dataclass
from strenum import StrEnum

from .pieces import Piece, ConstantPiece, LinearPiece, as_array
from .side_functions import SideTerm, SideSegment, SideCurve, SideFunctions, SumPiece, flatten_terms
from .fuzzy_error import FuzzyError
from ..helpers.tolerances import TOL_X

logger = logging.getLogger(__name__)


class Branch(StrEnum):

    LEFT = 'left'
    RIGHT = 'right'


@dataclass(frozen=True)
class AlphaCut:
    alpha: float
    lo: float
    hi: float

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, other: 'AlphaCut', tolerance: float = 0.0) -> bool:
        return self.lo <= other.lo + tolerance and other.hi <= self.hi + tolerance

    def __str__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


@dataclass(frozen=True)
class FuzzyNumber:
    """
    A fuzzy number stored by its membership branches: the left pieces cover [s_lo, c_lo] from left to right,
    the right pieces cover [c_hi, s_hi] from left to right.  Membership is 1 on the core and 0 outside the support.

    Instances are not checked on construction, use fuzzy_validator.validate() for that.
    """
    support: typing.Tuple[float, float]
    core: typing.Tuple[float, float]
    left: typing.Tuple[Piece, ...] = ()
    right: typing.Tuple[Piece, ...] = ()

    @classmethod
    def build(cls, support, core, left=(), right=()) -> 'FuzzyNumber':
        return cls(support=(float(support[0]), float(support[1])),
                   core=(float(core[0]), float(core[1])),
                   left=tuple(left),
                   right=tuple(right))

    @classmethod
    def crisp(cls, a: float) -> 'FuzzyNumber':
        return cls.build(support=(a, a), core=(a, a))

    @property
    def s_lo(self) -> float:
        return self.support[0]

    @property
    def s_hi(self) -> float:
        return self.support[1]

    @property
    def c_lo(self) -> float:
        return self.core[0]

    @property
    def c_hi(self) -> float:
        return self.core[1]

    @property
    def is_crisp(self) -> bool:
        return self.s_lo == self.s_hi

    @property
    def v_left(self) -> float:
        """membership at s_lo"""
        return float(self.membership(self.s_lo))

    @property
    def v_right(self) -> float:
        """membership at s_hi"""
        return float(self.membership(self.s_hi))

    def branch(self, side: Branch) -> typing.Tuple[Piece, ...]:
        return self.left if side == Branch.LEFT else self.right

    def pieces(self) -> typing.Iterator[typing.Tuple[Branch, int, Piece]]:
        for side in (Branch.LEFT, Branch.RIGHT):
            for index, piece in enumerate(self.branch(side)):
                yield side, index, piece

    @cached_property
    def _left_x_los(self) -> np.ndarray:
        return np.array([p.x_lo for p in self.left])

    @cached_property
    def _right_x_his(self) -> np.ndarray:
        return np.array([p.x_hi for p in self.right])

    @staticmethod
    def _evaluate_pieces(pieces: typing.Sequence[Piece], indexes: np.ndarray, x: np.ndarray, method: str) -> np.ndarray:
        out = np.empty_like(x)
        for k in np.unique(indexes):
            mask = indexes == k
            piece = pieces[k]
            out[mask] = getattr(piece, method)(np.clip(x[mask], piece.x_lo, piece.x_hi))
        return out

    def _evaluate(self, x, method: str, core_value: float):
        x = as_array(x)
        flat = np.atleast_1d(x).ravel()
        out = np.zeros_like(flat)
        out[(flat >= self.c_lo) & (flat <= self.c_hi)] = core_value

        if self.left:
            mask = (flat >= self.s_lo) & (flat < self.c_lo)
            if np.any(mask):
                indexes = np.clip(np.searchsorted(self._left_x_los, flat[mask], side='right') - 1, 0, len(self.left) - 1)
                out[mask] = self._evaluate_pieces(self.left, indexes, flat[mask], method)
        if self.right:
            mask = (flat > self.c_hi) & (flat <= self.s_hi)
            if np.any(mask):
                indexes = np.clip(np.searchsorted(self._right_x_his, flat[mask], side='left'), 0, len(self.right) - 1)
                out[mask] = self._evaluate_pieces(self.right, indexes, flat[mask], method)

        out = out.reshape(x.shape)
        return float(out) if out.ndim == 0 else out

    def membership(self, x) -> typing.Union[float, np.ndarray]:
        """
        u(x), vectorised.  At a piece boundary of the left branch the piece on the right is used,
        on the right branch the piece on the left: both give the upper value at a jump.
        """
        return self._evaluate(x, 'value', 1.0)

    def derivative(self, x) -> typing.Union[float, np.ndarray]:
        """closed-form u'(x) from the piece membership() would use; 0 on the core and outside the support"""
        return self._evaluate(x, 'derivative', 0.0)

    @cached_property
    def side_functions(self) -> SideFunctions:
        return to_side_functions(self)

    def alpha_cut(self, alpha: float) -> AlphaCut:
        alpha = float(alpha)
        if not 0.0 <= alpha <= 1.0:
            raise FuzzyError(f"alpha must be in [0,1], got {alpha!r}")
        if alpha == 0.0:
            return AlphaCut(alpha=alpha, lo=self.s_lo, hi=self.s_hi)
        if alpha == 1.0:
            return AlphaCut(alpha=alpha, lo=self.c_lo, hi=self.c_hi)
        lo, hi = self.side_functions.cut(alpha)
        return AlphaCut(alpha=alpha, lo=float(lo), hi=float(hi))

    def cuts(self, levels) -> typing.Tuple[np.ndarray, np.ndarray]:
        """vectorised alpha-cut endpoints (u-(levels), u+(levels))"""
        levels = as_array(levels)
        lo, hi = self.side_functions.cut(levels)
        lo = np.where(levels == 0.0, self.s_lo, np.where(levels == 1.0, self.c_lo, lo))
        hi = np.where(levels == 0.0, self.s_hi, np.where(levels == 1.0, self.c_hi, hi))
        return lo, hi

    def breakpoints(self) -> np.ndarray:
        """support and core ends plus every piece boundary, sorted"""
        xs = [self.s_lo, self.s_hi, self.c_lo, self.c_hi]
        for _, _, piece in self.pieces():
            xs.extend([piece.x_lo, piece.x_hi])
        return np.unique(np.asarray(xs, dtype=float))

    def jump_abscissae(self) -> np.ndarray:
        """abscissae where membership is discontinuous"""
        jumps = []
        for side in (Branch.LEFT, Branch.RIGHT):
            ends = [(p.x_lo, p.value_at_lo, p.x_hi, p.value_at_hi) for p in self.branch(side)]
            if side == Branch.LEFT:
                ends = [(self.s_lo, 0.0, self.s_lo, 0.0)] + ends + [(self.c_lo, 1.0, self.c_lo, 1.0)]
            else:
                ends = [(self.c_hi, 1.0, self.c_hi, 1.0)] + ends + [(self.s_hi, 0.0, self.s_hi, 0.0)]
            for previous, current in zip(ends[:-1], ends[1:]):
                if abs(current[1] - previous[3]) > TOL_X:
                    jumps.append(current[0])
        return np.unique(np.asarray(jumps, dtype=float))


def membership(u: FuzzyNumber, x) -> typing.Union[float, np.ndarray]:
    return u.membership(x)


def alpha_cut(u: FuzzyNumber, alpha: float) -> AlphaCut:
    return u.alpha_cut(alpha)


def _side_segment(piece: Piece, alpha_lo: float, alpha_hi: float) -> SideSegment:
    offset, terms = flatten_terms([SideTerm(1.0, piece)])
    return SideSegment(alpha_lo=alpha_lo, alpha_hi=alpha_hi, offset=offset, terms=terms)


def _side_curve(pieces: typing.Sequence[Piece], start_x: float, end_x: float, orientation: int) -> SideCurve:
    """
    pieces ordered from the support end towards the core; start_x is the support end, end_x the core end
    """
    segments = []
    reached = 0.0

    for piece in pieces:
        if orientation > 0:
            outer_value, inner_value, outer_x = piece.value_at_lo, piece.value_at_hi, piece.x_lo
        else:
            outer_value, inner_value, outer_x = piece.value_at_hi, piece.value_at_lo, piece.x_hi

        if outer_value > reached + TOL_X:
            # jump in membership at outer_x: plateau of the side function
            segments.append(SideSegment.plateau(reached, outer_value, outer_x))
            reached = outer_value
        if inner_value > reached + TOL_X:
            segments.append(_side_segment(piece, reached, inner_value))
            reached = inner_value

    if reached < 1.0:
        segments.append(SideSegment.plateau(reached, 1.0, end_x))
    elif segments:
        last = segments[-1]
        segments[-1] = last.restricted(last.alpha_lo, 1.0)

    if not segments:
        segments.append(SideSegment.plateau(0.0, 1.0, start_x))
    return SideCurve(segments=tuple(segments), orientation=orientation)


def to_side_functions(u: FuzzyNumber) -> SideFunctions:
    minus = _side_curve(u.left, u.s_lo, u.c_lo, orientation=1)
    plus = _side_curve(tuple(reversed(u.right)), u.s_hi, u.c_hi, orientation=-1)
    return SideFunctions(minus=minus, plus=plus)


def _membership_piece(segment: SideSegment, x_lo: float, x_hi: float) -> Piece:
    if len(segment.terms) == 1 and segment.offset == 0.0 and segment.terms[0].coef == 1.0:
        original = segment.terms[0].piece
        if abs(original.x_lo - x_lo) <= TOL_X and abs(original.x_hi - x_hi) <= TOL_X and not original.is_constant:
            return original

    coefficients = segment.linear_coefficients()
    if coefficients is not None and coefficients[0] != 0.0:
        a, b = coefficients
        return LinearPiece(x_lo=x_lo, x_hi=x_hi, a=1.0 / a, b=-b / a)

    piece = SumPiece.from_segment(segment)
    return SumPiece(x_lo=x_lo, x_hi=x_hi, alpha_lo=piece.alpha_lo, alpha_hi=piece.alpha_hi,
                    offset=piece.offset, terms=piece.terms)


def _branch_pieces(curve: SideCurve, start_x: float) -> typing.List[Piece]:
    """
    membership pieces of one branch, ordered from the support end towards the core
    """
    pieces = []
    reached_x = start_x
    for segment in curve.segments:
        x_start = float(segment.value(segment.alpha_lo))
        x_end = float(segment.value(segment.alpha_hi))

        if (x_start - reached_x) * curve.orientation > TOL_X:
            # the side function jumps: membership stays at alpha_lo in between
            lo, hi = sorted((reached_x, x_start))
            pieces.append(ConstantPiece(x_lo=lo, x_hi=hi, c=segment.alpha_lo))
        if not segment.is_plateau and (x_end - x_start) * curve.orientation > TOL_X:
            lo, hi = sorted((x_start, x_end))
            pieces.append(_membership_piece(segment, lo, hi))
        reached_x = x_end
    return pieces


def from_side_functions(s: SideFunctions) -> FuzzyNumber:
    s.check()
    s_lo, c_lo = float(s.minus.value(0.0)), float(s.minus.value(1.0))
    s_hi, c_hi = float(s.plus.value(0.0)), float(s.plus.value(1.0))
    left = _branch_pieces(s.minus, s_lo)
    right = list(reversed(_branch_pieces(s.plus, s_hi)))
    return FuzzyNumber.build(support=(s_lo, s_hi), core=(c_lo, c_hi), left=left, right=right)
