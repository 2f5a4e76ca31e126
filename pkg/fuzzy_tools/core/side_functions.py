import typing
import logging
import numpy as np
from functools import cached_property
from dataclasses import dataclass

from .pieces import Piece, PieceKind, LinearPiece, as_array
from .fuzzy_error import SideFunctionViolation
from ..helpers.root_finding import monotone_bisect
from ..helpers.tolerances import TOL_X, ALPHA_GRID_SIZE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SideTerm:
    """coef * piece^-1(alpha)"""
    coef: float
    piece: Piece

    def value(self, alpha) -> np.ndarray:
        return self.coef * self.piece.inverse(alpha)

    def slope(self, alpha) -> np.ndarray:
        with np.errstate(invalid='ignore'):
            return self.coef * self.piece.inverse_slope(alpha)

    def scaled(self, k: float) -> 'SideTerm':
        return SideTerm(coef=self.coef * k, piece=self.piece)


def flatten_terms(terms: typing.Iterable[SideTerm]) -> typing.Tuple[float, typing.Tuple[SideTerm, ...]]:
    """
    expands the terms whose piece is itself a side sum into its own terms;
    returns (offset contribution, flat terms)
    """
    offset = 0.0
    flat = []
    for term in terms:
        if isinstance(term.piece, SumPiece):
            offset += term.coef * term.piece.offset
            flat.extend(t.scaled(term.coef) for t in term.piece.terms)
        else:
            flat.append(term)
    return offset, tuple(flat)


@dataclass(frozen=True)
class SideSegment:
    """
    A side function restricted to the level interval (alpha_lo, alpha_hi]:
    alpha -> offset + sum(coef * piece^-1(alpha)).  Without terms the segment is a plateau.
    """
    alpha_lo: float
    alpha_hi: float
    offset: float
    terms: typing.Tuple[SideTerm, ...] = ()

    @classmethod
    def plateau(cls, alpha_lo: float, alpha_hi: float, x: float) -> 'SideSegment':
        return cls(alpha_lo=alpha_lo, alpha_hi=alpha_hi, offset=float(x))

    @classmethod
    def linear(cls, alpha_lo: float, alpha_hi: float, x_at_lo: float, x_at_hi: float) -> 'SideSegment':
        if x_at_lo == x_at_hi:
            return cls.plateau(alpha_lo, alpha_hi, x_at_lo)
        piece = LinearPiece.through(x_at_lo, alpha_lo, x_at_hi, alpha_hi)
        return cls(alpha_lo=alpha_lo, alpha_hi=alpha_hi, offset=0.0, terms=(SideTerm(1.0, piece),))

    @property
    def is_plateau(self) -> bool:
        return len(self.terms) == 0

    def value(self, alpha) -> np.ndarray:
        alpha = as_array(alpha)
        result = np.full_like(alpha, self.offset)
        for term in self.terms:
            result = result + term.value(alpha)
        return result

    def slope(self, alpha) -> np.ndarray:
        alpha = as_array(alpha)
        result = np.zeros_like(alpha)
        with np.errstate(invalid='ignore'):
            for term in self.terms:
                result = result + term.slope(alpha)
        return result

    def linear_coefficients(self) -> typing.Optional[typing.Tuple[float, float]]:
        """(A, B) with value(alpha) = A * alpha + B when every term is linear in alpha, else None"""
        a_total, b_total = 0.0, self.offset
        for term in self.terms:
            piece = term.piece
            if not piece.has_linear_inverse:
                return None
            a_total += term.coef / piece.a
            b_total -= term.coef * piece.b / piece.a
        return a_total, b_total

    def scaled(self, k: float) -> 'SideSegment':
        return SideSegment(alpha_lo=self.alpha_lo, alpha_hi=self.alpha_hi,
                           offset=self.offset * k,
                           terms=tuple(t.scaled(k) for t in self.terms))

    def restricted(self, alpha_lo: float, alpha_hi: float) -> 'SideSegment':
        return SideSegment(alpha_lo=alpha_lo, alpha_hi=alpha_hi, offset=self.offset, terms=self.terms)

    def to_dict(self) -> dict:
        return {
            'alpha': [float(self.alpha_lo), float(self.alpha_hi)],
            'offset': float(self.offset),
            'terms': [{'coef': float(t.coef), 'piece': t.piece.to_dict()} for t in self.terms]
        }


@dataclass(frozen=True)
class SideCurve:
    """
    A piecewise side function on [0, 1]; segments tile (0, 1] as consecutive (alpha_lo, alpha_hi]
    intervals, which makes the curve left-continuous on (0, 1].  At alpha = 0 the first segment is
    used (right-continuity at 0).

    orientation is +1 for a lower side u- (nondecreasing) and -1 for an upper side u+ (nonincreasing).
    """
    segments: typing.Tuple[SideSegment, ...]
    orientation: int

    @cached_property
    def _alpha_los(self) -> np.ndarray:
        return np.array([s.alpha_lo for s in self.segments])

    @cached_property
    def _alpha_his(self) -> np.ndarray:
        return np.array([s.alpha_hi for s in self.segments])

    def _evaluate(self, indexes: np.ndarray, alpha: np.ndarray, method: str) -> np.ndarray:
        out = np.empty_like(alpha)
        for k in np.unique(indexes):
            mask = indexes == k
            out[mask] = getattr(self.segments[k], method)(alpha[mask])
        return out

    def _left_indexes(self, alpha: np.ndarray) -> np.ndarray:
        return np.clip(np.searchsorted(self._alpha_his, alpha, side='left'), 0, len(self.segments) - 1)

    def _right_indexes(self, alpha: np.ndarray) -> np.ndarray:
        return np.clip(np.searchsorted(self._alpha_los, alpha, side='right') - 1, 0, len(self.segments) - 1)

    def value(self, alpha) -> typing.Union[float, np.ndarray]:
        alpha = as_array(alpha)
        flat = np.atleast_1d(alpha).ravel()
        out = self._evaluate(self._left_indexes(flat), flat, 'value').reshape(alpha.shape)
        return float(out) if out.ndim == 0 else out

    def value_right(self, alpha) -> typing.Union[float, np.ndarray]:
        """right limit lim_{t -> alpha+}, equal to value(alpha) except at the top of a jump"""
        alpha = as_array(alpha)
        flat = np.atleast_1d(alpha).ravel()
        out = self._evaluate(self._right_indexes(flat), flat, 'value').reshape(alpha.shape)
        return float(out) if out.ndim == 0 else out

    def slope_left(self, alpha) -> np.ndarray:
        alpha = as_array(alpha)
        flat = np.atleast_1d(alpha).ravel()
        return self._evaluate(self._left_indexes(flat), flat, 'slope').reshape(alpha.shape)

    def slope_right(self, alpha) -> np.ndarray:
        alpha = as_array(alpha)
        flat = np.atleast_1d(alpha).ravel()
        return self._evaluate(self._right_indexes(flat), flat, 'slope').reshape(alpha.shape)

    def segment_at(self, alpha: float) -> SideSegment:
        return self.segments[int(self._left_indexes(np.asarray([alpha]))[0])]

    def breakpoints(self) -> np.ndarray:
        return np.unique(np.concatenate([self._alpha_los, self._alpha_his]))

    def scaled(self, k: float) -> 'SideCurve':
        orientation = self.orientation if k >= 0 else -self.orientation
        return SideCurve(segments=tuple(s.scaled(k) for s in self.segments), orientation=orientation)

    def add(self, other: 'SideCurve') -> 'SideCurve':
        """pointwise sum, segmented on the union of both curves' breakpoints"""
        if self.orientation != other.orientation:
            raise ValueError("only side curves of the same orientation can be added")
        levels = np.unique(np.concatenate([self.breakpoints(), other.breakpoints()]))
        segments = []
        for lo, hi in zip(levels[:-1], levels[1:]):
            mid = 0.5 * (lo + hi)
            mine = self.segment_at(mid)
            theirs = other.segment_at(mid)
            segments.append(SideSegment(alpha_lo=float(lo), alpha_hi=float(hi),
                                        offset=mine.offset + theirs.offset,
                                        terms=mine.terms + theirs.terms))
        return SideCurve(segments=tuple(segments), orientation=self.orientation)

    def to_dict(self) -> dict:
        return {'orientation': self.orientation, 'segments': [s.to_dict() for s in self.segments]}


@dataclass(frozen=True)
class SideFunctions:
    minus: SideCurve
    plus: SideCurve

    def cut(self, alpha) -> typing.Tuple[typing.Any, typing.Any]:
        return self.minus.value(alpha), self.plus.value(alpha)

    def breakpoints(self) -> np.ndarray:
        return np.unique(np.concatenate([self.minus.breakpoints(), self.plus.breakpoints()]))

    def check(self) -> 'SideFunctions':
        """
        verifies, on a dense level grid augmented with the breakpoints, that minus is nondecreasing,
        plus nonincreasing, both tile [0, 1] from 0 and minus(1) <= plus(1)
        """
        for clause, curve, name in (('(i)', self.minus, 'minus'), ('(ii)', self.plus, 'plus')):
            if len(curve.segments) == 0:
                raise SideFunctionViolation(clause, f"{name} has no segment")
            if curve.segments[0].alpha_lo != 0.0:
                raise SideFunctionViolation('(iii)', f"{name} does not start at alpha=0")
            if curve.segments[-1].alpha_hi != 1.0:
                raise SideFunctionViolation(clause, f"{name} does not end at alpha=1")
            for previous, current in zip(curve.segments[:-1], curve.segments[1:]):
                if previous.alpha_hi != current.alpha_lo or current.alpha_hi <= current.alpha_lo:
                    raise SideFunctionViolation(clause, f"{name} segments do not tile (0,1] at alpha={current.alpha_lo!r}")

            levels = np.unique(np.concatenate([np.linspace(0.0, 1.0, ALPHA_GRID_SIZE), curve.breakpoints()]))
            # interleave value and right limit: v(a0), v(a0+), v(a1), v(a1+), ...
            samples = np.column_stack([curve.value(levels), curve.value_right(levels)]).ravel()
            steps = np.diff(samples) * curve.orientation
            if np.any(~np.isfinite(samples)):
                raise SideFunctionViolation(clause, f"{name} is not finite")
            if np.any(steps < -TOL_X):
                where = levels[min(int(np.argmin(steps)) // 2, len(levels) - 1)]
                direction = 'nondecreasing' if curve.orientation > 0 else 'nonincreasing'
                raise SideFunctionViolation(clause, f"{name} is not {direction} near alpha={where!r}")

        low, high = self.minus.value(1.0), self.plus.value(1.0)
        if low > high + TOL_X:
            raise SideFunctionViolation('(iv)', f"minus(1)={low!r} > plus(1)={high!r}")
        return self


@dataclass(frozen=True)
class SumPiece(Piece):
    """
    Membership piece defined as the inverse of a side sum S(alpha) = offset + sum(coef * piece^-1(alpha))
    on [alpha_lo, alpha_hi].  S nondecreasing gives a left-branch piece, S nonincreasing a right-branch one.
    """
    alpha_lo: float
    alpha_hi: float
    offset: float
    terms: typing.Tuple[SideTerm, ...]

    kind: typing.ClassVar[PieceKind] = PieceKind.ALPHA_SUM

    @classmethod
    def from_segment(cls, segment: SideSegment) -> 'SumPiece':
        x_at_lo = float(segment.value(segment.alpha_lo))
        x_at_hi = float(segment.value(segment.alpha_hi))
        return cls(x_lo=min(x_at_lo, x_at_hi), x_hi=max(x_at_lo, x_at_hi),
                   alpha_lo=segment.alpha_lo, alpha_hi=segment.alpha_hi,
                   offset=segment.offset, terms=segment.terms)

    @cached_property
    def segment(self) -> SideSegment:
        return SideSegment(alpha_lo=self.alpha_lo, alpha_hi=self.alpha_hi, offset=self.offset, terms=self.terms)

    @cached_property
    def orientation(self) -> int:
        rising = float(self.segment.value(self.alpha_hi)) >= float(self.segment.value(self.alpha_lo))
        return 1 if rising else -1

    @property
    def has_closed_form_inverse(self) -> bool:
        return all(t.piece.has_closed_form_inverse for t in self.terms)

    @cached_property
    def _pivot(self) -> typing.Optional[int]:
        """index of a term whose piece inverts by bisection, None when every term inverts in closed form"""
        for index, term in enumerate(self.terms):
            if term.coef != 0.0 and not term.piece.is_constant and not term.piece.has_closed_form_inverse:
                return index
        return None

    @cached_property
    def _pivot_domain(self) -> typing.Tuple[float, float]:
        piece = self.terms[self._pivot].piece
        ends = piece.inverse(np.array([self.alpha_lo, self.alpha_hi]))
        return float(np.min(ends)), float(np.max(ends))

    def _largest_level(self, x: np.ndarray) -> np.ndarray:
        # largest alpha with S(alpha) <= x (rising side) or S(alpha) >= x (falling side)
        side = self.segment.value
        return monotone_bisect(lambda a: -self.orientation * side(a), self.alpha_lo, self.alpha_hi,
                               -self.orientation * x, increasing=False)

    def _largest_level_on_pivot(self, x: np.ndarray) -> np.ndarray:
        """
        same search, run on the abscissa y of the pivot piece: alpha = pivot(y) and the pivot term is coef * y,
        so only the other terms are inverted at each step
        """
        pivot = self.terms[self._pivot]
        piece = pivot.piece
        others = [t for k, t in enumerate(self.terms) if k != self._pivot]

        def side(y):
            alpha = piece.value(y)
            total = self.offset + pivot.coef * y
            for term in others:
                total = total + term.value(alpha)
            return total

        # alpha grows with y on a rising pivot: the largest alpha is the largest y, else the smallest one
        y_lo, y_hi = self._pivot_domain
        y = monotone_bisect(lambda t: -self.orientation * side(t), y_lo, y_hi,
                            -self.orientation * x, increasing=piece.direction < 0)
        return np.clip(piece.value(y), self.alpha_lo, self.alpha_hi)

    def value(self, x) -> np.ndarray:
        x = self._clip(x)
        alpha = self._largest_level(x) if self._pivot is None else self._largest_level_on_pivot(x)
        if self.orientation > 0:
            return np.where(x >= self.x_hi, self.alpha_hi, alpha)
        return np.where(x <= self.x_lo, self.alpha_hi, alpha)

    def derivative(self, x) -> np.ndarray:
        slope = self.segment.slope(self.value(x))
        with np.errstate(divide='ignore'):
            return np.where(np.isinf(slope), 0.0, 1.0 / slope)

    def inverse(self, alpha) -> np.ndarray:
        alpha = np.clip(as_array(alpha), self.alpha_lo, self.alpha_hi)
        return self._clip(self.segment.value(alpha))

    def inverse_slope(self, alpha) -> np.ndarray:
        alpha = np.clip(as_array(alpha), self.alpha_lo, self.alpha_hi)
        return self.segment.slope(alpha)

    def params(self) -> dict:
        data = self.segment.to_dict()
        return {'alpha': data['alpha'], 'offset': data['offset'], 'terms': data['terms']}
