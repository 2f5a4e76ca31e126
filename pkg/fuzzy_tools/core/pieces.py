import abc
import math
import typing
import numpy as np
from functools import cached_property
from dataclasses import dataclass
from strenum import StrEnum

from .generators import GeneratorF
from ..helpers.root_finding import monotone_bisect


class PieceKind(StrEnum):

    CONSTANT = 'constant'
    LINEAR = 'linear'                       # a*x + b
    QUADRATIC = 'quadratic'                 # a*x^2 + b*x + c
    GENERATOR = 'inverse-generator'         # f^-1(|x| / p)
    HERMITE = 'monotone-hermite'            # cubic Hermite through (x, alpha, slope) nodes
    ALPHA_SUM = 'alpha-sum'                 # inverse of a sum of side-function terms


def as_array(x) -> np.ndarray:
    return np.asarray(x, dtype=float)


@dataclass(frozen=True)
class Piece(abc.ABC):
    """
    A smooth monotone membership function on the closed interval [x_lo, x_hi].

    value() and derivative() are closed-form; inverse() returns, for a nondecreasing piece,
    the smallest x with value(x) >= alpha and, for a nonincreasing piece, the largest one.
    All three accept scalars or numpy arrays.
    """
    x_lo: float
    x_hi: float

    kind: typing.ClassVar[PieceKind]

    @abc.abstractmethod
    def value(self, x) -> np.ndarray:
        pass

    @abc.abstractmethod
    def derivative(self, x) -> np.ndarray:
        pass

    @abc.abstractmethod
    def params(self) -> dict:
        pass

    @cached_property
    def value_at_lo(self) -> float:
        return float(self.value(self.x_lo))

    @cached_property
    def value_at_hi(self) -> float:
        return float(self.value(self.x_hi))

    @property
    def value_range(self) -> typing.Tuple[float, float]:
        return min(self.value_at_lo, self.value_at_hi), max(self.value_at_lo, self.value_at_hi)

    @property
    def direction(self) -> int:
        """+1 for a rising piece, -1 for a falling one, 0 when flat"""
        if self.value_at_hi > self.value_at_lo:
            return 1
        if self.value_at_hi < self.value_at_lo:
            return -1
        return 0

    @property
    def is_constant(self) -> bool:
        return self.direction == 0

    @property
    def has_linear_inverse(self) -> bool:
        return False

    @property
    def has_closed_form_inverse(self) -> bool:
        return type(self).inverse is not Piece.inverse

    def inverse(self, alpha) -> np.ndarray:
        alpha = as_array(alpha)
        if self.direction >= 0:
            x = monotone_bisect(self.value, self.x_lo, self.x_hi, alpha, increasing=True)
            x = np.where(alpha <= self.value_at_lo, self.x_lo, x)
            return np.where(alpha > self.value_at_hi, self.x_hi, x)
        x = monotone_bisect(self.value, self.x_lo, self.x_hi, alpha, increasing=False)
        x = np.where(alpha <= self.value_at_hi, self.x_hi, x)
        return np.where(alpha > self.value_at_lo, self.x_lo, x)

    def inverse_slope(self, alpha) -> np.ndarray:
        """d(inverse)/d(alpha), +-inf where the piece is flat"""
        x = self.inverse(alpha)
        with np.errstate(divide='ignore'):
            slope = 1.0 / np.abs(self.derivative(x))
        return self.direction * slope

    def contains(self, x) -> np.ndarray:
        x = as_array(x)
        return (x >= self.x_lo) & (x <= self.x_hi)

    def to_dict(self) -> dict:
        return {
            'kind': str(self.kind),
            'domain': [float(self.x_lo), float(self.x_hi)],
            'params': self.params()
        }

    def _clip(self, x) -> np.ndarray:
        return np.clip(as_array(x), self.x_lo, self.x_hi)


@dataclass(frozen=True)
class ConstantPiece(Piece):
    c: float

    kind: typing.ClassVar[PieceKind] = PieceKind.CONSTANT

    def value(self, x) -> np.ndarray:
        return np.full_like(as_array(x), self.c)

    def derivative(self, x) -> np.ndarray:
        return np.zeros_like(as_array(x))

    def inverse(self, alpha) -> np.ndarray:
        return np.full_like(as_array(alpha), self.x_lo)

    def params(self) -> dict:
        return {'c': float(self.c)}


@dataclass(frozen=True)
class LinearPiece(Piece):
    a: float
    b: float

    kind: typing.ClassVar[PieceKind] = PieceKind.LINEAR

    @classmethod
    def through(cls, x0: float, alpha0: float, x1: float, alpha1: float) -> 'LinearPiece':
        """the segment joining (x0, alpha0) and (x1, alpha1), x0 != x1"""
        a = (alpha1 - alpha0) / (x1 - x0)
        b = alpha0 - a * x0
        return cls(x_lo=min(x0, x1), x_hi=max(x0, x1), a=a, b=b)

    def value(self, x) -> np.ndarray:
        return self.a * as_array(x) + self.b

    def derivative(self, x) -> np.ndarray:
        return np.full_like(as_array(x), self.a)

    @property
    def has_linear_inverse(self) -> bool:
        return self.a != 0.0

    def inverse(self, alpha) -> np.ndarray:
        if self.a == 0.0:
            return np.full_like(as_array(alpha), self.x_lo)
        return self._clip((as_array(alpha) - self.b) / self.a)

    def params(self) -> dict:
        return {'a': float(self.a), 'b': float(self.b)}


@dataclass(frozen=True)
class QuadraticPiece(Piece):
    a: float
    b: float
    c: float

    kind: typing.ClassVar[PieceKind] = PieceKind.QUADRATIC

    def value(self, x) -> np.ndarray:
        x = as_array(x)
        return (self.a * x + self.b) * x + self.c

    def derivative(self, x) -> np.ndarray:
        return 2.0 * self.a * as_array(x) + self.b

    def inverse(self, alpha) -> np.ndarray:
        alpha = as_array(alpha)
        if self.a == 0.0:
            if self.b == 0.0:
                return np.full_like(alpha, self.x_lo)
            return self._clip((alpha - self.c) / self.b)

        # numerically stable roots of a x^2 + b x + (c - alpha) = 0
        disc = np.maximum(self.b * self.b - 4.0 * self.a * (self.c - alpha), 0.0)
        q = -0.5 * (self.b + math.copysign(1.0, self.b) * np.sqrt(disc))
        vertex = -self.b / (2.0 * self.a)
        with np.errstate(divide='ignore', invalid='ignore'):
            r1 = np.where(q == 0.0, vertex, q / self.a)
            r2 = np.where(q == 0.0, vertex, (self.c - alpha) / q)
        d1 = np.abs(r1 - np.clip(r1, self.x_lo, self.x_hi))
        d2 = np.abs(r2 - np.clip(r2, self.x_lo, self.x_hi))
        root = np.where(d1 <= d2, r1, r2)

        x = self._clip(root)
        lo_alpha, hi_alpha = self.value_range
        x = np.where(alpha <= lo_alpha, self.x_lo if self.direction >= 0 else self.x_hi, x)
        return np.where(alpha > hi_alpha, self.x_hi if self.direction >= 0 else self.x_lo, x)

    def params(self) -> dict:
        return {'a': float(self.a), 'b': float(self.b), 'c': float(self.c)}


@dataclass(frozen=True)
class GeneratorPiece(Piece):
    """
    One half of Z_p^f: x -> f^-1(|x| / p) on [-p, 0] (sign = -1) or [0, p] (sign = +1)
    """
    generator: GeneratorF
    p: float
    sign: int

    kind: typing.ClassVar[PieceKind] = PieceKind.GENERATOR

    @classmethod
    def build(cls, generator: GeneratorF, p: float, sign: int) -> 'GeneratorPiece':
        if sign < 0:
            return cls(x_lo=-p, x_hi=0.0, generator=generator, p=p, sign=-1)
        return cls(x_lo=0.0, x_hi=p, generator=generator, p=p, sign=1)

    def _alpha(self, x) -> np.ndarray:
        return self.generator.f_inverse(np.clip(np.abs(as_array(x)) / self.p, 0.0, 1.0))

    def value(self, x) -> np.ndarray:
        return self._alpha(x)

    def derivative(self, x) -> np.ndarray:
        with np.errstate(divide='ignore', invalid='ignore'):
            return self.sign / (self.p * self.generator.f_prime(self._alpha(x)))

    def inverse(self, alpha) -> np.ndarray:
        alpha = np.clip(as_array(alpha), 0.0, 1.0)
        return self.sign * self.p * self.generator.f(alpha)

    def params(self) -> dict:
        return {'generator': self.generator.to_dict(), 'p': float(self.p), 'sign': int(self.sign)}


@dataclass(frozen=True)
class HermitePiece(Piece):
    """
    Piecewise cubic Hermite curve x -> alpha through nodes (x_i, alpha_i, slope_i), x strictly increasing.
    Monotone when the node slopes respect the Fritsch-Carlson bounds (the builders below do).
    """
    nodes: typing.Tuple[typing.Tuple[float, float, float], ...]

    kind: typing.ClassVar[PieceKind] = PieceKind.HERMITE

    @classmethod
    def from_nodes(cls, xs, alphas, slopes) -> 'HermitePiece':
        nodes = tuple((float(x), float(a), float(m)) for x, a, m in zip(xs, alphas, slopes))
        return cls(x_lo=nodes[0][0], x_hi=nodes[-1][0], nodes=nodes)

    @classmethod
    def monotone_through(cls, xs, alphas) -> 'HermitePiece':
        """
        Shape-preserving interpolant: interior slopes are the harmonic mean of the adjacent secants
        (0 at local extrema), end slopes are the adjacent secants
        """
        xs = np.asarray(xs, dtype=float)
        alphas = np.asarray(alphas, dtype=float)
        return cls.from_nodes(xs, alphas, monotone_slopes(xs, alphas))

    @cached_property
    def _xs(self) -> np.ndarray:
        return np.array([n[0] for n in self.nodes])

    @cached_property
    def _ys(self) -> np.ndarray:
        return np.array([n[1] for n in self.nodes])

    @cached_property
    def _ms(self) -> np.ndarray:
        return np.array([n[2] for n in self.nodes])

    def _locate(self, x):
        x = self._clip(x)
        i = np.clip(np.searchsorted(self._xs, x, side='right') - 1, 0, len(self.nodes) - 2)
        width = self._xs[i + 1] - self._xs[i]
        t = (x - self._xs[i]) / width
        return i, width, t

    def value(self, x) -> np.ndarray:
        i, width, t = self._locate(x)
        t2 = t * t
        t3 = t2 * t
        return ((2.0 * t3 - 3.0 * t2 + 1.0) * self._ys[i]
                + (t3 - 2.0 * t2 + t) * width * self._ms[i]
                + (-2.0 * t3 + 3.0 * t2) * self._ys[i + 1]
                + (t3 - t2) * width * self._ms[i + 1])

    def derivative(self, x) -> np.ndarray:
        i, width, t = self._locate(x)
        t2 = t * t
        return ((6.0 * t2 - 6.0 * t) * self._ys[i] / width
                + (3.0 * t2 - 4.0 * t + 1.0) * self._ms[i]
                + (-6.0 * t2 + 6.0 * t) * self._ys[i + 1] / width
                + (3.0 * t2 - 2.0 * t) * self._ms[i + 1])

    @property
    def has_closed_form_inverse(self) -> bool:
        return False

    def inverse(self, alpha) -> np.ndarray:
        """bisection between the nodes; a node level maps back to its own abscissa"""
        alpha = as_array(alpha)
        x = super().inverse(alpha)
        xs, ys = (self._xs, self._ys) if self.direction >= 0 else (self._xs[::-1], self._ys[::-1])
        k = np.clip(np.searchsorted(ys, alpha, side='left'), 0, len(ys) - 1)
        return np.where(ys[k] == alpha, xs[k], x)

    def params(self) -> dict:
        return {'nodes': [list(n) for n in self.nodes]}


def monotone_slopes(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    secants = np.diff(ys) / np.diff(xs)
    slopes = np.empty_like(ys)
    slopes[0] = secants[0]
    slopes[-1] = secants[-1]
    left, right = secants[:-1], secants[1:]
    same_sign = left * right > 0.0
    with np.errstate(divide='ignore', invalid='ignore'):
        harmonic = np.where(same_sign, 2.0 * left * right / (left + right), 0.0)
    slopes[1:-1] = harmonic
    return slopes
