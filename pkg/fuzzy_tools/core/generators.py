import math
import typing
import logging
import numpy as np
from dataclasses import dataclass, field

from .fuzzy_error import InvalidGenerator
from ..helpers.tolerances import ALPHA_GRID_SIZE

logger = logging.getLogger(__name__)

ArrayFunction = typing.Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class GeneratorF:
    """
    A continuous strictly decreasing f: [0,1] -> [0,1] with f(0)=1 and f(1)=0, given in closed form
    together with its inverse and its derivative.  Z_p^f(x) = f^-1(|x| / p) on [-p, p].

    Named generators serialize as {'name': ..., 'params': {...}}; generators built from
    arbitrary callables are usable in memory only.
    """
    name: str
    f: ArrayFunction = field(compare=False)
    f_inverse: ArrayFunction = field(compare=False)
    f_prime: ArrayFunction = field(compare=False)
    differentiable: bool = True
    derivative_limit_at_one: float = -math.inf         # lim f'(t) for t -> 1-
    params: typing.Tuple[typing.Tuple[str, float], ...] = ()

    @property
    def satisfies_smoothing_criterion(self) -> bool:
        """f differentiable and f'(t) -> -inf as t -> 1- : then u (conv) Z_p^f is differentiable for strictly monotone u"""
        return self.differentiable and self.derivative_limit_at_one == -math.inf

    def validate(self) -> 'GeneratorF':
        with np.errstate(divide='ignore', invalid='ignore'):
            if float(self.f(np.asarray(0.0))) != 1.0:
                raise InvalidGenerator(self.name, "f(0) must be exactly 1")
            if float(self.f(np.asarray(1.0))) != 0.0:
                raise InvalidGenerator(self.name, "f(1) must be exactly 0")
            grid = np.linspace(0.0, 1.0, ALPHA_GRID_SIZE)
            values = self.f(grid)
            if np.any(~np.isfinite(values)) or np.any(values < 0.0) or np.any(values > 1.0):
                raise InvalidGenerator(self.name, "f must map [0,1] into [0,1]")
            if np.any(np.diff(values) >= 0.0):
                raise InvalidGenerator(self.name, "f must be strictly decreasing")
            round_trip = self.f_inverse(values)
            if np.max(np.abs(round_trip - grid)) > 1e-9:
                raise InvalidGenerator(self.name, "f_inverse is not the inverse of f")
        return self

    def to_dict(self) -> dict:
        if self.name not in _NAMED_GENERATORS:
            raise InvalidGenerator(self.name, "only named generators can be serialized")
        return {'name': self.name, 'params': dict(self.params)}

    @classmethod
    def from_dict(cls, data: dict) -> 'GeneratorF':
        name = data.get('name')
        if name not in _NAMED_GENERATORS:
            raise InvalidGenerator(str(name), f"unknown generator, expected one of {sorted(_NAMED_GENERATORS)}")
        return _NAMED_GENERATORS[name](**{k: float(v) for k, v in data.get('params', {}).items()})

    @classmethod
    def from_text(cls, text: str) -> 'GeneratorF':
        """parses 'power:0.5', 'sqrt', 'linear', 'cosine', 'circle'"""
        name, _, argument = text.partition(':')
        if name == 'sqrt':
            return cls.sqrt()
        if name == 'linear':
            return cls.linear()
        if name == 'power':
            try:
                return cls.power(float(argument))
            except ValueError:
                raise InvalidGenerator(text, "power generators are written power:<exponent>")
        if name in _NAMED_GENERATORS:
            return _NAMED_GENERATORS[name]()
        raise InvalidGenerator(text, "unknown generator")

    @classmethod
    def power(cls, k: float) -> 'GeneratorF':
        """f(t) = (1-t)^k; k=0.5 gives w_p, k=1 the triangular smoother"""
        if not k > 0:
            raise InvalidGenerator(f"power:{k}", "exponent must be > 0")
        if k < 1:
            limit = -math.inf
        elif k == 1:
            limit = -1.0
        else:
            limit = 0.0
        return cls(
            name='power',
            f=lambda t: np.power(1.0 - t, k),
            f_inverse=lambda s: 1.0 - np.power(s, 1.0 / k),
            f_prime=lambda t: -k * np.power(1.0 - t, k - 1.0),
            differentiable=True,
            derivative_limit_at_one=limit,
            params=(('k', float(k)),)
        ).validate()

    @classmethod
    def sqrt(cls) -> 'GeneratorF':
        return cls.power(0.5)

    @classmethod
    def linear(cls) -> 'GeneratorF':
        return cls.power(1.0)

    @classmethod
    def cosine(cls) -> 'GeneratorF':
        """f(t) = cos(pi t / 2), f'(1) = -pi/2"""
        return cls(
            name='cosine',
            f=lambda t: np.where(t >= 1.0, 0.0, np.cos(0.5 * np.pi * t)),
            f_inverse=lambda s: 2.0 / np.pi * np.arccos(s),
            f_prime=lambda t: -0.5 * np.pi * np.sin(0.5 * np.pi * t),
            differentiable=True,
            derivative_limit_at_one=-0.5 * math.pi
        ).validate()

    @classmethod
    def circle(cls) -> 'GeneratorF':
        """f(t) = sqrt(1 - t^2), f'(t) -> -inf at 1"""
        return cls(
            name='circle',
            f=lambda t: np.sqrt(np.maximum(1.0 - t * t, 0.0)),
            f_inverse=lambda s: np.sqrt(np.maximum(1.0 - s * s, 0.0)),
            f_prime=lambda t: -t / np.sqrt(1.0 - t * t),
            differentiable=True,
            derivative_limit_at_one=-math.inf
        ).validate()


_NAMED_GENERATORS = {
    'power': lambda k=0.5: GeneratorF.power(k),
    'cosine': lambda: GeneratorF.cosine(),
    'circle': lambda: GeneratorF.circle(),
}
