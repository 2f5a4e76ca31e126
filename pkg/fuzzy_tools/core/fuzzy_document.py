import json
import typing
import logging
from dataclasses import dataclass

from .pieces import Piece, PieceKind, ConstantPiece, LinearPiece, QuadraticPiece, GeneratorPiece, HermitePiece
from .side_functions import SideTerm, SumPiece
from .generators import GeneratorF
from .fuzzy_number import FuzzyNumber
from .fuzzy_validator import validate
from .fuzzy_error import FuzzyError, FuzzyFileError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FuzzyDocument:
    """
    Content of a fuzzy-number file: the number itself and, for smoothers written by the synthesis,
    the smoother specification they were built from
    """
    number: FuzzyNumber
    smoother_spec: typing.Optional[dict] = None
    path: typing.Optional[str] = None


def _float(data: dict, key: str, path: str, field: str) -> float:
    if key not in data:
        raise FuzzyFileError("missing value", path=path, field=f"{field}.{key}")
    try:
        return float(data[key])
    except (TypeError, ValueError):
        raise FuzzyFileError(f"not a number: {data[key]!r}", path=path, field=f"{field}.{key}")


def _pair(data: dict, key: str, path: str, field: str = None) -> typing.Tuple[float, float]:
    name = f"{field}.{key}" if field else key
    value = data.get(key)
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise FuzzyFileError("expected a [lo, hi] pair", path=path, field=name)
    try:
        return float(value[0]), float(value[1])
    except (TypeError, ValueError):
        raise FuzzyFileError(f"not a number pair: {value!r}", path=path, field=name)


def piece_from_dict(data: dict, path: str = None, field: str = 'piece') -> Piece:
    if not isinstance(data, dict):
        raise FuzzyFileError("a piece must be an object", path=path, field=field)
    try:
        kind = PieceKind(data.get('kind'))
    except ValueError:
        raise FuzzyFileError(f"unknown piece kind {data.get('kind')!r}", path=path, field=f"{field}.kind")

    x_lo, x_hi = _pair(data, 'domain', path, field)
    params = data.get('params', {})
    if not isinstance(params, dict):
        raise FuzzyFileError("params must be an object", path=path, field=f"{field}.params")
    where = f"{field}.params"

    if kind == PieceKind.CONSTANT:
        return ConstantPiece(x_lo=x_lo, x_hi=x_hi, c=_float(params, 'c', path, where))
    elif kind == PieceKind.LINEAR:
        return LinearPiece(x_lo=x_lo, x_hi=x_hi, a=_float(params, 'a', path, where), b=_float(params, 'b', path, where))
    elif kind == PieceKind.QUADRATIC:
        return QuadraticPiece(x_lo=x_lo, x_hi=x_hi,
                              a=_float(params, 'a', path, where),
                              b=_float(params, 'b', path, where),
                              c=_float(params, 'c', path, where))
    elif kind == PieceKind.GENERATOR:
        try:
            generator = GeneratorF.from_dict(params.get('generator', {}))
        except FuzzyError as e:
            raise FuzzyFileError(str(e), path=path, field=f"{where}.generator")
        piece = GeneratorPiece.build(generator, _float(params, 'p', path, where), int(_float(params, 'sign', path, where)))
        if piece.x_lo != x_lo or piece.x_hi != x_hi:
            raise FuzzyFileError(f"domain must be [{piece.x_lo!r}, {piece.x_hi!r}]", path=path, field=f"{field}.domain")
        return piece
    elif kind == PieceKind.HERMITE:
        nodes = params.get('nodes')
        if not isinstance(nodes, list) or len(nodes) < 2 or any(not isinstance(n, list) or len(n) != 3 for n in nodes):
            raise FuzzyFileError("expected at least 2 [x, alpha, slope] nodes", path=path, field=f"{where}.nodes")
        try:
            return HermitePiece.from_nodes(*zip(*[[float(v) for v in n] for n in nodes]))
        except (TypeError, ValueError):
            raise FuzzyFileError("nodes must be numbers", path=path, field=f"{where}.nodes")
    else:  # alpha-sum
        alpha_lo, alpha_hi = _pair(params, 'alpha', path, where)
        terms = []
        for index, term in enumerate(params.get('terms', [])):
            term_field = f"{where}.terms[{index}]"
            if not isinstance(term, dict):
                raise FuzzyFileError("a term must be an object", path=path, field=term_field)
            terms.append(SideTerm(coef=_float(term, 'coef', path, term_field),
                                  piece=piece_from_dict(term.get('piece'), path, f"{term_field}.piece")))
        return SumPiece(x_lo=x_lo, x_hi=x_hi, alpha_lo=alpha_lo, alpha_hi=alpha_hi,
                        offset=_float(params, 'offset', path, where), terms=tuple(terms))


def number_to_dict(u: FuzzyNumber, smoother_spec: dict = None) -> dict:
    data = {
        'support': [u.s_lo, u.s_hi],
        'core': [u.c_lo, u.c_hi],
        'left': [p.to_dict() for p in u.left],
        'right': [p.to_dict() for p in u.right]
    }
    if smoother_spec is not None:
        data['smoother_spec'] = smoother_spec
    return data


def number_from_dict(data: dict, path: str = None) -> FuzzyDocument:
    if not isinstance(data, dict):
        raise FuzzyFileError("a fuzzy number must be an object", path=path)
    for branch in ('left', 'right'):
        if not isinstance(data.get(branch, []), list):
            raise FuzzyFileError("expected a list of pieces", path=path, field=branch)

    u = FuzzyNumber.build(
        support=_pair(data, 'support', path),
        core=_pair(data, 'core', path),
        left=[piece_from_dict(p, path, f"left[{i}]") for i, p in enumerate(data.get('left', []))],
        right=[piece_from_dict(p, path, f"right[{i}]") for i, p in enumerate(data.get('right', []))]
    )
    smoother_spec = data.get('smoother_spec')
    if smoother_spec is not None and not isinstance(smoother_spec, dict):
        raise FuzzyFileError("smoother_spec must be an object", path=path, field='smoother_spec')
    return FuzzyDocument(number=validate(u), smoother_spec=smoother_spec, path=path)


def dumps(u: FuzzyNumber, smoother_spec: dict = None) -> str:
    # json writes floats with repr(): shortest decimal that round-trips
    return json.dumps(number_to_dict(u, smoother_spec), indent=2, allow_nan=False) + "\n"


def loads(text: str, path: str = None) -> FuzzyDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FuzzyFileError(f"not a valid document: {e.msg} at line {e.lineno}", path=path)
    return number_from_dict(data, path)


def load(path: str) -> FuzzyDocument:
    logger.debug(f"reading fuzzy number from {path}")
    try:
        with open(path, 'rt') as f:
            text = f.read()
    except OSError as e:
        raise FuzzyFileError(f"can not read file: {e.strerror}", path=path)
    return loads(text, path)


def save(path: str, u: FuzzyNumber, smoother_spec: dict = None):
    logger.debug(f"writing fuzzy number to {path}")
    with open(path, 'wt') as f:
        f.write(dumps(u, smoother_spec))
