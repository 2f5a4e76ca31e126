import logging
import numpy as np

from .fuzzy_number import FuzzyNumber, Branch
from .fuzzy_error import FuzzyError, GapInBranch, NonMonotonePiece, CoreNotReached, ValueOutOfRange
from ..helpers.tolerances import TOL_X, ALPHA_GRID_SIZE

logger = logging.getLogger(__name__)


def _check_layout(u: FuzzyNumber):
    if not u.s_lo <= u.s_hi:
        raise CoreNotReached(f"support [{u.s_lo!r}, {u.s_hi!r}] is inverted")
    if not u.c_lo <= u.c_hi:
        raise CoreNotReached(f"core [{u.c_lo!r}, {u.c_hi!r}] is inverted")
    if not (u.s_lo <= u.c_lo and u.c_hi <= u.s_hi):
        raise CoreNotReached(f"core [{u.c_lo!r}, {u.c_hi!r}] is not inside the support [{u.s_lo!r}, {u.s_hi!r}]")


def _check_coverage(u: FuzzyNumber, side: Branch):
    pieces = u.branch(side)
    start, end = (u.s_lo, u.c_lo) if side == Branch.LEFT else (u.c_hi, u.s_hi)

    if not pieces:
        if end - start > TOL_X:
            raise GapInBranch(f"no piece covers [{start!r}, {end!r}]", branch=side)
        return
    if end == start:
        raise GapInBranch("pieces declared on an empty branch", branch=side, piece_index=0)

    for index, piece in enumerate(pieces):
        if not piece.x_lo < piece.x_hi:
            raise GapInBranch("piece domain is empty", branch=side, piece_index=index, x=piece.x_lo)
    if abs(pieces[0].x_lo - start) > TOL_X:
        raise GapInBranch("branch does not start at its end of the support or core", branch=side, piece_index=0, x=pieces[0].x_lo)
    if abs(pieces[-1].x_hi - end) > TOL_X:
        raise GapInBranch("branch does not end at its end of the support or core", branch=side, piece_index=len(pieces) - 1, x=pieces[-1].x_hi)
    for index in range(1, len(pieces)):
        if abs(pieces[index].x_lo - pieces[index - 1].x_hi) > TOL_X:
            raise GapInBranch("pieces are not contiguous", branch=side, piece_index=index, x=pieces[index].x_lo)


def _check_pieces(u: FuzzyNumber, side: Branch):
    pieces = u.branch(side)
    expected = 1 if side == Branch.LEFT else -1

    for index, piece in enumerate(pieces):
        xs = np.linspace(piece.x_lo, piece.x_hi, ALPHA_GRID_SIZE)
        with np.errstate(all='ignore'):
            values = piece.value(xs)
            slopes = piece.derivative(xs[1:-1])

        bad = ~np.isfinite(values) | (values < -TOL_X) | (values > 1.0 + TOL_X)
        if np.any(bad):
            raise ValueOutOfRange(f"membership value {values[bad][0]!r} outside [0,1]", branch=side, piece_index=index, x=float(xs[bad][0]))

        steps = np.diff(values) * expected
        if np.any(steps < -TOL_X):
            k = int(np.argmin(steps))
            raise NonMonotonePiece("sampled values are not monotone", branch=side, piece_index=index, x=float(xs[k]))
        if np.any(slopes * expected < -TOL_X):
            k = int(np.argmin(slopes * expected))
            raise NonMonotonePiece(f"derivative {slopes[k]!r} has the wrong sign", branch=side, piece_index=index, x=float(xs[k + 1]))

        outside_core = xs < u.c_lo - TOL_X if side == Branch.LEFT else xs > u.c_hi + TOL_X
        if np.any(outside_core & (values >= 1.0)):
            x = float(xs[outside_core & (values >= 1.0)][0])
            raise CoreNotReached("branch reaches membership 1 outside the declared core", branch=side, piece_index=index, x=x)

    for index in range(1, len(pieces)):
        previous, current = pieces[index - 1], pieces[index]
        if (current.value_at_lo - previous.value_at_hi) * expected < -TOL_X:
            raise NonMonotonePiece("membership decreases across a piece boundary" if side == Branch.LEFT
                                   else "membership increases across a piece boundary",
                                   branch=side, piece_index=index, x=current.x_lo)


def validate(candidate: FuzzyNumber) -> FuzzyNumber:
    """
    Checks a candidate fuzzy number: layout of support and core, coverage and contiguity of both branches,
    range and monotonicity of every piece (sampled values and closed-form derivative signs) and the
    side-function properties on the validation level grid.  Returns the candidate.
    """
    _check_layout(candidate)
    for side in (Branch.LEFT, Branch.RIGHT):
        _check_coverage(candidate, side)
        _check_pieces(candidate, side)

    candidate.side_functions.check()
    logger.debug(f"valid fuzzy number: support={candidate.support}, core={candidate.core}, "
                 f"{len(candidate.left)} left / {len(candidate.right)} right pieces")
    return candidate


def is_valid(candidate: FuzzyNumber) -> bool:
    try:
        validate(candidate)
        return True
    except FuzzyError as e:
        logger.debug(f"invalid fuzzy number: {e}")
        return False
