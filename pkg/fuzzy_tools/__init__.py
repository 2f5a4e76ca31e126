from .core import *
from .helpers import *
from .fuzzy_arith import add, sub, mul, scale, neg, d_inf, d_inf_report, DistanceReport
from .fuzzy_convolution import nabla, sup_min_grid, oracle_gap, GridFunction
from .fuzzy_smoother import SmootherFamily, SmootherSpec, make_w_p, make_Z_p_f, synthesize, spec_for, make_smoother, smoothing_criterion
from .fuzzy_analyzer import (SingularKind, SingularPoint, AnalysisReport, DiffVerdict, ConvergenceRow, Approximator,
                             analyze, check_differentiable, approximate, lipschitz_bound, probe_points, quotient_step_scale)

# Set default logging handler to avoid "No handler found" warnings.
import logging
from logging import NullHandler

logger = logging.getLogger(__name__)
logger.addHandler(NullHandler())
