from .timer import Timer
from .tolerances import Tolerances, tol_d
from .root_finding import monotone_bisect
