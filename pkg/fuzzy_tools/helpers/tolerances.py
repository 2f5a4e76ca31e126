import os
import logging
from dataclasses import dataclass

logger = logging.getLogger(__name__)

TOL_X = 1e-10                   # root finding / coordinate comparisons
DEFAULT_TOL_D = 1e-7            # "derivative vanishes" assertions, overridable with FUZZ_TOL
ALPHA_GRID_SIZE = 101           # α-levels used by validation and structural checks
N_RES = 257                     # α-nodes used when a result is resampled
D_INF_GRID_SIZE = 1025          # uniform α-grid of the supremum metric
KINK_THRESHOLD = 1e-6           # one-sided slope gap above which a boundary is a kink
DIFF_STEPS = (1e-3, 1e-4, 1e-5, 1e-6)
DIFF_TOL = 1e-3                 # differentiability verdict tolerance
SINGULARITY_CAP = 64
BOUNDARY_MARGIN = 1e-11         # closer than this to a breakpoint, a point is "on" it


def tol_d() -> float:
    return float(os.environ.get("FUZZ_TOL", str(DEFAULT_TOL_D)))


@dataclass(frozen=True)
class Tolerances:
    """
    Tolerances of the numeric pipelines that users may override (command line or environment)
    """
    diff_tol: float = DIFF_TOL
    tol_d: float = DEFAULT_TOL_D
    singularity_cap: int = SINGULARITY_CAP

    @classmethod
    def add_parser_arguments(cls, parser):
        parser.add_argument('--tol', type=float, default=DIFF_TOL, help='Tolerance of the differentiability verdicts')
        parser.add_argument('--tol_d', type=float, default=DEFAULT_TOL_D, help='Tolerance of "derivative vanishes" checks')
        parser.add_argument('--singularity_cap', type=int, default=SINGULARITY_CAP, help='Maximum number of singular points accepted by the smoother synthesis')

    @classmethod
    def create_from_args_and_env_var(cls, args):
        diff_tol = float(os.environ.get("FUZZ_DIFF_TOL", str(args.tol)))
        tol_d_value = float(os.environ.get("FUZZ_TOL", str(args.tol_d)))
        singularity_cap = int(os.environ.get("FUZZ_SINGULARITY_CAP", str(args.singularity_cap)))

        logger.debug(f"tolerances: diff_tol={diff_tol}, tol_d={tol_d_value}, singularity_cap={singularity_cap}")
        return Tolerances(
            diff_tol=diff_tol,
            tol_d=tol_d_value,
            singularity_cap=singularity_cap
        )
