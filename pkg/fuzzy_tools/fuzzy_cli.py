import os
import sys
import typing
import logging
import argparse
import numpy as np
from dataclasses import dataclass, field
from strenum import StrEnum

from .core import FuzzyNumber, FuzzyError, NumericFailure, InvalidSchedule, GeneratorF, load, save, dumps
from .fuzzy_arith import add, sub, mul
from .fuzzy_convolution import nabla, oracle_gap
from .fuzzy_smoother import SmootherFamily, make_smoother
from .fuzzy_analyzer import analyze, approximate, check_differentiable, probe_points, quotient_step_scale, write_convergence_csv
from .helpers.csv_export import write_rows, format_number_17
from .helpers.tolerances import Tolerances

logger = logging.getLogger(__name__)

SAMPLE_INTERVALS = 1000


class Verb(StrEnum):

    VALIDATE = 'validate'
    CUT = 'cut'
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'
    NABLA = 'nabla'
    SMOOTH = 'smooth'
    ANALYZE = 'analyze'
    CONVERGE = 'converge'
    SAMPLE = 'sample'
    ORACLE = 'oracle'


_BINARY_VERBS = (Verb.ADD, Verb.SUB, Verb.MUL, Verb.NABLA, Verb.ORACLE)
_BINARY_OPERATIONS = {Verb.ADD: add, Verb.SUB: sub, Verb.MUL: mul, Verb.NABLA: nabla}


def parse_schedule(text: str) -> typing.List[float]:
    """'0.5,0.25,0.125' or 'geometric:<p0>,<n>' (p0 / 2^k for k = 0..n-1)"""
    try:
        if text.startswith('geometric:'):
            p0, n = text[len('geometric:'):].split(',')
            return [float(p0) / 2 ** k for k in range(int(n))]
        return [float(v) for v in text.split(',') if v.strip() != '']
    except ValueError:
        raise InvalidSchedule(f"can not parse schedule '{text}'")


@dataclass
class Command:
    verb: Verb
    inputs: typing.List[str]
    alpha: float = None
    p: float = None
    step: float = None
    schedule: typing.List[float] = None
    out: str = None
    report: str = None
    family: SmootherFamily = SmootherFamily.SYNTHESIZED
    generator: str = None
    workers: int = 1
    tolerances: Tolerances = field(default_factory=Tolerances)

    def check(self) -> 'Command':
        expected = 2 if self.verb in _BINARY_VERBS else 1
        if len(self.inputs) != expected:
            raise FuzzyError(f"'{self.verb}' expects {expected} input file(s), got {len(self.inputs)}")
        required = {
            Verb.CUT: ('alpha',),
            Verb.SMOOTH: ('p',),
            Verb.CONVERGE: ('schedule',),
            Verb.ORACLE: ('step',)
        }.get(self.verb, ())
        for option in required:
            if getattr(self, option) is None:
                raise FuzzyError(f"'{self.verb}' requires --{option}")
        return self


class _Output:
    """the --out file, or stdout"""

    def __init__(self, path: str = None):
        self._path = path
        self._file = None

    def __enter__(self) -> typing.TextIO:
        if self._path is None:
            return sys.stdout
        self._file = open(self._path, 'wt', newline='')
        return self._file

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self._file is not None:
            self._file.close()


def _generator(cmd: Command) -> typing.Optional[GeneratorF]:
    return GeneratorF.from_text(cmd.generator) if cmd.generator else None


def _write_number(cmd: Command, u: FuzzyNumber, smoother_spec: dict = None):
    if cmd.out is None:
        sys.stdout.write(dumps(u, smoother_spec))
    else:
        save(cmd.out, u, smoother_spec)


def _smooth(cmd: Command, u: FuzzyNumber) -> int:
    report = analyze(u)
    w, spec = make_smoother(u, cmd.p, family=cmd.family, report=report, generator=_generator(cmd),
                            singularity_cap=cmd.tolerances.singularity_cap, derivative_tol=cmd.tolerances.tol_d)
    v = nabla(u, w)
    _write_number(cmd, v, spec.to_dict() if spec is not None else None)

    analysis = analyze(v)
    report_path = cmd.report or (f"{cmd.out}.analysis.csv" if cmd.out else None)
    if report_path is None:
        analysis.to_csv(sys.stderr)
    else:
        with open(report_path, 'wt', newline='') as f:
            analysis.to_csv(f)

    verdicts = check_differentiable(v, probe_points(u, v, w, report), tol=cmd.tolerances.diff_tol, step_scale=quotient_step_scale(cmd.p))
    failed = [verdict.x for verdict in verdicts if not verdict.passed]
    if failed:
        raise NumericFailure(f"smoothed number is not differentiable at {failed}")
    return 0


def _converge(cmd: Command, u: FuzzyNumber) -> int:
    rows = approximate(u, cmd.schedule, family=cmd.family, generator=_generator(cmd),
                       tol=cmd.tolerances.diff_tol, singularity_cap=cmd.tolerances.singularity_cap,
                       derivative_tol=cmd.tolerances.tol_d, workers=cmd.workers)
    with _Output(cmd.out) as stream:
        write_convergence_csv(stream, rows)
    failed = [row.p for row in rows if not row.diff_ok]
    if failed:
        raise NumericFailure(f"differentiability checks failed for p in {failed}")
    return 0


def _sample(cmd: Command, u: FuzzyNumber):
    width = u.s_hi - u.s_lo
    if width == 0:
        xs = np.array([u.s_lo])
    else:
        h = cmd.step if cmd.step is not None else width / SAMPLE_INTERVALS
        if not h > 0:
            raise FuzzyError(f"--step must be > 0, got {h!r}")
        xs = u.s_lo + h * np.arange(int(np.floor(width / h + 1e-9)) + 1)
    with _Output(cmd.out) as stream:
        write_rows(stream, ('x', 'value'), zip(xs, u.membership(xs)), formatter=format_number_17)


def run(cmd: Command) -> int:
    """executes a command; returns the process exit status (0 ok, 1 invalid input, 2 numeric failure)"""
    try:
        cmd.check()
        documents = [load(path) for path in cmd.inputs]
        numbers = [d.number for d in documents]
        u = numbers[0]

        if cmd.verb == Verb.VALIDATE:
            print(f"{cmd.inputs[0]}: valid fuzzy number, support [{u.s_lo!r}, {u.s_hi!r}], core [{u.c_lo!r}, {u.c_hi!r}]")
        elif cmd.verb == Verb.CUT:
            cut = u.alpha_cut(cmd.alpha)
            print(f"{cut.lo!r} {cut.hi!r}")
        elif cmd.verb in _BINARY_OPERATIONS:
            _write_number(cmd, _BINARY_OPERATIONS[cmd.verb](u, numbers[1]))
        elif cmd.verb == Verb.ORACLE:
            gap = oracle_gap(u, numbers[1], cmd.step)
            with _Output(cmd.out) as stream:
                stream.write(f"{gap!r}\n")
        elif cmd.verb == Verb.SMOOTH:
            return _smooth(cmd, u)
        elif cmd.verb == Verb.ANALYZE:
            with _Output(cmd.out) as stream:
                analyze(u).to_csv(stream)
        elif cmd.verb == Verb.CONVERGE:
            return _converge(cmd, u)
        elif cmd.verb == Verb.SAMPLE:
            _sample(cmd, u)
        return 0

    except NumericFailure as e:
        logger.error(f"numeric failure: {e}")
        return 2
    except FuzzyError as e:
        logger.error(f"{e}")
        return 1


class _ArgumentParser(argparse.ArgumentParser):
    """usage errors raise FuzzyError (exit status 1) instead of exiting with status 2"""

    def error(self, message):
        raise FuzzyError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument('inputs', nargs='+', help='Fuzzy-number file(s)')
    common.add_argument('--alpha', type=float, default=None, help='Level of the alpha-cut (cut)')
    common.add_argument('--p', type=float, default=None, help='Smoother radius (smooth)')
    common.add_argument('--step', type=float, default=None, help='Grid step (oracle, sample)')
    common.add_argument('--schedule', type=str, default=None, help='Radii: "0.5,0.25,0.125" or "geometric:<p0>,<n>" (converge)')
    common.add_argument('--out', type=str, default=None, help='Output file (default: stdout)')
    common.add_argument('--report', type=str, default=None, help='Analysis CSV of the smoothed number (default: <out>.analysis.csv, stderr without --out)')
    common.add_argument('--family', type=str, default=str(SmootherFamily.SYNTHESIZED), choices=[str(f) for f in SmootherFamily], help='Smoother family (smooth, converge)')
    common.add_argument('--generator', type=str, default=None, help='Generator of the "generator" family: power:<k>, sqrt, linear, cosine, circle')
    common.add_argument('--workers', type=int, default=1, help='Radii evaluated in parallel (converge)')
    Tolerances.add_parser_arguments(common)

    parser = _ArgumentParser(description='Arithmetic, convolution and smoothing of fuzzy numbers given by piecewise membership functions.')
    subparsers = parser.add_subparsers(dest='verb', required=True)
    for verb in Verb:
        subparsers.add_parser(str(verb), parents=[common])
    return parser


def parse_command(argv: typing.Sequence[str] = None) -> Command:
    args = build_parser().parse_args(argv)
    try:
        family = SmootherFamily(os.environ.get("FUZZ_FAMILY", args.family))
        workers = int(os.environ.get("FUZZ_WORKERS", args.workers))
        tolerances = Tolerances.create_from_args_and_env_var(args)
    except ValueError as e:
        raise FuzzyError(f"invalid option or environment override: {e}")

    return Command(
        verb=Verb(args.verb),
        inputs=args.inputs,
        alpha=args.alpha,
        p=args.p,
        step=args.step,
        schedule=parse_schedule(args.schedule) if args.schedule is not None else None,
        out=args.out,
        report=args.report,
        family=family,
        generator=os.environ.get("FUZZ_GENERATOR", args.generator),
        workers=workers,
        tolerances=tolerances
    )


def main(argv: typing.Sequence[str] = None) -> int:
    try:
        cmd = parse_command(argv)
    except FuzzyError as e:
        logger.error(f"{e}")
        return 1
    return run(cmd)


if __name__ == '__main__':
    level = logging.INFO

    if os.environ.get('VERBOSE_ENABLED'):
        level = logging.DEBUG

    logging.basicConfig(level=level, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    sys.exit(main())
