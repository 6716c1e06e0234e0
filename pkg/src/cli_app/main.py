"""Command-line entry point: `stefan-gt {run,spectrum,verify,sweep}`.

Exit codes: 0 success, 1 solver failure, 2 configuration or usage error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from cli_app.console import configure_logging
from cli_app.container import Container
from core.__seedwork.domain.exceptions import BaseValidationException, ValidationException
from core.__seedwork.infra.files import atomic_directory
from core.oracle.application.use_cases import ComputeSpectrumUseCase
from core.oracle.infra.spectrum_csv import write_spectrum_csv
from core.scenario.application.use_cases import RunScenarioUseCase, SweepScenarioUseCase
from core.scenario.domain.exceptions import SweepCapExceededException
from core.scenario.infra.toml_loader import load_scenario
from core.verification.application.use_cases import VerifySuiteUseCase

logger = logging.getLogger('cli_app')

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (BaseValidationException, ValidationException, SweepCapExceededException)


def parse_k_range(text: str) -> Tuple[int, ...]:
    """'0-8' is inclusive, '1,3,5' is a list; an empty range yields ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        if '-' in text:
            first, _, last = text.partition('-')
            return tuple(range(int(first), int(last) + 1))
        return tuple(int(part) for part in text.split(',') if part.strip())
    except ValueError as ex:
        raise argparse.ArgumentTypeError(f'invalid k range {text!r}') from ex


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', type=Path, help='output directory')
    common.add_argument('--seed', type=int, help='seed of the random initial interface')
    common.add_argument('--quiet', action='store_true', help='log warnings and errors only')

    parser = argparse.ArgumentParser(prog='stefan-gt', description=__doc__.splitlines()[0])
    verbs = parser.add_subparsers(dest='verb', required=True)

    run = verbs.add_parser('run', parents=[common], help='run one scenario')
    run.add_argument('--config', type=Path, required=True, help='scenario TOML file')

    spectrum = verbs.add_parser('spectrum', parents=[common], help='linearized spectrum table')
    spectrum.add_argument('--k', type=parse_k_range, default=(0, 1, 2, 3, 4, 5, 6, 7, 8),
                          help="wavenumbers, '0-8' or '1,2,4'")
    spectrum.add_argument('--eps', type=float, nargs='+', default=[0.0], help='epsilon values')
    spectrum.add_argument('--n-z-dense', type=int, default=256)

    verify = verbs.add_parser('verify', parents=[common], help='run a verification suite')
    verify.add_argument('suite', help='identity | mms | conservation | norms')
    verify.add_argument('--config', type=Path, help='scenario TOML whose solver section is the base level')

    sweep = verbs.add_parser('sweep', parents=[common], help='run the cartesian sweep of a scenario')
    sweep.add_argument('--config', type=Path, required=True, help='scenario TOML file')
    sweep.add_argument('--jobs', type=int, help='worker processes')
    return parser


def cmd_run(args: argparse.Namespace, container: Container) -> int:
    scenario = load_scenario(args.config)
    output = container.use_case_scenario_run().execute(
        RunScenarioUseCase.Input(scenario=scenario, seed=args.seed, out=args.out))
    print((output.directory / 'summary.txt').read_text(encoding='utf-8'), end='')
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace, container: Container) -> int:
    output = container.use_case_oracle_spectrum().execute(ComputeSpectrumUseCase.Input(
        ks=tuple(args.k), epsilons=tuple(args.eps), n_z_dense=args.n_z_dense))
    target = args.out or container.config().output_root / 'spectrum'
    with atomic_directory(target) as staging:
        write_spectrum_csv(staging / 'spectrum.csv', output.modes, {'n_z_dense': args.n_z_dense})
    for mode in output.modes:
        print(f'k={mode.k} epsilon={mode.epsilon!r} leading={mode.leading.real!r}')
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, container: Container) -> int:
    options = {'suite': args.suite}
    if args.config is not None:
        scenario = load_scenario(args.config)
        options.update(cfg=scenario.solver, t_end=scenario.t_end)
    if args.seed is not None:
        options['seed'] = args.seed
    output = container.use_case_verification_suite().execute(VerifySuiteUseCase.Input(**options))
    print('\n'.join(output.result.lines()))
    return EXIT_OK if output.passed else EXIT_FAILURE


def cmd_sweep(args: argparse.Namespace, container: Container) -> int:
    scenario = load_scenario(args.config)
    jobs = args.jobs or container.config().default_jobs
    output = container.use_case_scenario_sweep().execute(SweepScenarioUseCase.Input(
        scenario=scenario, seed=args.seed, out=args.out, jobs=jobs))
    for row in output.convergence:
        print(f'epsilon {row.epsilon_coarse!r} -> {row.epsilon_fine!r}: '
              f'sup E-distance {row.distance:.6e} (relative {row.relative:.3e})')
    print(f'sweep written to {output.directory}')
    return EXIT_OK


COMMANDS = {
    'run': cmd_run,
    'spectrum': cmd_spectrum,
    'verify': cmd_verify,
    'sweep': cmd_sweep,
}


def main(argv: Optional[Sequence[str]] = None, container: Optional[Container] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as ex:
        return EXIT_OK if ex.code in (0, None) else EXIT_USAGE

    container = container or Container()
    configure_logging(container.config().log_level, args.quiet)
    try:
        return COMMANDS[args.verb](args, container)
    except USAGE_ERRORS as ex:
        logger.error('%s', ex)
        return EXIT_USAGE
    except Exception as ex:  # pylint: disable=broad-exception-caught
        logger.error('%s failed: %s: %s', args.verb, type(ex).__name__, ex)
        logger.debug('traceback', exc_info=True)
        return EXIT_FAILURE


def entrypoint(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))
