import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from core.__seedwork.application.use_cases import UseCase
from core.__seedwork.domain.utils import Either
from core.__seedwork.infra.files import atomic_directory, write_csv
from core.energy.domain.diagnostics import EnergyDiagnostics
from core.energy.domain.entities import COLUMNS, EnergyReport
from core.energy.domain.norms import energy_norm
from core.energy.infra.csv.repositories import EnergyReportCsvRepository
from core.fields.infra.snapshots import write_bulk_snapshot, write_interface_snapshot
from core.oracle.domain.manufactured import ManufacturedForcingHook, ManufacturedSolution
from core.oracle.domain.spectrum import linearized_spectrum
from core.scenario.application.initial_state import build_initial_state
from core.scenario.domain.entities import Scenario
from core.scenario.domain.exceptions import SweepCapExceededException
from core.scenario.domain.summary import RunSummary, SteadyDeviation
from core.solver.application.use_cases import RunSimulationUseCase
from core.solver.domain.config import SolverConfig
from core.solver.domain.simulation import Trajectory
from core.solver.domain.state import State
from core.solver.infra.checkpoints import CheckpointWriter

logger = logging.getLogger(__name__)

DEFAULT_JOB_CAP = 64


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec='seconds')


def _run_metadata(scenario: Scenario, cfg: SolverConfig, seed: int) -> Dict[str, Any]:
    return {
        'scenario': scenario.name,
        'config_hash': cfg.config_hash,
        'epsilon': cfg.epsilon,
        'dt': cfg.dt,
        'n_x': cfg.n_x,
        'n_z': cfg.n_z,
        't_end': scenario.t_end,
        'seed': seed,
    }


@dataclass(frozen=True, slots=True)
class LevelResult:
    """One epsilon level of a run."""
    cfg: SolverConfig
    reports: Tuple[EnergyReport, ...]
    summary: RunSummary
    final: Optional[State] = field(default=None, repr=False)
    states: Tuple[State, ...] = field(default=(), repr=False)


@dataclass(slots=True, frozen=True)
class RunScenarioUseCase(UseCase):
    """Runs a scenario, one trajectory per continuation epsilon, into a fresh output directory.

    The directory is written through a staging copy and only appears when every level succeeded.
    With several epsilons each level gets an `eps-NN` subdirectory. `keep_states` keeps every
    accepted state of each level in memory, the initial one included.
    """

    output_root: Path = Path('runs')
    n_z_dense: int = 256
    keep_states: bool = False

    def execute(self, input_param: 'Input') -> 'Output':
        scenario = input_param.scenario
        seed = scenario.seed if input_param.seed is None else input_param.seed
        target = Path(input_param.out or scenario.output.directory or self.output_root / scenario.name)
        epsilons = scenario.epsilons or (scenario.solver.epsilon,)
        started = _now()
        logger.info('scenario %s: %d level(s) into %s', scenario.name, len(epsilons), target)

        with atomic_directory(target) as staging:
            initial = build_initial_state(scenario, seed)
            levels = []
            for index, epsilon in enumerate(epsilons):
                directory = staging if len(epsilons) == 1 else staging / f'eps-{index:02d}'
                directory.mkdir(exist_ok=True)
                levels.append(self._run_level(scenario, initial, float(epsilon), directory, seed))

            summary = [f'scenario={scenario.name}']
            for level in levels:
                summary += [''] + level.summary.lines()
            (staging / 'summary.txt').write_text('\n'.join(summary) + '\n', encoding='utf-8')
            (staging / 'metadata.txt').write_text('\n'.join([
                f'scenario={scenario.name}',
                f'config_hash={scenario.solver.config_hash}',
                f'seed={seed}',
                f'started={started}',
                f'finished={_now()}',
            ]) + '\n', encoding='utf-8')

        logger.info('scenario %s finished', scenario.name)
        return self.Output(directory=target, levels=tuple(levels))

    def _oracle_rate(self, scenario: Scenario, epsilon: float) -> Optional[float]:
        mode = scenario.initial.single_mode
        if mode is None or scenario.manufactured is not None:
            return None
        return linearized_spectrum(mode.k, self.n_z_dense, epsilon).energy_decay_rate

    def _run_level(self, scenario: Scenario, initial: State, epsilon: float, directory: Path,
                   seed: int) -> LevelResult:
        cfg = scenario.solver.with_changes(epsilon=epsilon)
        forcing, solution = None, None
        if scenario.manufactured is not None:
            spec = scenario.manufactured
            solution = ManufacturedSolution.from_strings(spec.u, spec.rho, spec.u_lower)
            forcing = ManufacturedForcingHook.from_config(solution, cfg)

        steady = SteadyDeviation.start(initial.u, initial.rho)
        states: List[State] = [initial]
        callbacks = [steady]
        if self.keep_states:
            callbacks.append(states.append)
        if scenario.output.checkpoint_every > 0:
            callbacks.append(CheckpointWriter(directory / 'checkpoints', cfg,
                                              scenario.output.checkpoint_every))

        use_case = RunSimulationUseCase(diagnostics_factory=EnergyDiagnostics.for_config)
        trajectory: Trajectory = use_case.execute(RunSimulationUseCase.Input(
            cfg=cfg, initial=initial, t_end=scenario.t_end, epsilons=(epsilon,),
            forcing=forcing, callbacks=tuple(callbacks),
        )).last

        final = trajectory.final
        metadata = _run_metadata(scenario, cfg, seed)
        EnergyReportCsvRepository(directory / 'energy.csv', metadata).bulk_insert(list(trajectory.reports))
        write_bulk_snapshot(directory / 'u_final.csv', final.u, {**metadata, 't': final.t})
        write_interface_snapshot(directory / 'rho_final.csv', final.rho,
                                 {**metadata, 't': final.t})

        error = solution.error(final.u, final.rho, final.t) if solution is not None else None
        summary = RunSummary.from_reports(trajectory.reports, epsilon, trajectory.steps, steady.worst,
                                          self._oracle_rate(scenario, epsilon), error)
        for line in summary.lines():
            logger.info('%s: %s', scenario.name, line)
        return LevelResult(cfg, tuple(trajectory.reports), summary, final,
                           tuple(states) if self.keep_states else ())

    @dataclass(slots=True, frozen=True)
    class Input:
        scenario: Scenario
        seed: Optional[int] = None
        out: Optional[Path] = None

    @dataclass(slots=True, frozen=True)
    class Output:
        directory: Path
        levels: Tuple[LevelResult, ...]

        @property
        def summary(self) -> RunSummary:
            return self.levels[-1].summary


def run_sweep_job(scenario: Scenario, directory: Path, seed: Optional[int]) -> Either:
    """A single sweep point, in whatever process the pool picked; its states travel back."""
    def run() -> LevelResult:
        output = RunScenarioUseCase(keep_states=True).execute(
            RunScenarioUseCase.Input(scenario=scenario, seed=seed, out=directory))
        return replace(output.levels[-1], final=None)
    return Either.safe(run)


@dataclass(frozen=True, slots=True)
class ConvergenceRow:
    dt: float
    n_x: int
    n_z: int
    epsilon_coarse: float
    epsilon_fine: float
    distance: float
    relative: float

    COLUMNS = ('dt', 'n_x', 'n_z', 'epsilon_coarse', 'epsilon_fine', 'sup_E_distance',
               'relative_distance')

    def row(self) -> List[Any]:
        return [self.dt, self.n_x, self.n_z, self.epsilon_coarse, self.epsilon_fine,
                self.distance, self.relative]


def epsilon_convergence(levels: Tuple[LevelResult, ...]) -> Tuple[ConvergenceRow, ...]:
    """Sup-over-time E-distance between consecutive epsilon levels sharing (dt, n_x, n_z).

    The distance at a step is the E-norm of the state difference, weighted at the
    smaller-epsilon interface; the relative distance divides by the sup of that trajectory's own
    E-norm. Levels are ordered by decreasing epsilon and need their recorded states.
    """
    groups: Dict[Tuple[float, int, int], List[LevelResult]] = defaultdict(list)
    for level in levels:
        groups[(level.cfg.dt, level.cfg.n_x, level.cfg.n_z)].append(level)

    rows = []
    for (dt, n_x, n_z), members in groups.items():
        members = sorted(members, key=lambda level: level.cfg.epsilon, reverse=True)
        for coarse, fine in zip(members, members[1:]):
            pairs = list(zip(coarse.states, fine.states))
            cutoff, grid = fine.cfg.cutoff, fine.cfg.grid
            distance = max((energy_norm(first.u.values - second.u.values,
                                        first.rho.values - second.rho.values,
                                        second.rho, cutoff, grid)
                            for first, second in pairs), default=0.0)
            scale = max((energy_norm(state.u.values, state.rho.values, state.rho, cutoff, grid)
                         for state in fine.states), default=0.0)
            rows.append(ConvergenceRow(dt, n_x, n_z, coarse.cfg.epsilon, fine.cfg.epsilon,
                                       distance, distance / scale if scale > 0 else 0.0))
    return tuple(rows)


@dataclass(slots=True, frozen=True)
class SweepScenarioUseCase(UseCase):
    """Cartesian sweep over the scenario's axes, one process per job and one subdirectory each."""

    output_root: Path = Path('runs')
    job_cap: int = DEFAULT_JOB_CAP

    def execute(self, input_param: 'Input') -> 'Output':
        scenario = input_param.scenario
        points = scenario.sweep.points(scenario.solver) if scenario.sweep else [scenario.solver]
        cap = min(self.job_cap, scenario.sweep.max_jobs or self.job_cap) if scenario.sweep else self.job_cap
        if len(points) > cap:
            raise SweepCapExceededException(len(points), cap)

        target = Path(input_param.out or scenario.output.directory or self.output_root / scenario.name)
        jobs = max(1, min(input_param.jobs, len(points)))
        logger.info('sweep %s: %d jobs on %d worker(s) into %s', scenario.name, len(points), jobs, target)

        with atomic_directory(target) as staging:
            job_scenarios = [replace(scenario, solver=cfg, epsilons=(), sweep=None)
                             for cfg in points]
            directories = [staging / f'job-{index:03d}' for index in range(len(points))]
            seeds = [input_param.seed] * len(points)
            if jobs == 1:
                outcomes = list(map(run_sweep_job, job_scenarios, directories, seeds))
            else:
                with ProcessPoolExecutor(max_workers=jobs) as executor:
                    outcomes = list(executor.map(run_sweep_job, job_scenarios, directories, seeds))

            levels = tuple(outcome.unwrap() for outcome in outcomes)
            rows = [
                [index, level.cfg.epsilon, level.cfg.dt, level.cfg.n_x, level.cfg.n_z, *report.row()]
                for index, level in enumerate(levels) for report in level.reports
            ]
            metadata = {'scenario': scenario.name, 'config_hash': scenario.solver.config_hash,
                        'jobs': len(points)}
            write_csv(staging / 'combined.csv', metadata,
                      ('job', 'epsilon', 'dt', 'n_x', 'n_z', *COLUMNS), rows)
            convergence = epsilon_convergence(levels)
            write_csv(staging / 'eps_convergence.csv', metadata, ConvergenceRow.COLUMNS,
                      (row.row() for row in convergence))

        logger.info('sweep %s finished', scenario.name)
        return self.Output(directory=target, levels=levels, convergence=convergence)

    @dataclass(slots=True, frozen=True)
    class Input:
        scenario: Scenario
        seed: Optional[int] = None
        out: Optional[Path] = None
        jobs: int = 1

    @dataclass(slots=True, frozen=True)
    class Output:
        directory: Path
        levels: Tuple[LevelResult, ...]
        convergence: Tuple[ConvergenceRow, ...]
