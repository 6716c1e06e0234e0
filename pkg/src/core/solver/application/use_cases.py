import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence, Tuple

from core.__seedwork.application.use_cases import UseCase
from core.solver.domain.config import SolverConfig
from core.solver.domain.forcing import ForcingHook
from core.solver.domain.simulation import Simulation, StepCallback, StepObserver, Trajectory
from core.solver.domain.state import State

logger = logging.getLogger(__name__)

DiagnosticsFactory = Callable[[SolverConfig], StepObserver]


@dataclass(slots=True, frozen=True)
class RunSimulationUseCase(UseCase):
    """Runs one trajectory per epsilon of the continuation schedule, all from the same data."""

    diagnostics_factory: Optional[DiagnosticsFactory] = None

    def execute(self, input_param: 'Input') -> 'Output':
        epsilons = input_param.epsilons or (input_param.cfg.epsilon,)
        trajectories = []
        for epsilon in epsilons:
            cfg = input_param.cfg.with_changes(epsilon=float(epsilon))
            diagnostics = self.diagnostics_factory(cfg) if self.diagnostics_factory else None
            logger.info('simulation start: epsilon=%g config=%s', cfg.epsilon, cfg.config_hash)
            trajectory = Simulation(cfg, input_param.forcing).run(
                input_param.initial, input_param.t_end, diagnostics, input_param.callbacks)
            logger.info('simulation finished: epsilon=%g steps=%d', cfg.epsilon, trajectory.steps)
            trajectories.append(trajectory)
        return self.Output(trajectories=tuple(trajectories))

    @dataclass(slots=True, frozen=True)
    class Input:
        cfg: SolverConfig
        initial: State
        t_end: float
        epsilons: Tuple[float, ...] = ()
        forcing: Optional[ForcingHook] = None
        callbacks: Sequence[StepCallback] = field(default=())

    @dataclass(slots=True, frozen=True)
    class Output:
        trajectories: Tuple[Trajectory, ...]

        @property
        def last(self) -> Trajectory:
            return self.trajectories[-1]

        def reports(self, index: int = -1) -> Tuple[Any, ...]:
            return self.trajectories[index].reports
