import logging
import math
from dataclasses import dataclass, replace
from typing import Any, Callable, List, Optional, Sequence, Tuple

from core.__seedwork.domain.exceptions import ValidationException
from core.hanzawa.domain.geometry import curvature
from core.solver.domain.config import SolverConfig
from core.solver.domain.exceptions import FixedPointDivergenceException
from core.solver.domain.fixed_point import fixed_point_step
from core.solver.domain.forcing import ForcingHook
from core.solver.domain.state import State

logger = logging.getLogger(__name__)

StepObserver = Callable[[State], Any]
StepCallback = Callable[[State], None]


@dataclass(frozen=True, slots=True)
class Trajectory:
    epsilon: float
    reports: Tuple[Any, ...]
    final: State
    steps: int


def step_plan(t_start: float, t_end: float, dt: float) -> List[float]:
    """Step sizes covering [t_start, t_end]; the last one is shortened when dt does not divide."""
    span = t_end - t_start
    if span < 0:
        raise ValidationException('The t_end must not precede the initial time')
    if span == 0:
        return []
    count = round(span / dt)
    if count > 0 and abs(count * dt - span) <= 1e-9 * max(1.0, span):
        return [dt] * count
    count = math.floor(span / dt)
    return [dt] * count + [span - count * dt]


@dataclass(slots=True)
class Simulation:
    cfg: SolverConfig
    forcing: Optional[ForcingHook] = None

    def step(self, state: State, cfg: Optional[SolverConfig] = None, depth: int = 0) -> State:
        """One accepted step; a divergent step is retried as two half steps."""
        cfg = cfg or self.cfg
        try:
            return fixed_point_step(state, cfg, self.forcing)
        except FixedPointDivergenceException as ex:
            if depth >= cfg.max_dt_halvings:
                raise
            logger.warning('step from t=%.6g failed (%s); retrying with dt=%.3e',
                           state.t, ex, cfg.dt / 2)
            half = cfg.with_changes(dt=cfg.dt / 2)
            middle = self.step(state, half, depth + 1)
            final = self.step(middle, half, depth + 1)
            return replace(final,
                           inner_iters=middle.inner_iters + final.inner_iters,
                           halvings=1 + max(middle.halvings, final.halvings))

    def run(self, initial: State, t_end: float, diagnostics: Optional[StepObserver] = None,
            callbacks: Sequence[StepCallback] = ()) -> Trajectory:
        # warns once when the initial interface is under-resolved
        curvature(initial.rho)

        reports = []

        def observe(state: State) -> State:
            if diagnostics is None:
                return state
            report = diagnostics(state)
            reports.append(report)
            return state.with_report(report)

        state = observe(initial)
        plan = step_plan(initial.t, t_end, self.cfg.dt)
        logger.info('running %d steps to t=%.6g with epsilon=%g', len(plan), t_end, self.cfg.epsilon)
        for dt in plan:
            cfg = self.cfg if dt == self.cfg.dt else self.cfg.with_changes(dt=dt)
            state = observe(self.step(state, cfg))
            for callback in callbacks:
                callback(state)
        return Trajectory(self.cfg.epsilon, tuple(reports), state, len(plan))
