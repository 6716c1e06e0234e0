import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from core.energy.domain.decay import DecayFit, decay_fit
from core.energy.domain.entities import EnergyReport
from core.fields.domain.entities import BulkField, InterfaceField

STEADY_TOLERANCE = 1e-8
MONOTONE_SLACK = 1e-6
ORACLE_TOLERANCE = 0.10


@dataclass(slots=True)
class SteadyDeviation:
    """Step callback tracking max over steps of |u|_inf + |rho - rho_0|_inf."""
    rho_initial: np.ndarray
    worst: float = 0.0

    @staticmethod
    def start(u: BulkField, rho: InterfaceField) -> 'SteadyDeviation':
        tracker = SteadyDeviation(np.array(rho.values))
        tracker.observe(u, rho)
        return tracker

    def observe(self, u: BulkField, rho: InterfaceField) -> None:
        deviation = u.sup_norm() + float(np.max(np.abs(rho.values - self.rho_initial)))
        self.worst = max(self.worst, deviation)

    def __call__(self, state) -> None:
        self.observe(state.u, state.rho)


def is_monotone(reports: Sequence[EnergyReport], slack: float = MONOTONE_SLACK) -> bool:
    """E(t_{j+1}) <= E(t_j)(1 + slack) for every step after the first."""
    energies = [report.E for report in reports[1:]]
    return all(later <= earlier * (1.0 + slack) for earlier, later in zip(energies, energies[1:]))


@dataclass(frozen=True, slots=True)
class RunSummary:
    epsilon: float
    steps: int
    decay: DecayFit
    max_conservation_residual: float
    monotone: bool
    steady_deviation: float
    oracle_rate: Optional[float] = None
    manufactured_error: Optional[float] = None

    @property
    def steady(self) -> bool:
        return self.steady_deviation <= STEADY_TOLERANCE

    @property
    def oracle_relative_error(self) -> Optional[float]:
        if self.oracle_rate is None or not self.decay.ok:
            return None
        return abs(self.decay.rate - self.oracle_rate) / self.oracle_rate

    @property
    def oracle_agrees(self) -> Optional[bool]:
        error = self.oracle_relative_error
        return None if error is None else error <= ORACLE_TOLERANCE

    @staticmethod
    def from_reports(reports: Sequence[EnergyReport], epsilon: float, steps: int,
                     steady_deviation: float, oracle_rate: Optional[float] = None,
                     manufactured_error: Optional[float] = None) -> 'RunSummary':
        residuals = [report.cons_residual for report in reports]
        return RunSummary(
            epsilon=epsilon,
            steps=steps,
            decay=decay_fit([report.t for report in reports],
                            [report.decay_functional for report in reports]),
            max_conservation_residual=max(residuals, default=0.0),
            monotone=is_monotone(reports),
            steady_deviation=steady_deviation,
            oracle_rate=oracle_rate,
            manufactured_error=manufactured_error,
        )

    def lines(self) -> List[str]:
        lines = [
            f'epsilon={self.epsilon!r}',
            f'steps={self.steps}',
            f'K2_hat={self.decay.rate!r}',
            f'decay_r_squared={self.decay.r_squared!r}',
            f'decay_fit={self.decay.quality}',
            f'max_conservation_residual={self.max_conservation_residual!r}',
            f'steady_deviation={self.steady_deviation!r}',
            'energy ' + ('monotone' if self.monotone else 'NOT monotone'),
        ]
        if self.steady:
            lines.append('steady within tolerance')
        if self.manufactured_error is not None:
            lines.append(f'manufactured_error={self.manufactured_error!r}')
        if self.oracle_rate is not None:
            lines.append(f'oracle_rate={self.oracle_rate!r}')
            error = self.oracle_relative_error
            if error is not None and math.isfinite(error):
                verdict = 'within' if self.oracle_agrees else 'outside'
                lines.append(f'oracle_relative_error={error!r} ({verdict} {ORACLE_TOLERANCE:.0%})')
        return lines
