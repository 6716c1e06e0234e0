import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Optional

from core.energy.domain.conservation import conservation_residual, rho_deviation, steady_mean
from core.energy.domain.entities import EnergyReport
from core.energy.domain.identity import WINDOW, identity_residual_k0
from core.energy.domain.norms import (
    dissipation_D,
    dissipation_eps,
    energy_E,
    energy_eps,
    i_psi_min_gap,
    sobolev_norms,
)
from core.energy.domain.stack import DerivativeStack
from core.hanzawa.domain.cutoff import Cutoff
from core.solver.domain.config import SolverConfig
from core.solver.domain.state import State

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class EnergyDiagnostics:
    """Per-step report producer; keeps the accepted-state history the stack needs.

    The steady mean is fixed by the first state observed, so one instance serves one trajectory.
    """
    epsilon: float
    k_diag: int
    cutoff: Cutoff
    identity_check: bool = True
    history: Deque[State] = field(init=False, repr=False)
    mean: Optional[float] = field(default=None, init=False)

    def __post_init__(self):
        self.history = deque(maxlen=max(DerivativeStack.history_length(self.k_diag), WINDOW))

    @staticmethod
    def for_config(cfg: SolverConfig) -> 'EnergyDiagnostics':
        return EnergyDiagnostics(cfg.epsilon, cfg.k_diag, cfg.cutoff, cfg.identity_check)

    def __call__(self, state: State) -> EnergyReport:
        self.history.append(state)
        if self.mean is None:
            self.mean = steady_mean(state.u, state.rho, self.cutoff)

        stack = DerivativeStack.from_history(self.history, self.k_diag, self.cutoff)
        psi = state.rho
        sobolev_e, sobolev_d = sobolev_norms(stack, self.epsilon)

        residual = 0.0
        if len(self.history) >= 2:
            residual = conservation_residual(self.history[-2], state, self.cutoff)

        identity = None
        if self.identity_check and len(self.history) >= WINDOW:
            identity = identity_residual_k0(list(self.history)[-WINDOW:], self.cutoff, self.epsilon)

        unavailable = sorted(set(stack.unavailable_energy()) | set(stack.unavailable_dissipation()))
        report = EnergyReport(
            t=state.t,
            E=energy_E(stack, psi),
            D=dissipation_D(stack, psi),
            E_eps=energy_eps(stack, psi, self.epsilon),
            D_eps=dissipation_eps(stack, psi, self.epsilon),
            sobolev_E=sobolev_e,
            sobolev_D=sobolev_d,
            cons_residual=residual,
            rho_dev_L2=rho_deviation(psi, self.mean),
            identity_residual=identity,
            inner_iters=state.inner_iters,
            I_psi_min_gap=i_psi_min_gap(stack, psi),
            unavailable=tuple(f'{mu},{s}' for mu, s in unavailable),
        )
        logger.debug('report t=%.6g E=%.6e D=%.6e cons=%.3e', report.t, report.E, report.D,
                     report.cons_residual)
        return report
