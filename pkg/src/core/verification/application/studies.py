"""Refinement studies behind `VerifySuiteUseCase`.

Each study runs the same problem on a base configuration and on one refined configuration and
turns the two error measures into observed orders.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from core.energy.domain.diagnostics import EnergyDiagnostics
from core.energy.domain.entities import EnergyReport
from core.energy.domain.functionals import i_psi, i_psi_lower_bound
from core.energy.domain.norms import dissipation_eps, energy_eps, equivalence_constant, sobolev_norms
from core.energy.domain.stack import DerivativeStack
from core.fields.domain.entities import BulkField, InterfaceField
from core.oracle.domain.manufactured import ManufacturedForcingHook, ManufacturedSolution
from core.scenario.application.initial_state import random_interface
from core.scenario.domain.entities import RandomModes
from core.solver.application.use_cases import RunSimulationUseCase
from core.solver.domain.config import SolverConfig
from core.solver.domain.state import State
from core.solver.domain.temperature import compatible_temperature
from core.verification.domain.entities import Check, SuiteResult
from core.verification.domain.orders import observed_order, reduction_order

logger = logging.getLogger(__name__)

MMS_U = 'exp(-t)*cos(pi*z)*(1 + 0.1*cos(x))'
MMS_RHO = '0.05*exp(-t)*sin(x)'

REDUCTION_FACTOR = 1.8
CONSERVATION_BOUND = 1e-6
ROUND_OFF_FLOOR = 1e-14
REFERENCE_DT_FACTOR = 8.0
MMS_TIME_ORDER = 1.0
MMS_Z_ORDER = 1.8
I_PSI_TOLERANCE = 1e-10


@dataclass(frozen=True, slots=True)
class StudySettings:
    cfg: SolverConfig
    t_end: float
    amplitude: float = 1e-3
    samples: int = 100
    seed: int = 0


def refine_all(cfg: SolverConfig) -> SolverConfig:
    """Halves dt, dx and dz together."""
    return cfg.with_changes(dt=cfg.dt / 2, n_x=2 * cfg.n_x, n_z=2 * cfg.n_z - 1)


def refine_time_and_normal(cfg: SolverConfig, dt_factor: float = 2.0) -> SolverConfig:
    return cfg.with_changes(dt=cfg.dt / dt_factor, n_z=2 * cfg.n_z - 1)


def single_mode_state(cfg: SolverConfig, amplitude: float) -> State:
    grid = cfg.grid
    rho = InterfaceField.from_function(grid.tangential, lambda x: amplitude * np.sin(x))
    return State.initial(compatible_temperature(rho, grid), rho)


def _decay_reports(cfg: SolverConfig, settings: StudySettings) -> Tuple[EnergyReport, ...]:
    use_case = RunSimulationUseCase(diagnostics_factory=EnergyDiagnostics.for_config)
    output = use_case.execute(RunSimulationUseCase.Input(
        cfg=cfg, initial=single_mode_state(cfg, settings.amplitude), t_end=settings.t_end))
    return output.last.reports


def mid_run_identity_residual(reports: Tuple[EnergyReport, ...], t_end: float) -> float:
    """Worst identity residual over the middle third of the run."""
    residuals = [report.identity_residual for report in reports
                 if report.identity_residual is not None
                 and t_end / 3 <= report.t <= 2 * t_end / 3]
    return max(residuals, default=float('nan'))


def identity_study(settings: StudySettings) -> SuiteResult:
    levels = [settings.cfg.with_changes(identity_check=True, k_diag=0)]
    levels.append(refine_all(levels[0]))
    residuals = [mid_run_identity_residual(_decay_reports(cfg, settings), settings.t_end)
                 for cfg in levels]
    logger.info('identity residuals: %s', residuals)
    return SuiteResult('identity', (
        Check('identity residual order', observed_order(*residuals), reduction_order(REDUCTION_FACTOR)),
    ), (('coarse residual', residuals[0]), ('fine residual', residuals[1])))


def conservation_study(settings: StudySettings) -> SuiteResult:
    levels = [settings.cfg.with_changes(identity_check=False, k_diag=0)]
    levels.append(refine_time_and_normal(levels[0]))
    maxima = [max(report.cons_residual for report in _decay_reports(cfg, settings)) for cfg in levels]
    logger.info('conservation residual maxima: %s', maxima)
    notes = ('exact to round-off',) if max(maxima) <= ROUND_OFF_FLOOR else ()
    return SuiteResult('conservation', (
        Check('conservation order', observed_order(*maxima, floor=ROUND_OFF_FLOOR),
              reduction_order(REDUCTION_FACTOR)),
        Check('max conservation residual', maxima[0], CONSERVATION_BOUND, '<='),
    ), (('coarse max residual', maxima[0]), ('fine max residual', maxima[1])), notes)


def manufactured_run(cfg: SolverConfig, solution: ManufacturedSolution, t_end: float) -> State:
    grid = cfg.grid
    u, rho = solution.exact_fields(grid, 0.0)
    output = RunSimulationUseCase().execute(RunSimulationUseCase.Input(
        cfg=cfg, initial=State.initial(u, rho), t_end=t_end,
        forcing=ManufacturedForcingHook.from_config(solution, cfg)))
    return output.last.final


def manufactured_error(cfg: SolverConfig, solution: ManufacturedSolution, t_end: float) -> float:
    final = manufactured_run(cfg, solution, t_end)
    return solution.error(final.u, final.rho, final.t)


def state_distance(first: State, second: State) -> float:
    return max(float(np.max(np.abs(first.u.values - second.u.values))),
               float(np.max(np.abs(first.rho.values - second.rho.values))))


def mms_study(settings: StudySettings) -> SuiteResult:
    """Time order against a fine-step run on the same grid; z order with dt shrunk like dz^2."""
    solution = ManufacturedSolution.from_strings(MMS_U, MMS_RHO)
    cfg = settings.cfg.with_changes(identity_check=False, k_diag=0)
    base_state = manufactured_run(cfg, solution, settings.t_end)
    half_state = manufactured_run(cfg.with_changes(dt=cfg.dt / 2), solution, settings.t_end)
    reference = manufactured_run(cfg.with_changes(dt=cfg.dt / REFERENCE_DT_FACTOR),
                                 solution, settings.t_end)
    base_time, half_time = state_distance(base_state, reference), state_distance(half_state, reference)

    base = solution.error(base_state.u, base_state.rho, base_state.t)
    refined = manufactured_error(refine_time_and_normal(cfg, 4.0), solution, settings.t_end)
    logger.info('manufactured errors: base=%.3e refined=%.3e; time errors: dt=%.3e dt/2=%.3e',
                base, refined, base_time, half_time)
    return SuiteResult('mms', (
        Check('time order', observed_order(base_time, half_time, floor=ROUND_OFF_FLOOR), MMS_TIME_ORDER),
        Check('z order', observed_order(base, refined), MMS_Z_ORDER),
    ), (('base error', base), ('refined error', refined),
        ('dt time error', base_time), ('dt/2 time error', half_time)))


def _random_state(cfg: SolverConfig, amplitude: float, seed: int) -> DerivativeStack:
    grid = cfg.grid
    rng = np.random.default_rng(seed)
    modes = RandomModes(amplitude, 4)
    rho = InterfaceField(grid.tangential, random_interface(modes, grid, seed))
    rho_t = random_interface(modes, grid, seed + 1)
    x, z = grid.mesh()
    k = int(rng.integers(1, 4))
    u_t = amplitude * rng.standard_normal() * np.cos(k * x) * np.cos(np.pi * z)
    u: BulkField = compatible_temperature(rho, grid)
    return DerivativeStack.from_fields(u, rho, cfg.cutoff, u_t, rho_t)


def norms_study(settings: StudySettings) -> SuiteResult:
    """Norm equivalence and I_psi positivity on seeded random small states, on two grids."""
    checks: List[Check] = []
    levels = [settings.cfg, refine_all(settings.cfg)]
    amplitude = 10.0 * settings.amplitude
    for level, cfg in enumerate(levels):
        worst_equivalence, worst_gap, worst_equality = 0.0, np.inf, 0.0
        for sample in range(settings.samples):
            stack = _random_state(cfg, amplitude, settings.seed + 2 * sample)
            psi = InterfaceField(cfg.grid.tangential, stack.rho(0, 0))
            constant = equivalence_constant(psi, cfg.cutoff)
            sobolev_e, sobolev_d = sobolev_norms(stack, cfg.epsilon)
            for weighted, plain in ((energy_eps(stack, psi, cfg.epsilon), sobolev_e),
                                    (dissipation_eps(stack, psi, cfg.epsilon), sobolev_d)):
                ratio = weighted / plain
                worst_equivalence = max(worst_equivalence, max(ratio, 1.0 / ratio) / constant)

            omega = stack.rho(0, 1)
            gap = i_psi(omega, psi) - i_psi_lower_bound(omega, psi)
            worst_gap = min(worst_gap, gap)
            worst_equality = max(worst_equality, abs(gap))
        checks += [
            Check(f'level {level} equivalence ratio / C', worst_equivalence, 1.0, '<='),
            Check(f'level {level} I_psi gap', worst_gap, -I_PSI_TOLERANCE),
            Check(f'level {level} I_psi one-dimensional equality', worst_equality, I_PSI_TOLERANCE, '<='),
        ]
    return SuiteResult('norms', tuple(checks))


STUDIES = {
    'identity': identity_study,
    'mms': mms_study,
    'conservation': conservation_study,
    'norms': norms_study,
}
