import logging
import math
from typing import List, Optional

import numpy as np

from core.__seedwork.domain.exceptions import NonFiniteFieldException
from core.energy.domain.functionals import pair_energy, torus_integral
from core.fields.domain.entities import InterfaceField
from core.hanzawa.domain.coefficients import coefficients, metric_coefficient
from core.hanzawa.domain.exceptions import DegenerateTransformException
from core.solver.domain.config import SolverConfig
from core.solver.domain.exceptions import FixedPointDivergenceException
from core.solver.domain.forcing import ForcingHook
from core.solver.domain.interface import interface_step
from core.solver.domain.relaxation import relax
from core.solver.domain.state import State
from core.solver.domain.temperature import temperature_step

logger = logging.getLogger(__name__)


def difference_norm(delta_u: np.ndarray, delta_rho: np.ndarray, psi: InterfaceField,
                    cfg: SolverConfig) -> float:
    """sqrt(E_eps at order zero of the difference, weights at psi, plus ||delta rho||_2^2)."""
    grid = cfg.grid
    a = metric_coefficient(psi, cfg.cutoff, grid)
    energy = pair_energy(delta_u, delta_rho, psi, a, grid, cfg.epsilon)
    return math.sqrt(max(energy, 0.0) + torus_integral(delta_rho ** 2))


def _last(ratios: List[float]) -> float:
    return ratios[-1] if ratios else math.nan


def fixed_point_step(state: State, cfg: SolverConfig,
                     forcing: Optional[ForcingHook] = None) -> State:
    """Advance one accepted step by iterating (rho_m, rho_t_m) -> u_{m+1} -> rho_{m+1}."""
    grid = state.grid
    cutoff = cfg.cutoff
    dt, theta = cfg.dt, cfg.theta
    t_new = state.t + dt
    old_coeffs = coefficients(state.rho, state.rho_t, cutoff, grid) if theta < 1.0 else None
    jump_forcing = forcing.jump(t_new) if forcing is not None else None

    u_m, rho_m = state.u, state.rho
    ratios: List[float] = []
    previous: Optional[float] = None
    difference = math.inf
    for iteration in range(1, cfg.fp_max_iter + 1):
        rho_t_m = rho_m.with_values((rho_m.values - state.rho.values) / dt)
        try:
            coeffs = coefficients(rho_m, rho_t_m, cutoff, grid)
        except DegenerateTransformException as ex:
            if iteration == 1:
                raise
            raise FixedPointDivergenceException(iteration, _last(ratios), difference) from ex

        try:
            u_next = temperature_step(rho_m, rho_t_m, state.u, cfg, u_lag=u_m, coeffs=coeffs,
                                      old_coeffs=old_coeffs, forcing=forcing, t_old=state.t)
            rho_next = relax(rho_m, interface_step(rho_m, u_next, cfg, state.rho, state.rho_t,
                                                   jump_forcing), cfg)
            difference = difference_norm(u_next.values - u_m.values,
                                         rho_next.values - rho_m.values, rho_next, cfg)
        except (NonFiniteFieldException, DegenerateTransformException) as ex:
            raise FixedPointDivergenceException(iteration, _last(ratios), difference) from ex

        if previous is not None and previous > 0.0:
            ratios.append(difference / previous)
        logger.debug('t=%.6g iteration %d: difference %.3e ratio %.3e',
                     t_new, iteration, difference, _last(ratios))
        u_m, rho_m, previous = u_next, rho_next, difference
        if difference <= cfg.fp_tol:
            return _accept(state, u_m, rho_m, cfg, iteration, ratios, forcing)

    raise FixedPointDivergenceException(cfg.fp_max_iter, _last(ratios), difference)


def _accept(state: State, u, rho: InterfaceField, cfg: SolverConfig, iterations: int,
            ratios: List[float], forcing: Optional[ForcingHook]) -> State:
    theta = cfg.theta
    mean_rate = (rho.values - state.rho.values) / cfg.dt
    rho_t = rho.with_values((mean_rate - (1.0 - theta) * state.rho_t.values) / theta)
    accepted = State(t=state.t + cfg.dt, u=u, rho=rho, rho_prev=state.rho, rho_t=rho_t,
                     inner_iters=iterations, contraction_ratios=tuple(ratios))

    dirichlet = forcing.dirichlet(accepted.t) if forcing is not None else None
    trace_error = accepted.trace_error(dirichlet)
    if trace_error > cfg.consistency_tol:
        logger.warning('trace consistency violated at t=%.6g: sup|u(.,0) - kappa(rho)| = %.3e',
                       accepted.t, trace_error)
    logger.debug('accepted t=%.6g after %d iterations', accepted.t, iterations)
    return accepted
