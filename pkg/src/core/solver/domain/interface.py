from typing import Optional

import numpy as np

from core.fields.domain.differentiation import d_tangential
from core.fields.domain.entities import BulkField, InterfaceField
from core.hanzawa.domain.geometry import jump_un
from core.solver.domain.config import SolverConfig


def regularized_solve(values: np.ndarray, epsilon: float) -> np.ndarray:
    """Solve (I + eps d_x^4) y = values diagonally in Fourier space."""
    if epsilon == 0.0:
        return np.array(values, dtype=float)
    n_x = values.shape[0]
    wavenumbers = np.fft.rfftfreq(n_x, d=1.0 / n_x)
    spectrum = np.fft.rfft(values) / (1.0 + epsilon * wavenumbers ** 4)
    return np.fft.irfft(spectrum, n=n_x)


def interface_rate(rho_m: InterfaceField, u_new: BulkField, cfg: SolverConfig,
                   jump_forcing: Optional[np.ndarray] = None) -> InterfaceField:
    """rho_t from rho_t + eps d_x^4 rho_t = <rho_m>^2 [u_n] (+ forcing)."""
    rho_x = d_tangential(rho_m.values, 1)
    rate = (1.0 + rho_x ** 2) * jump_un(u_new).values
    if jump_forcing is not None:
        rate = rate + jump_forcing
    return rho_m.with_values(regularized_solve(rate, cfg.epsilon))


def advance(rho_prev: InterfaceField, rate: InterfaceField, rate_prev: InterfaceField,
            theta: float, dt: float) -> InterfaceField:
    return rho_prev.with_values(
        rho_prev.values + dt * (theta * rate.values + (1.0 - theta) * rate_prev.values))


def interface_step(rho_m: InterfaceField, u_new: BulkField, cfg: SolverConfig,
                   rho_prev: InterfaceField, rho_t_prev: Optional[InterfaceField] = None,
                   jump_forcing: Optional[np.ndarray] = None) -> InterfaceField:
    """Interface level after one step from the accepted `rho_prev`."""
    rate = interface_rate(rho_m, u_new, cfg, jump_forcing)
    if rho_t_prev is None:
        rho_t_prev = InterfaceField.zeros(rho_prev.grid)
    return advance(rho_prev, rate, rho_t_prev, cfg.theta, cfg.dt)
