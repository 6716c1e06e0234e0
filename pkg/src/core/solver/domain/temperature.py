import logging
from enum import Enum
from typing import Optional

import numpy as np
from scipy.sparse.linalg import LinearOperator, gmres

from core.fields.domain.differentiation import Side, d_normal_values, d_tangential
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import Grid, NormalGrid
from core.hanzawa.domain.coefficients import TransformCoefficients, coefficients
from core.hanzawa.domain.geometry import curvature
from core.solver.domain.config import SolverConfig
from core.solver.domain.exceptions import LinearSolveException
from core.solver.domain.forcing import ForcingHook
from core.solver.domain.tridiagonal import Bands, half_bands, solve_modes

logger = logging.getLogger(__name__)

REFINEMENT_PASSES = 3
GMRES_RESTART = 40


class Half(Enum):
    UPPER = 'upper'
    LOWER = 'lower'


def half_rows(normal: NormalGrid, half: Half) -> np.ndarray:
    """Row indices of one half, ordered from the interface outwards."""
    m = normal.interface_index
    if half is Half.UPPER:
        return np.arange(m + 1, normal.n_z)
    return np.arange(m - 1, -1, -1)


def half_operator(values: np.ndarray, dirichlet: np.ndarray, a: np.ndarray, h: float) -> np.ndarray:
    """d_xx V + a d_zz V on one half, V_0 = dirichlet, mirrored ghost at the wall."""
    padded = np.concatenate([dirichlet[:, None], values, values[:, -2:-1]], axis=1)
    d_zz = (padded[:, 2:] - 2.0 * padded[:, 1:-1] + padded[:, :-2]) / h ** 2
    return d_tangential(values, 2) + a * d_zz


def lagged_source(u: np.ndarray, b: np.ndarray, c: np.ndarray, normal: NormalGrid) -> np.ndarray:
    """-B u_xz - c u_z from centered normal differences; zero on the interface row."""
    u_z = d_normal_values(u, normal, Side.CENTERED, 1)
    source = -b * d_tangential(u_z, 1) - c * u_z
    source[:, normal.interface_index] = 0.0
    return source


def _solve_half(rhs: np.ndarray, a: np.ndarray, bands: Bands, h: float, cfg: SolverConfig,
                half: Half) -> np.ndarray:
    shape = rhs.shape
    b = rhs.ravel()
    norm_b = float(np.linalg.norm(b))
    if norm_b == 0.0:
        return np.zeros(shape)

    no_dirichlet = np.zeros(shape[0])
    inv_dt, theta = 1.0 / cfg.dt, cfg.theta

    def matvec(vector: np.ndarray) -> np.ndarray:
        values = vector.reshape(shape)
        return (inv_dt * values - theta * half_operator(values, no_dirichlet, a, h)).ravel()

    def precondition(vector: np.ndarray) -> np.ndarray:
        return solve_modes(bands, vector.reshape(shape)).ravel()

    operator = LinearOperator((b.size, b.size), matvec=matvec, dtype=float)
    preconditioner = LinearOperator((b.size, b.size), matvec=precondition, dtype=float)

    solution = precondition(b)
    residual = float(np.linalg.norm(b - matvec(solution))) / norm_b
    passes = 0
    while residual > cfg.lin_tol:
        if passes > REFINEMENT_PASSES:
            raise LinearSolveException(residual, cfg.lin_tol, half.value)
        solution, info = gmres(operator, b, x0=solution, rtol=cfg.lin_tol, atol=0.0,
                               restart=min(GMRES_RESTART, b.size), maxiter=cfg.lin_max_iter,
                               M=preconditioner)
        residual = float(np.linalg.norm(b - matvec(solution))) / norm_b
        passes += 1
        logger.debug('gmres pass %d on the %s half: info=%d residual=%.3e',
                     passes, half.value, info, residual)
    return solution.reshape(shape)


def temperature_step(rho_m: InterfaceField, rho_t_m: InterfaceField, u_old: BulkField,
                     cfg: SolverConfig, *, u_lag: Optional[BulkField] = None,
                     coeffs: Optional[TransformCoefficients] = None,
                     old_coeffs: Optional[TransformCoefficients] = None,
                     forcing: Optional[ForcingHook] = None, t_old: float = 0.0) -> BulkField:
    """One theta-step of the temperature equation on each half with frozen coefficients.

    The z=0 row carries kappa(rho_m); B u_xz and c u_z come from `u_lag` (the previous
    iterate, defaulting to `u_old`).
    """
    grid: Grid = u_old.grid
    normal = grid.normal
    h, dt, theta = normal.spacing, cfg.dt, cfg.theta
    m = normal.interface_index
    if coeffs is None:
        coeffs = coefficients(rho_m, rho_t_m, cfg.cutoff, grid)
    if u_lag is None:
        u_lag = u_old

    dirichlet = curvature(rho_m, check_resolution=False).values
    if forcing is not None:
        dirichlet = dirichlet + forcing.dirichlet(t_old + dt)

    source = theta * lagged_source(u_lag.values, coeffs.b.values, coeffs.c.values, normal)
    explicit = old_coeffs if old_coeffs is not None else coeffs
    if theta < 1.0:
        source += (1.0 - theta) * lagged_source(
            u_old.values, explicit.b.values, explicit.c.values, normal)
    if forcing is not None:
        source += forcing.bulk(t_old + theta * dt)

    values = np.empty(grid.shape)
    values[:, m] = dirichlet
    for half in Half:
        rows = half_rows(normal, half)
        a = coeffs.a.values[:, rows]
        old_half = u_old.values[:, rows]
        rhs = old_half / dt + source[:, rows]
        rhs[:, 0] += theta * a[:, 0] * dirichlet / h ** 2
        if theta < 1.0:
            rhs += (1.0 - theta) * half_operator(
                old_half, u_old.values[:, m], explicit.a.values[:, rows], h)
        bands = half_bands(grid.tangential.wavenumbers, a.mean(axis=0), h, 1.0 / dt, theta)
        values[:, rows] = _solve_half(rhs, a, bands, h, cfg, half)
    return BulkField(grid, values)


def compatible_temperature(rho: InterfaceField, grid: Grid) -> BulkField:
    """Steady profile with u = kappa(rho) at z=0, Neumann walls, solved mode by mode."""
    normal = grid.normal
    h = normal.spacing
    kappa = curvature(rho).values
    bands = half_bands(grid.tangential.wavenumbers, np.ones(normal.half_size), h,
                       inv_dt=0.0, theta=1.0)
    rhs = np.zeros((grid.tangential.n_x, normal.half_size))
    rhs[:, 0] = kappa / h ** 2
    profile = solve_modes(bands, rhs)

    values = np.empty(grid.shape)
    values[:, normal.interface_index] = kappa
    for half in Half:
        values[:, half_rows(normal, half)] = profile
    return BulkField(grid, values)
