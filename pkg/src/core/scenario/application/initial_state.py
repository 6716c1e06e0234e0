import logging
from typing import Optional

import numpy as np

from core.__seedwork.domain.exceptions import ValidationException
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import Grid
from core.fields.infra.snapshots import read_bulk_snapshot, read_interface_snapshot
from core.oracle.domain.manufactured import ManufacturedSolution
from core.scenario.domain.entities import InitialCondition, RandomModes, Scenario
from core.solver.domain.state import State
from core.solver.domain.temperature import compatible_temperature
from core.solver.infra.checkpoints import read_checkpoint

logger = logging.getLogger(__name__)


def band_limit(n_x: int) -> int:
    """Largest wavenumber a random interface may carry; the top third of the spectrum stays zero."""
    return max(1, n_x // 3)


def random_interface(spec: RandomModes, grid: Grid, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    x = grid.tangential.nodes
    count = min(spec.n_modes, band_limit(grid.tangential.n_x))
    values = np.zeros_like(x)
    for k in range(1, count + 1):
        cos_part, sin_part = rng.standard_normal(2) * spec.amplitude / count
        values += cos_part * np.cos(k * x) + sin_part * np.sin(k * x)
    return values


def _check_grid(actual: Grid, expected: Grid, source: str) -> None:
    if actual != expected:
        raise ValidationException(
            f'The {source} grid {actual.shape} does not match the solver grid {expected.shape}')


def _interface(initial: InitialCondition, grid: Grid, seed: int) -> InterfaceField:
    if initial.rho_file is not None:
        rho, _ = read_interface_snapshot(initial.rho_file)
        if rho.grid != grid.tangential:
            raise ValidationException(
                f'The rho_file has n_x={rho.grid.n_x}, the solver grid has n_x={grid.tangential.n_x}')
        return rho

    x = grid.tangential.nodes
    values = np.full(x.shape, float(initial.mean))
    for mode in initial.modes:
        wave = np.sin(mode.k * x) if mode.phase == 'sin' else np.cos(mode.k * x)
        values += mode.amplitude * wave
    if initial.random is not None:
        values += random_interface(initial.random, grid, seed)
    return InterfaceField(grid.tangential, values)


def _temperature(initial: InitialCondition, rho: InterfaceField, grid: Grid) -> BulkField:
    if initial.temperature == 'file':
        u, _ = read_bulk_snapshot(initial.u_file)
        _check_grid(u.grid, grid, 'u_file')
    elif initial.temperature == 'zero':
        u = BulkField.zeros(grid)
    else:
        u = compatible_temperature(rho, grid)

    if initial.heat_bump:
        _, z = grid.mesh()
        u = u.with_values(u.values + initial.heat_bump * np.sin(np.pi * z) ** 2)
    return u


def build_initial_state(scenario: Scenario, seed: Optional[int] = None) -> State:
    """The t=0 state of a scenario, or the resumed checkpoint when one is named.

    `seed` overrides the scenario's own seed for the random interface part.
    """
    cfg = scenario.solver
    grid = cfg.grid
    initial = scenario.initial

    if initial.resume is not None:
        state, metadata = read_checkpoint(initial.resume)
        _check_grid(state.grid, grid, 'checkpoint')
        if metadata.get('config_hash') not in (None, cfg.config_hash):
            logger.warning('resuming %s written with config %s under config %s',
                           initial.resume, metadata['config_hash'], cfg.config_hash)
        logger.info('resuming from %s at t=%.6g', initial.resume, state.t)
        return state

    if scenario.manufactured is not None:
        spec = scenario.manufactured
        solution = ManufacturedSolution.from_strings(spec.u, spec.rho, spec.u_lower)
        u, rho = solution.exact_fields(grid, 0.0)
        return State.initial(u, rho)

    rho = _interface(initial, grid, scenario.seed if seed is None else seed)
    return State.initial(_temperature(initial, rho, grid), rho)
