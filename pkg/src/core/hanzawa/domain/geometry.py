import logging
import warnings

import numpy as np

from core.__seedwork.domain.exceptions import UnresolvedFieldWarning
from core.fields.domain.differentiation import d_tangential
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import NormalGrid

logger = logging.getLogger(__name__)

RESOLUTION_TOLERANCE = 1e-8


def spectral_tail_fraction(values: np.ndarray) -> float:
    """Share of the spectral energy carried by the top third of the wavenumbers."""
    power = np.abs(np.fft.rfft(values)) ** 2
    total = power.sum()
    if total == 0.0:
        return 0.0
    cut = int(np.ceil(2 * (power.size - 1) / 3))
    return float(power[cut:].sum() / total)


def is_resolved(f: InterfaceField, tolerance: float = RESOLUTION_TOLERANCE) -> bool:
    return spectral_tail_fraction(f.values) < tolerance


def curvature(rho: InterfaceField, check_resolution: bool = True) -> InterfaceField:
    """Mean curvature of the graph in divergence form, d/dx(rho_x / <rho>)."""
    if check_resolution and not is_resolved(rho):
        fraction = spectral_tail_fraction(rho.values)
        logger.debug('unresolved interface field, tail fraction %.3e', fraction)
        warnings.warn(
            f'interface field is not resolved: top third of the spectrum holds {fraction:.3e}',
            UnresolvedFieldWarning, stacklevel=2)
    rho_x = d_tangential(rho.values, 1)
    flux = rho_x / np.sqrt(1.0 + rho_x ** 2)
    return rho.with_values(d_tangential(flux, 1))


def curvature_expanded(rho: InterfaceField) -> InterfaceField:
    """Expanded form rho_xx <rho>^-1 - rho_x^2 rho_xx <rho>^-3."""
    rho_x = d_tangential(rho.values, 1)
    rho_xx = d_tangential(rho.values, 2)
    weight = 1.0 + rho_x ** 2
    return rho.with_values(rho_xx / np.sqrt(weight) - rho_x ** 2 * rho_xx / weight ** 1.5)


def jump_values(u: np.ndarray, normal: NormalGrid) -> np.ndarray:
    m, h = normal.interface_index, normal.spacing
    above = (-3.0 * u[:, m] + 4.0 * u[:, m + 1] - u[:, m + 2]) / (2.0 * h)
    below = (3.0 * u[:, m] - 4.0 * u[:, m - 1] + u[:, m - 2]) / (2.0 * h)
    return below - above


def jump_un(u: BulkField) -> InterfaceField:
    """[u_n] = (derivative from below) - (derivative from above) at z=0."""
    return InterfaceField(u.grid.tangential, jump_values(u.values, u.grid.normal))
