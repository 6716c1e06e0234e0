import numpy as np

from core.fields.domain.entities import InterfaceField
from core.fields.domain.grids import TangentialGrid


def curvature_closed_form(delta: float, k: int, grid: TangentialGrid) -> InterfaceField:
    """Exact curvature of rho = delta sin(kx)."""
    x = grid.nodes
    values = -delta * k ** 2 * np.sin(k * x) * (1.0 + (delta * k * np.cos(k * x)) ** 2) ** -1.5
    return InterfaceField(grid, values)
