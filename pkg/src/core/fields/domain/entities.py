from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from core.__seedwork.domain.exceptions import NonFiniteFieldException, ValidationException
from core.__seedwork.domain.value_objects import ValueObject
from core.fields.domain.grids import Grid, TangentialGrid


def ensure_finite(values: np.ndarray, name: str) -> np.ndarray:
    finite = np.isfinite(values)
    if not finite.all():
        raise NonFiniteFieldException(name, int(values.size - finite.sum()))
    return values


@dataclass(frozen=True, slots=True, eq=False)
class InterfaceField(ValueObject):
    grid: TangentialGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.n_x,):
            raise ValidationException(
                f'The interface values must have shape ({self.grid.n_x},), got {values.shape}')
        ensure_finite(values, 'interface field')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @staticmethod
    def zeros(grid: TangentialGrid) -> 'InterfaceField':
        return InterfaceField(grid, np.zeros(grid.n_x))

    @staticmethod
    def constant(grid: TangentialGrid, value: float) -> 'InterfaceField':
        return InterfaceField(grid, np.full(grid.n_x, float(value)))

    @staticmethod
    def from_function(grid: TangentialGrid, fn: Callable[[np.ndarray], np.ndarray]) -> 'InterfaceField':
        return InterfaceField(grid, np.broadcast_to(fn(grid.nodes), (grid.n_x,)))

    def with_values(self, values: np.ndarray) -> 'InterfaceField':
        return InterfaceField(self.grid, values)

    def mean(self) -> float:
        return float(np.mean(self.values))

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))


@dataclass(frozen=True, slots=True, eq=False)
class BulkField(ValueObject):
    grid: Grid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != self.grid.shape:
            raise ValidationException(
                f'The bulk values must have shape {self.grid.shape}, got {values.shape}')
        ensure_finite(values, 'bulk field')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @staticmethod
    def zeros(grid: Grid) -> 'BulkField':
        return BulkField(grid, np.zeros(grid.shape))

    @staticmethod
    def from_function(grid: Grid, fn: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> 'BulkField':
        x_mesh, z_mesh = grid.mesh()
        return BulkField(grid, np.broadcast_to(fn(x_mesh, z_mesh), grid.shape))

    def with_values(self, values: np.ndarray) -> 'BulkField':
        return BulkField(self.grid, values)

    def trace(self) -> InterfaceField:
        """Values on the interface line z=0."""
        return InterfaceField(self.grid.tangential, self.values[:, self.grid.normal.interface_index])

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))
