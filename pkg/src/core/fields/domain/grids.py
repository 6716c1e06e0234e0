import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from core.__seedwork.domain.exceptions import ConfigValidationException, ValidationException
from core.__seedwork.domain.validators import ValidatorRules
from core.__seedwork.domain.value_objects import ValueObject

PERIOD = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class TangentialGrid(ValueObject):
    n_x: int

    def __post_init__(self):
        ValidatorRules.values(self.n_x, 'n_x').required().integer().min_value(8).even()

    @property
    def spacing(self) -> float:
        return PERIOD / self.n_x

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n_x) * self.spacing

    @property
    def wavenumbers(self) -> np.ndarray:
        """Non-negative wavenumbers of the real transform; the last one is Nyquist."""
        return np.fft.rfftfreq(self.n_x, d=1.0 / self.n_x)


@dataclass(frozen=True, slots=True)
class NormalGrid(ValueObject):
    n_z: int

    def __post_init__(self):
        ValidatorRules.values(self.n_z, 'n_z').required().integer().min_value(5).odd()

    @property
    def spacing(self) -> float:
        return 2.0 / (self.n_z - 1)

    @property
    def nodes(self) -> np.ndarray:
        nodes = np.linspace(-1.0, 1.0, self.n_z)
        nodes[self.interface_index] = 0.0
        return nodes

    @property
    def interface_index(self) -> int:
        return (self.n_z - 1) // 2

    @property
    def half_size(self) -> int:
        """Number of nodes strictly on one side of z=0."""
        return (self.n_z - 1) // 2


@dataclass(frozen=True, slots=True)
class Grid(ValueObject):
    tangential: TangentialGrid
    normal: NormalGrid

    @staticmethod
    def create(n_x: int, n_z: int) -> 'Grid':
        try:
            return Grid(TangentialGrid(n_x), NormalGrid(n_z))
        except ValidationException as ex:
            field = 'n_x' if 'n_x' in ex.args[0] else 'n_z'
            error = ConfigValidationException()
            error.set_from_error(field, ex)
            raise error from ex

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.tangential.n_x, self.normal.n_z)

    @property
    def size(self) -> int:
        return self.tangential.n_x * self.normal.n_z

    def mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.tangential.nodes, self.normal.nodes, indexing='ij')
