from enum import Enum
from typing import Union

import numpy as np
from scipy.integrate import trapezoid

from core.__seedwork.domain.exceptions import ValidationException
from core.fields.domain.entities import BulkField, InterfaceField, ensure_finite
from core.fields.domain.grids import Grid, NormalGrid, TangentialGrid


class Domain(Enum):
    TORUS = 'torus'
    BULK = 'bulk'
    UPPER = 'upper'
    LOWER = 'lower'


def integrate_torus(values: np.ndarray, grid: TangentialGrid) -> float:
    return float(np.sum(values) * grid.spacing)


def integrate_normal(values: np.ndarray, normal: NormalGrid, domain: Domain = Domain.BULK) -> np.ndarray:
    """Trapezoid rule in z over the whole interval or one half; returns one value per tangential node."""
    middle = normal.interface_index
    nodes = normal.nodes
    if domain is Domain.BULK:
        return trapezoid(values, nodes, axis=-1)
    if domain is Domain.UPPER:
        return trapezoid(values[..., middle:], nodes[middle:], axis=-1)
    if domain is Domain.LOWER:
        return trapezoid(values[..., :middle + 1], nodes[:middle + 1], axis=-1)
    raise ValidationException(f'The domain {domain.value} is not a normal domain')


def integrate_bulk(values: np.ndarray, grid: Grid, domain: Domain = Domain.BULK) -> float:
    return integrate_torus(integrate_normal(values, grid.normal, domain), grid.tangential)


def integrate(f: Union[InterfaceField, BulkField], domain: Union[Domain, str] = Domain.TORUS) -> float:
    domain = Domain(domain)
    if isinstance(f, InterfaceField):
        if domain is not Domain.TORUS:
            raise ValidationException('An interface field can only be integrated over the torus')
        return integrate_torus(f.values, f.grid)
    if domain is Domain.TORUS:
        raise ValidationException('A bulk field is integrated over bulk, upper or lower')
    return integrate_bulk(ensure_finite(f.values, 'integrand'), f.grid, domain)


def integrate_two_sided(above: np.ndarray, below: np.ndarray, grid: Grid) -> float:
    """Bulk integral of a quantity that is two-valued on z=0: `above` on z >= 0, `below` on z <= 0."""
    return integrate_bulk(above, grid, Domain.UPPER) + integrate_bulk(below, grid, Domain.LOWER)
