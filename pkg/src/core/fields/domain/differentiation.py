from enum import Enum
from typing import Tuple, TypeVar, Union

import numpy as np

from core.__seedwork.domain.exceptions import ValidationException
from core.fields.domain.entities import BulkField, InterfaceField, ensure_finite
from core.fields.domain.grids import NormalGrid

FieldOrArray = TypeVar('FieldOrArray', InterfaceField, BulkField, np.ndarray)


class Side(Enum):
    ABOVE = 'above'
    BELOW = 'below'
    CENTERED = 'centered'


def _unwrap(f: Union[InterfaceField, BulkField, np.ndarray]) -> np.ndarray:
    if isinstance(f, (InterfaceField, BulkField)):
        return f.values
    return ensure_finite(np.asarray(f, dtype=float), 'input')


def _rewrap(f, values: np.ndarray):
    if isinstance(f, (InterfaceField, BulkField)):
        return f.with_values(values)
    return values


def spectral_symbol(n_x: int, order: int) -> np.ndarray:
    """Multiplier (ik)^order on the real-transform wavenumbers, Nyquist zeroed for odd orders."""
    wavenumbers = np.fft.rfftfreq(n_x, d=1.0 / n_x)
    symbol = (1j * wavenumbers) ** order
    if order % 2 == 1:
        symbol[-1] = 0.0
    return symbol


def d_tangential(f: FieldOrArray, order: int = 1) -> FieldOrArray:
    """Fourier derivative along the periodic direction (axis 0) of a field or raw array."""
    if order < 0:
        raise ValidationException('The order must not be negative')
    values = _unwrap(f)
    if order == 0:
        return _rewrap(f, values.copy())

    n_x = values.shape[0]
    symbol = spectral_symbol(n_x, order)
    if values.ndim == 2:
        symbol = symbol[:, None]
    spectrum = np.fft.rfft(values, axis=0)
    return _rewrap(f, np.fft.irfft(spectrum * symbol, n=n_x, axis=0))


def _first_derivative(values: np.ndarray, h: float, middle: int, side: Side) -> np.ndarray:
    result = np.empty_like(values)
    result[:, 1:-1] = (values[:, 2:] - values[:, :-2]) / (2.0 * h)
    result[:, 0] = (-3.0 * values[:, 0] + 4.0 * values[:, 1] - values[:, 2]) / (2.0 * h)
    result[:, -1] = (3.0 * values[:, -1] - 4.0 * values[:, -2] + values[:, -3]) / (2.0 * h)
    if side is Side.ABOVE:
        m = middle
        result[:, m] = (-3.0 * values[:, m] + 4.0 * values[:, m + 1] - values[:, m + 2]) / (2.0 * h)
    elif side is Side.BELOW:
        m = middle
        result[:, m] = (3.0 * values[:, m] - 4.0 * values[:, m - 1] + values[:, m - 2]) / (2.0 * h)
    return result


def _second_derivative(values: np.ndarray, h: float, middle: int, side: Side) -> np.ndarray:
    h2 = h * h
    result = np.empty_like(values)
    result[:, 1:-1] = (values[:, 2:] - 2.0 * values[:, 1:-1] + values[:, :-2]) / h2
    result[:, 0] = (2.0 * values[:, 0] - 5.0 * values[:, 1]
                    + 4.0 * values[:, 2] - values[:, 3]) / h2
    result[:, -1] = (2.0 * values[:, -1] - 5.0 * values[:, -2]
                     + 4.0 * values[:, -3] - values[:, -4]) / h2
    m = middle
    if side is Side.ABOVE:
        result[:, m] = (2.0 * values[:, m] - 5.0 * values[:, m + 1]
                        + 4.0 * values[:, m + 2] - values[:, m + 3]) / h2
    elif side is Side.BELOW:
        result[:, m] = (2.0 * values[:, m] - 5.0 * values[:, m - 1]
                        + 4.0 * values[:, m - 2] - values[:, m - 3]) / h2
    return result


def d_normal_values(values: np.ndarray, normal: NormalGrid,
                    side: Side = Side.CENTERED, order: int = 1) -> np.ndarray:
    """Normal derivative of an (n_x, n_z) array.

    Second-order one-sided stencils at the walls and, for side above/below, at z=0.
    Centered differencing across z=0 is only first-order when the field has a kink there.
    """
    side = Side(side)
    values = np.asarray(values, dtype=float)
    if values.ndim == 1:
        values = values[None, :]
    if order == 1:
        return _first_derivative(values, normal.spacing, normal.interface_index, side)
    if order == 2:
        if normal.n_z < 7:
            raise ValidationException('The second normal derivative requires n_z >= 7')
        return _second_derivative(values, normal.spacing, normal.interface_index, side)
    raise ValidationException('The normal derivative order must be 1 or 2')


def d_normal(f: BulkField, side: Union[Side, str] = Side.CENTERED, order: int = 1) -> BulkField:
    return f.with_values(d_normal_values(f.values, f.grid.normal, Side(side), order))


def d_normal_halves(values: np.ndarray, normal: NormalGrid,
                    order: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """Derivatives seen from above and from below; they differ only on the z=0 row."""
    return (
        d_normal_values(values, normal, Side.ABOVE, order),
        d_normal_values(values, normal, Side.BELOW, order),
    )
