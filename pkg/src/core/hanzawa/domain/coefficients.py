from dataclasses import dataclass, field

import numpy as np

from core.__seedwork.domain.value_objects import ValueObject
from core.fields.domain.differentiation import d_tangential
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import Grid
from core.hanzawa.domain.cutoff import Cutoff
from core.hanzawa.domain.exceptions import DegenerateTransformException


@dataclass(frozen=True, slots=True, eq=False)
class TransformCoefficients(ValueObject):
    """Pointwise coefficients of the flattened system on the bulk grid.

    `b` is the single tangential component of B (the interface is one-dimensional).
    """
    a: BulkField
    b: BulkField
    c: BulkField
    d: BulkField
    e: BulkField
    bracket: InterfaceField
    phi: np.ndarray = field(repr=False)
    dphi: np.ndarray = field(repr=False)
    ddphi: np.ndarray = field(repr=False)


def bracket(rho: InterfaceField) -> InterfaceField:
    """Area element sqrt(1 + |grad rho|^2)."""
    rho_x = d_tangential(rho.values, 1)
    return rho.with_values(np.sqrt(1.0 + rho_x ** 2))


def jacobian(rho: InterfaceField, cutoff: Cutoff, grid: Grid) -> np.ndarray:
    """1 + phi'(z) rho(x) on the bulk grid; raises on the first non-positive node."""
    _, dphi, _ = cutoff.evaluate(grid.normal.nodes)
    values = 1.0 + dphi[None, :] * rho.values[:, None]
    bad = np.argwhere(values <= 0.0)
    if bad.size:
        i, j = (int(index) for index in bad[0])
        raise DegenerateTransformException(
            i, j, float(grid.tangential.nodes[i]), float(grid.normal.nodes[j]), float(values[i, j]))
    return values


def metric_coefficient(rho: InterfaceField, cutoff: Cutoff, grid: Grid) -> np.ndarray:
    """a = (1 + |phi grad rho|^2) / (1 + phi' rho)^2 on the bulk grid."""
    phi, _, _ = cutoff.evaluate(grid.normal.nodes)
    big_j = jacobian(rho, cutoff, grid)
    r_x = d_tangential(rho.values, 1)[:, None]
    return (1.0 + (phi[None, :] * r_x) ** 2) / big_j ** 2


def coefficients(rho: InterfaceField, rho_t: InterfaceField, cutoff: Cutoff,
                 grid: Grid) -> TransformCoefficients:
    phi, dphi, ddphi = cutoff.evaluate(grid.normal.nodes)
    big_j = jacobian(rho, cutoff, grid)

    r = rho.values[:, None]
    r_x = d_tangential(rho.values, 1)[:, None]
    r_xx = d_tangential(rho.values, 2)[:, None]
    r_t = rho_t.values[:, None]
    phi_z, dphi_z, ddphi_z = phi[None, :], dphi[None, :], ddphi[None, :]

    metric = 1.0 + (phi_z * r_x) ** 2
    a = metric / big_j ** 2
    b = 2.0 * phi_z * r_x / big_j
    d = (phi_z * r_xx / big_j
         - 2.0 * phi_z * dphi_z * r_x ** 2 / big_j ** 2
         + ddphi_z * r * metric / big_j ** 3)
    e = -phi_z * r_t / big_j
    e = np.broadcast_to(e, grid.shape)

    return TransformCoefficients(
        a=BulkField(grid, a),
        b=BulkField(grid, np.broadcast_to(b, grid.shape)),
        c=BulkField(grid, d + e),
        d=BulkField(grid, d),
        e=BulkField(grid, e),
        bracket=bracket(rho),
        phi=phi,
        dphi=dphi,
        ddphi=ddphi,
    )
