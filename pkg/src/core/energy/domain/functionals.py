import math
from typing import Tuple, Union

import numpy as np

from core.fields.domain.differentiation import d_normal_halves, d_tangential
from core.fields.domain.entities import InterfaceField
from core.fields.domain.grids import Grid
from core.fields.domain.quadrature import integrate_two_sided

InterfaceLike = Union[InterfaceField, np.ndarray]


def _values(f: InterfaceLike) -> np.ndarray:
    return f.values if isinstance(f, InterfaceField) else np.asarray(f, dtype=float)


def torus_integral(values: np.ndarray) -> float:
    """Rectangle rule over the periodic interval."""
    return float(np.sum(values) * 2.0 * math.pi / values.shape[0])


def interface_weights(psi: InterfaceLike) -> Tuple[np.ndarray, np.ndarray]:
    """(<psi>^-1, <psi>^-3)."""
    psi_x = d_tangential(_values(psi), 1)
    weight = 1.0 + psi_x ** 2
    return weight ** -0.5, weight ** -1.5


def i_psi(omega: InterfaceLike, psi: InterfaceLike) -> float:
    """Integrated form |D^2 omega|^2 <psi>^-1 - (D^2 omega . grad psi)^2 <psi>^-3."""
    omega_xx = d_tangential(_values(omega), 2)
    psi_x = d_tangential(_values(psi), 1)
    l1, l3 = interface_weights(psi)
    return torus_integral(omega_xx ** 2 * l1 - (omega_xx * psi_x) ** 2 * l3)


def i_psi_lower_bound(omega: InterfaceLike, psi: InterfaceLike) -> float:
    _, l3 = interface_weights(psi)
    return torus_integral(d_tangential(_values(omega), 2) ** 2 * l3)


def bulk_energy(u: np.ndarray, a: np.ndarray, grid: Grid) -> float:
    """Two-sided integral of u^2 + u_x^2 + a u_z^2."""
    common = u ** 2 + d_tangential(u, 1) ** 2
    above, below = d_normal_halves(u, grid.normal, 1)
    return integrate_two_sided(common + a * above ** 2, common + a * below ** 2, grid)


def bulk_dissipation(u: np.ndarray, u_t: np.ndarray, a: np.ndarray, grid: Grid) -> float:
    """Two-sided integral of u_t^2 + u_x^2 + a u_z^2 + u_xx^2 + 2a u_xz^2 + (a u_zz)^2."""
    common = u_t ** 2 + d_tangential(u, 1) ** 2 + d_tangential(u, 2) ** 2
    first = d_normal_halves(u, grid.normal, 1)
    second = d_normal_halves(u, grid.normal, 2)
    sides = [
        common + a * u_z ** 2 + 2.0 * a * d_tangential(u_z, 1) ** 2 + (a * u_zz) ** 2
        for u_z, u_zz in zip(first, second)
    ]
    return integrate_two_sided(sides[0], sides[1], grid)


def interface_energy(omega: InterfaceLike, psi: InterfaceLike, epsilon: float = 0.0) -> float:
    omega = _values(omega)
    l1, _ = interface_weights(psi)
    total = torus_integral(d_tangential(omega, 1) ** 2 * l1) + i_psi(omega, psi)
    if epsilon == 0.0:
        return total
    return total + epsilon * regularization_energy(omega, psi)


def regularization_energy(omega: InterfaceLike, psi: InterfaceLike) -> float:
    """|grad Laplacian omega|^2 <psi>^-1 + I_psi(Laplacian omega), without the factor eps."""
    laplacian = d_tangential(_values(omega), 2)
    l1, _ = interface_weights(psi)
    return torus_integral(d_tangential(laplacian, 1) ** 2 * l1) + i_psi(laplacian, psi)


def interface_dissipation(omega_t: InterfaceLike, psi: InterfaceLike, epsilon: float = 0.0) -> float:
    omega_t = _values(omega_t)
    l1, _ = interface_weights(psi)
    total = 2.0 * torus_integral(d_tangential(omega_t, 1) ** 2 * l1)
    if epsilon == 0.0:
        return total
    return total + epsilon * regularization_dissipation(omega_t, psi)


def regularization_dissipation(omega_t: InterfaceLike, psi: InterfaceLike) -> float:
    l1, _ = interface_weights(psi)
    return 2.0 * torus_integral(d_tangential(_values(omega_t), 3) ** 2 * l1)


def pair_energy(u: np.ndarray, omega: InterfaceLike, psi: InterfaceLike, a: np.ndarray,
                grid: Grid, epsilon: float = 0.0) -> float:
    return bulk_energy(u, a, grid) + interface_energy(omega, psi, epsilon)


def sobolev_energy(u: np.ndarray, omega: InterfaceLike, grid: Grid, epsilon: float = 0.0) -> float:
    omega = _values(omega)
    common = u ** 2 + d_tangential(u, 1) ** 2
    above, below = d_normal_halves(u, grid.normal, 1)
    bulk = integrate_two_sided(common + above ** 2, common + below ** 2, grid)
    boundary = torus_integral(d_tangential(omega, 1) ** 2 + d_tangential(omega, 2) ** 2)
    if epsilon != 0.0:
        boundary += epsilon * torus_integral(
            d_tangential(omega, 3) ** 2 + d_tangential(omega, 4) ** 2)
    return bulk + boundary


def sobolev_dissipation(u: np.ndarray, u_t: np.ndarray, omega_t: InterfaceLike, grid: Grid,
                        epsilon: float = 0.0) -> float:
    omega_t = _values(omega_t)
    common = u_t ** 2 + d_tangential(u, 1) ** 2 + d_tangential(u, 2) ** 2
    first = d_normal_halves(u, grid.normal, 1)
    second = d_normal_halves(u, grid.normal, 2)
    sides = [
        common + u_z ** 2 + 2.0 * d_tangential(u_z, 1) ** 2 + u_zz ** 2
        for u_z, u_zz in zip(first, second)
    ]
    bulk = integrate_two_sided(sides[0], sides[1], grid)
    boundary = torus_integral(d_tangential(omega_t, 1) ** 2)
    if epsilon != 0.0:
        boundary += epsilon * torus_integral(d_tangential(omega_t, 3) ** 2)
    return bulk + boundary
