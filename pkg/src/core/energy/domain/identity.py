import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from core.energy.domain.exceptions import HistoryUnavailableException, IdentityCrossTermException
from core.energy.domain.functionals import (
    bulk_dissipation,
    i_psi,
    interface_dissipation,
    interface_weights,
    torus_integral,
)
from core.energy.domain.stack import HasFields
from core.fields.domain.differentiation import d_normal_halves, d_tangential
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.quadrature import integrate_two_sided
from core.hanzawa.domain.coefficients import coefficients, metric_coefficient
from core.hanzawa.domain.cutoff import Cutoff

logger = logging.getLogger(__name__)

WINDOW = 3
RESIDUAL_FLOOR = 1e-14


def _dx(values: np.ndarray, order: int = 1) -> np.ndarray:
    return d_tangential(values, order)


@dataclass(frozen=True, slots=True)
class IdentityTerms:
    """Both sides of the k=0 energy identity at the centre of a three-state window."""
    energy_rate: float
    dissipation: float
    bulk_p: float
    bulk_r: float
    interface_q: float
    interface_s: float
    interface_a: float
    interface_b: float
    size: int

    @property
    def lhs(self) -> float:
        return self.energy_rate + self.dissipation

    @property
    def rhs(self) -> float:
        return (self.bulk_p + self.bulk_r
                - (self.interface_q + self.interface_s + self.interface_a + self.interface_b))

    @property
    def scale(self) -> float:
        """Sum of the magnitudes of every term on either side."""
        return sum(abs(term) for term in (
            self.energy_rate, self.dissipation, self.bulk_p, self.bulk_r,
            self.interface_q, self.interface_s, self.interface_a, self.interface_b))

    @property
    def residual(self) -> float:
        """Imbalance relative to the term scale.

        On a converged trajectory dE/dt and D nearly cancel, so |lhs| is itself only
        discretization error and cannot serve as the denominator.
        """
        floor = RESIDUAL_FLOOR * self.size
        return abs(self.lhs - self.rhs) / (self.scale + floor)


def identity_energy(u: BulkField, rho: InterfaceField, cutoff: Cutoff, epsilon: float = 0.0) -> float:
    """Energy closed by the k=0 identity, with psi = omega = rho."""
    grid = u.grid
    a = metric_coefficient(rho, cutoff, grid)
    values = u.values
    common = 0.5 * values ** 2 + d_tangential(values, 1) ** 2
    above, below = d_normal_halves(values, grid.normal, 1)
    bulk = integrate_two_sided(common + a * above ** 2, common + a * below ** 2, grid)

    omega = rho.values
    l1, _ = interface_weights(omega)
    boundary = 0.5 * torus_integral(_dx(omega, 1) ** 2 * l1) + i_psi(omega, omega)
    if epsilon != 0.0:
        laplacian = _dx(omega, 2)
        boundary += epsilon * (0.5 * torus_integral(_dx(omega, 3) ** 2 * l1) + i_psi(laplacian, omega))
    return bulk + boundary


def identity_dissipation(u: BulkField, u_t: np.ndarray, rho: InterfaceField, rho_t: np.ndarray,
                         cutoff: Cutoff, epsilon: float = 0.0) -> float:
    a = metric_coefficient(rho, cutoff, u.grid)
    return (bulk_dissipation(u.values, u_t, a, u.grid)
            + interface_dissipation(rho_t, rho, epsilon))


def _assert_vanishes(term: str, values: np.ndarray) -> None:
    value = float(np.max(np.abs(values)))
    if value != 0.0:
        raise IdentityCrossTermException(term, value)


def _g(omega: np.ndarray) -> np.ndarray:
    """grad omega . grad <omega>^-1 for the one-dimensional interface."""
    p, q = _dx(omega, 1), _dx(omega, 2)
    _, l3 = interface_weights(omega)
    return -p ** 2 * q * l3


def identity_terms(window: Sequence[HasFields], cutoff: Cutoff, epsilon: float = 0.0,
                   include_b: bool = True, chi: Optional[np.ndarray] = None) -> IdentityTerms:
    """Evaluate the identity on the last three accepted states with centred time differences.

    `chi` is the iterate the interface sources were built from; it defaults to the converged
    interface itself, for which every cross term vanishes exactly.
    """
    if len(window) < WINDOW:
        raise HistoryUnavailableException(WINDOW, len(window), 'energy identity')
    prev, mid, nxt = list(window)[-WINDOW:]
    span = nxt.t - prev.t
    grid = mid.u.grid
    normal = grid.normal

    # bulk
    u = mid.u.values
    u_t = (nxt.u.values - prev.u.values) / span
    rho_t = (nxt.rho.values - prev.rho.values) / span
    coeffs = coefficients(mid.rho, mid.rho.with_values(rho_t), cutoff, grid)
    a, b, c = coeffs.a.values, coeffs.b.values, coeffs.c.values
    a_t = (metric_coefficient(nxt.rho, cutoff, grid) - metric_coefficient(prev.rho, cutoff, grid)) / span
    a_x = _dx(a, 1)
    u_xx = _dx(u, 2)

    p_sides, r_sides = [], []
    for u_z, a_z in zip(d_normal_halves(u, normal, 1), d_normal_halves(a, normal, 1)):
        u_xz = _dx(u_z, 1)
        f = -b * u_xz - c * u_z
        p_sides.append(f * u - a_z * u_z * u)
        r_sides.append(f ** 2 + a_t * u_z ** 2 - 2.0 * a_z * u_t * u_z
                       + 2.0 * a_z * u_xx * u_z - 2.0 * a_x * u_z * u_xz)
    bulk_p = integrate_two_sided(p_sides[0], p_sides[1], grid)
    bulk_r = integrate_two_sided(r_sides[0], r_sides[1], grid)

    # interface, psi = omega = rho
    omega = mid.rho.values
    chi = omega if chi is None else np.asarray(chi, dtype=float)
    p, q, r, s, r5 = (_dx(omega, order) for order in range(1, 6))
    p_t, q_t, r_t, s_t = (_dx(rho_t, order) for order in range(1, 5))
    q_chi, s_chi = _dx(chi, 2), _dx(chi, 4)
    weight = 1.0 + p ** 2
    l1, l3, l5 = weight ** -0.5, weight ** -1.5, weight ** -2.5
    l1_t = -p * p_t * l3
    l3_t = -3.0 * p * p_t * l5
    l1_x = -p * q * l3
    g = p * l1_x
    g_t = (_g(nxt.rho.values) - _g(prev.rho.values)) / span
    jump = rho_t + epsilon * s_t

    q_term = (-0.5 * (p ** 2 + epsilon * r ** 2) * l1_t + rho_t * p * l1_x
              + epsilon * r_t * l1_x * q - jump * g)
    s_term = (2.0 * p_t * l1_x * rho_t + 2.0 * epsilon * r_t * l1_x * q_t
              - 2.0 * jump * (q * l1_t + g_t))

    cross_a = 2.0 * p_t * l1_x * (q_chi - q)
    _assert_vanishes('A', cross_a)
    a_term = (-q ** 2 * l1_t + cross_a + 2.0 * q ** 2 * p * p_t * l3 + q ** 2 * p ** 2 * l3_t
              - 2.0 * q * (_dx(p ** 2 * p_t * l3) - p ** 2 * q_t * l3)
              + 2.0 * p_t * (_dx(p ** 2 * q * l3) - p ** 2 * r * l3))

    b_term = np.zeros_like(omega)
    if include_b and epsilon != 0.0:
        cross_b = 2.0 * r_t * l1_x * (s_chi - s)
        _assert_vanishes('B', cross_b)
        b_term = epsilon * (
            -s ** 2 * l1_t + cross_b + 2.0 * s ** 2 * p * p_t * l3 + s ** 2 * p ** 2 * l3_t
            - 2.0 * s * (_dx(p ** 2 * r_t * l3) - p ** 2 * s_t * l3)
            + 2.0 * r_t * (_dx(p ** 2 * s * l3) - p ** 2 * r5 * l3)
        ) + 2.0 * epsilon * (_dx(q * l3, 2) - s * l3) * s_t

    energy_rate = (identity_energy(nxt.u, nxt.rho, cutoff, epsilon)
                   - identity_energy(prev.u, prev.rho, cutoff, epsilon)) / span
    dissipation = identity_dissipation(mid.u, u_t, mid.rho, rho_t, cutoff, epsilon)

    return IdentityTerms(
        energy_rate=energy_rate,
        dissipation=dissipation,
        bulk_p=bulk_p,
        bulk_r=bulk_r,
        interface_q=torus_integral(q_term),
        interface_s=torus_integral(s_term),
        interface_a=torus_integral(a_term),
        interface_b=torus_integral(b_term),
        size=grid.size,
    )


def identity_residual_k0(window: Sequence[HasFields], cutoff: Cutoff, epsilon: float = 0.0,
                         include_b: bool = True) -> float:
    terms = identity_terms(window, cutoff, epsilon, include_b)
    logger.debug('identity at t=%.6g: lhs=%.6e rhs=%.6e', window[-2].t, terms.lhs, terms.rhs)
    return terms.residual
