import math

from core.energy.domain.stack import HasFields
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.quadrature import integrate_bulk, integrate_torus
from core.hanzawa.domain.coefficients import jacobian
from core.hanzawa.domain.cutoff import Cutoff


def heat_content(u: BulkField, rho: InterfaceField, cutoff: Cutoff) -> float:
    """Integral of u (1 + phi' rho) over the flattened domain."""
    return integrate_bulk(u.values * jacobian(rho, cutoff, u.grid), u.grid)


def conservation_residual(old: HasFields, new: HasFields, cutoff: Cutoff) -> float:
    heat = heat_content(new.u, new.rho, cutoff) - heat_content(old.u, old.rho, cutoff)
    mass = integrate_torus(new.rho.values, new.rho.grid) - integrate_torus(old.rho.values, old.rho.grid)
    return abs(heat - mass)


def steady_mean(u0: BulkField, rho0: InterfaceField, cutoff: Cutoff) -> float:
    """Mean of the flat state the solution is predicted to settle to."""
    conserved = integrate_torus(rho0.values, rho0.grid) - heat_content(u0, rho0, cutoff)
    return conserved / (2.0 * math.pi)


def rho_deviation(rho: InterfaceField, mean: float) -> float:
    return math.sqrt(integrate_torus((rho.values - mean) ** 2, rho.grid))
