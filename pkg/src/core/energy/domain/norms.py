import math
from typing import Tuple

import numpy as np

from core.energy.domain.functionals import (
    bulk_dissipation,
    bulk_energy,
    i_psi,
    i_psi_lower_bound,
    interface_dissipation,
    interface_energy,
    pair_energy,
    regularization_dissipation,
    regularization_energy,
    sobolev_dissipation,
    sobolev_energy,
)
from core.energy.domain.stack import DerivativeStack
from core.fields.domain.differentiation import d_tangential
from core.fields.domain.entities import InterfaceField
from core.fields.domain.grids import Grid
from core.hanzawa.domain.coefficients import metric_coefficient
from core.hanzawa.domain.cutoff import Cutoff


def _metric(stack: DerivativeStack, psi: InterfaceField) -> np.ndarray:
    return metric_coefficient(psi, stack.cutoff, stack.grid)


def energy_E(stack: DerivativeStack, psi: InterfaceField) -> float:  # pylint: disable=invalid-name
    """Sum over the available pairs; missing ones are listed by `unavailable_energy`."""
    a = _metric(stack, psi)
    total = 0.0
    for mu, s in stack.pairs():
        if not stack.available(s):
            continue
        total += bulk_energy(stack.u(mu, s), a, stack.grid) + interface_energy(stack.rho(mu, s), psi)
    return total


def dissipation_D(stack: DerivativeStack, psi: InterfaceField) -> float:  # pylint: disable=invalid-name
    a = _metric(stack, psi)
    total = 0.0
    for mu, s in stack.pairs():
        if not stack.available(s + 1):
            continue
        total += (bulk_dissipation(stack.u(mu, s), stack.u(mu, s + 1), a, stack.grid)
                  + interface_dissipation(stack.rho(mu, s + 1), psi))
    return total


def energy_eps(stack: DerivativeStack, psi: InterfaceField, epsilon: float) -> float:
    energy = energy_E(stack, psi)
    if epsilon == 0.0:
        return energy
    extra = sum(regularization_energy(stack.rho(mu, s), psi)
                for mu, s in stack.pairs() if stack.available(s))
    return energy + epsilon * extra


def dissipation_eps(stack: DerivativeStack, psi: InterfaceField, epsilon: float) -> float:
    dissipation = dissipation_D(stack, psi)
    if epsilon == 0.0:
        return dissipation
    extra = sum(regularization_dissipation(stack.rho(mu, s + 1), psi)
                for mu, s in stack.pairs() if stack.available(s + 1))
    return dissipation + epsilon * extra


def sobolev_norms(stack: DerivativeStack, epsilon: float) -> Tuple[float, float]:
    """Unweighted counterparts of (E_eps, D_eps) over the same pairs."""
    norm_e = sum(sobolev_energy(stack.u(mu, s), stack.rho(mu, s), stack.grid, epsilon)
                 for mu, s in stack.pairs() if stack.available(s))
    norm_d = sum(sobolev_dissipation(stack.u(mu, s), stack.u(mu, s + 1), stack.rho(mu, s + 1),
                                     stack.grid, epsilon)
                 for mu, s in stack.pairs() if stack.available(s + 1))
    return float(norm_e), float(norm_d)


def i_psi_min_gap(stack: DerivativeStack, psi: InterfaceField) -> float:
    """Smallest I_psi(omega) - int |D^2 omega|^2 <psi>^-3 over the available pairs."""
    gaps = [i_psi(stack.rho(mu, s), psi) - i_psi_lower_bound(stack.rho(mu, s), psi)
            for mu, s in stack.pairs() if stack.available(s)]
    return min(gaps) if gaps else 0.0


def equivalence_constant(psi: InterfaceField, cutoff: Cutoff) -> float:
    """C with (1/C) |.| <= E_eps, D_eps <= C |.|, from sup|psi|, sup|psi_x| and sup|phi'|."""
    slope = float(np.max(np.abs(d_tangential(psi.values, 1))))
    shift = cutoff.max_slope * psi.sup_norm()
    if shift >= 1.0:
        return math.inf
    area = math.sqrt(1.0 + slope ** 2)
    a_min = 1.0 / (1.0 + shift) ** 2
    a_max = (1.0 + slope ** 2) / (1.0 - shift) ** 2

    energy_lower = min(1.0, a_min, area ** -3)
    energy_upper = max(1.0, a_max)
    dissipation_lower = min(1.0, a_min, a_min ** 2, 2.0 / area)
    dissipation_upper = max(1.0, a_max, a_max ** 2, 2.0)
    return max(energy_upper, 1.0 / energy_lower, dissipation_upper, 1.0 / dissipation_lower)


def energy_norm(u: np.ndarray, omega: np.ndarray, psi: InterfaceField, cutoff: Cutoff,
                grid: Grid) -> float:
    """sqrt(E) at order zero of (u, omega) with the weights of psi; blind to constant omega."""
    a = metric_coefficient(psi, cutoff, grid)
    return math.sqrt(max(pair_energy(u, omega, psi, a, grid), 0.0))
