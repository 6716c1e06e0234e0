from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Optional, Tuple

import numpy as np

from core.__seedwork.domain.value_objects import ValueObject
from core.fields.domain.entities import BulkField, InterfaceField
from core.hanzawa.domain.geometry import curvature

if TYPE_CHECKING:
    from core.energy.domain.entities import EnergyReport


@dataclass(frozen=True, slots=True, eq=False)
class State(ValueObject):
    """An accepted time level of the flattened problem.

    `rho_t` is the interface rate of the step that produced this level; it is zero for an initial state.
    """
    t: float
    u: BulkField
    rho: InterfaceField
    rho_prev: InterfaceField
    rho_t: InterfaceField
    inner_iters: int = 0
    contraction_ratios: Tuple[float, ...] = field(default=(), repr=False)
    halvings: int = 0
    step_report: Optional['EnergyReport'] = field(default=None, repr=False)

    @staticmethod
    def initial(u: BulkField, rho: InterfaceField, t: float = 0.0) -> 'State':
        return State(t=float(t), u=u, rho=rho, rho_prev=rho,
                     rho_t=InterfaceField.zeros(rho.grid))

    @property
    def grid(self):
        return self.u.grid

    def with_report(self, report: 'EnergyReport') -> 'State':
        return replace(self, step_report=report)

    def trace_error(self, dirichlet: Optional[np.ndarray] = None) -> float:
        """sup |u(., 0) - kappa(rho) - dirichlet| at this level."""
        target = curvature(self.rho, check_resolution=False).values
        if dirichlet is not None:
            target = target + dirichlet
        return float(np.max(np.abs(self.u.trace().values - target)))
