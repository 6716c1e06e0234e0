import math
from dataclasses import dataclass, field
from typing import List, Optional, Protocol, Sequence, Tuple

import numpy as np

from core.fields.domain.differentiation import d_tangential
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import Grid
from core.hanzawa.domain.cutoff import Cutoff

Pair = Tuple[int, int]


class HasFields(Protocol):
    t: float
    u: BulkField
    rho: InterfaceField


def backward_derivative(times: Sequence[float], samples: Sequence[np.ndarray],
                        order: int) -> Optional[np.ndarray]:
    """order! times the leading Newton divided difference of the last order+1 samples."""
    if order == 0:
        return np.asarray(samples[-1])
    if len(samples) < order + 1:
        return None
    ts = list(times[-(order + 1):])
    table = [np.asarray(sample) for sample in samples[-(order + 1):]]
    for level in range(1, order + 1):
        table = [(table[i + 1] - table[i]) / (ts[i + level] - ts[i]) for i in range(len(table) - 1)]
    return math.factorial(order) * table[0]


@dataclass(frozen=True, slots=True, eq=False)
class DerivativeStack:
    """Tangential-time derivatives d_t^s d_x^mu of (u, rho) at the latest accepted state.

    Time derivatives are kept up to order k_diag + 1 so that dissipation terms can use
    d_t of every (mu, s) pair; a missing one stays None and is reported, never zeroed.
    """
    grid: Grid
    cutoff: Cutoff
    k_diag: int
    t: float
    u_time: Tuple[Optional[np.ndarray], ...] = field(repr=False)
    rho_time: Tuple[Optional[np.ndarray], ...] = field(repr=False)

    @staticmethod
    def history_length(k_diag: int) -> int:
        return max(2 * k_diag + 1, k_diag + 2)

    @staticmethod
    def from_history(states: Sequence[HasFields], k_diag: int, cutoff: Cutoff) -> 'DerivativeStack':
        states = list(states)[-DerivativeStack.history_length(k_diag):]
        times = [state.t for state in states]
        u_samples = [state.u.values for state in states]
        rho_samples = [state.rho.values for state in states]
        orders = range(k_diag + 2)
        return DerivativeStack(
            grid=states[-1].u.grid,
            cutoff=cutoff,
            k_diag=k_diag,
            t=times[-1],
            u_time=tuple(backward_derivative(times, u_samples, s) for s in orders),
            rho_time=tuple(backward_derivative(times, rho_samples, s) for s in orders),
        )

    @staticmethod
    def from_fields(u: BulkField, rho: InterfaceField, cutoff: Cutoff,
                    u_t: Optional[np.ndarray] = None,
                    rho_t: Optional[np.ndarray] = None) -> 'DerivativeStack':
        """Order-zero stack of a single state with optionally known rates."""
        return DerivativeStack(u.grid, cutoff, 0, 0.0, (u.values, u_t), (rho.values, rho_t))

    def pairs(self) -> List[Pair]:
        return [(mu, s) for s in range(self.k_diag + 1)
                for mu in range(2 * self.k_diag - 2 * s + 1)]

    def u(self, mu: int, s: int) -> Optional[np.ndarray]:
        base = self.u_time[s] if s < len(self.u_time) else None
        return None if base is None else d_tangential(base, mu)

    def rho(self, mu: int, s: int) -> Optional[np.ndarray]:
        base = self.rho_time[s] if s < len(self.rho_time) else None
        return None if base is None else d_tangential(base, mu)

    def available(self, s: int) -> bool:
        return s < len(self.u_time) and self.u_time[s] is not None

    def unavailable_energy(self) -> List[Pair]:
        return [(mu, s) for mu, s in self.pairs() if not self.available(s)]

    def unavailable_dissipation(self) -> List[Pair]:
        return [(mu, s) for mu, s in self.pairs() if not self.available(s + 1)]
