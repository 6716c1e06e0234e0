import math
from dataclasses import astuple, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.__seedwork.domain.value_objects import ValueObject

COLUMNS: Tuple[str, ...] = (
    't', 'E', 'D', 'E_eps', 'D_eps', 'sobolev_E', 'sobolev_D',
    'cons_residual', 'rho_dev_L2', 'identity_residual', 'inner_iters',
)


def _parse_float(text: str) -> Optional[float]:
    return None if text == '' else float(text)


@dataclass(frozen=True, slots=True)
class EnergyReport(ValueObject):
    """Diagnostics of one accepted step."""
    t: float
    E: float  # pylint: disable=invalid-name
    D: float  # pylint: disable=invalid-name
    E_eps: float  # pylint: disable=invalid-name
    D_eps: float  # pylint: disable=invalid-name
    sobolev_E: float  # pylint: disable=invalid-name
    sobolev_D: float  # pylint: disable=invalid-name
    cons_residual: float
    rho_dev_L2: float  # pylint: disable=invalid-name
    identity_residual: Optional[float] = None
    inner_iters: int = 0
    I_psi_min_gap: float = 0.0  # pylint: disable=invalid-name
    unavailable: Tuple[str, ...] = field(default=())

    def row(self) -> List:
        return [getattr(self, column) for column in COLUMNS]

    @property
    def decay_functional(self) -> float:
        """E + |rho - rho_bar|^2, the quantity whose exponential decay is fitted."""
        return self.E + self.rho_dev_L2 ** 2

    def is_finite(self) -> bool:
        return all(math.isfinite(value) for value in astuple(self)[:9])

    @staticmethod
    def from_row(columns: Sequence[str], row: Sequence[str]) -> 'EnergyReport':
        data: Dict[str, object] = dict(zip(columns, row))
        values = {
            name: _parse_float(str(data[name]))
            for name in COLUMNS if name not in ('identity_residual', 'inner_iters')
        }
        return EnergyReport(
            **values,
            identity_residual=_parse_float(str(data.get('identity_residual', ''))),
            inner_iters=int(data.get('inner_iters') or 0),
        )
