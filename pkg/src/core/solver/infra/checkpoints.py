from dataclasses import dataclass
from pathlib import Path
from typing import Tuple

from core.__seedwork.domain.exceptions import ValidationException
from core.__seedwork.infra.files import Metadata
from core.fields.infra.snapshots import (
    read_bulk_snapshot,
    read_interface_snapshot,
    write_bulk_snapshot,
    write_interface_snapshot,
)
from core.solver.domain.config import SolverConfig
from core.solver.domain.state import State

INTERFACE_FILES = ('rho', 'rho_prev', 'rho_t')


def write_checkpoint(directory: Path, state: State, cfg: SolverConfig) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    extra = {
        't': state.t,
        'epsilon': cfg.epsilon,
        'dt': cfg.dt,
        'config_hash': cfg.config_hash,
        'inner_iters': state.inner_iters,
    }
    write_bulk_snapshot(directory / 'u.csv', state.u, extra)
    for name in INTERFACE_FILES:
        write_interface_snapshot(directory / f'{name}.csv', getattr(state, name), extra)
    return directory


def read_checkpoint(directory: Path) -> Tuple[State, Metadata]:
    directory = Path(directory)
    if not (directory / 'u.csv').is_file():
        raise ValidationException(f'The checkpoint {directory} has no u.csv')
    u, metadata = read_bulk_snapshot(directory / 'u.csv')
    interface = {name: read_interface_snapshot(directory / f'{name}.csv')[0] for name in INTERFACE_FILES}
    if interface['rho'].grid != u.grid.tangential:
        raise ValidationException(f'The checkpoint {directory} mixes grid sizes')
    state = State(t=float(metadata['t']), u=u, inner_iters=int(metadata.get('inner_iters', 0)),
                  **interface)
    return state, metadata


@dataclass(slots=True)
class CheckpointWriter:
    """Step callback writing `step-NNNNNN` checkpoints every `every` accepted steps."""
    root: Path
    cfg: SolverConfig
    every: int
    count: int = 0

    def __call__(self, state: State) -> None:
        self.count += 1
        if self.every > 0 and self.count % self.every == 0:
            write_checkpoint(Path(self.root) / f'step-{self.count:06d}', state, self.cfg)
