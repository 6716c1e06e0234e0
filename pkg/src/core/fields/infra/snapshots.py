from pathlib import Path
from typing import Any, Dict, Mapping, Tuple

import numpy as np

from core.__seedwork.domain.exceptions import ValidationException
from core.__seedwork.infra.files import Metadata, read_csv, write_csv
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import PERIOD, Grid, TangentialGrid


def _grid_metadata(n_x: int, n_z: int | None) -> Dict[str, Any]:
    metadata: Dict[str, Any] = {'n_x': n_x}
    if n_z is not None:
        metadata['n_z'] = n_z
    metadata['period'] = PERIOD
    return metadata


def write_interface_snapshot(path: Path, field: InterfaceField,
                             extra: Mapping[str, Any] | None = None) -> Path:
    metadata = {'kind': 'interface', **_grid_metadata(field.grid.n_x, None), **(extra or {})}
    return write_csv(path, metadata, [], [field.values.tolist()])


def write_bulk_snapshot(path: Path, field: BulkField,
                        extra: Mapping[str, Any] | None = None) -> Path:
    """One row per normal node, ordered from z=-1 to z=1."""
    metadata = {
        'kind': 'bulk',
        **_grid_metadata(field.grid.tangential.n_x, field.grid.normal.n_z),
        **(extra or {}),
    }
    return write_csv(path, metadata, [], field.values.T.tolist())


def read_interface_snapshot(path: Path) -> Tuple[InterfaceField, Metadata]:
    metadata, _, rows = read_csv(path, has_columns=False)
    if metadata.get('kind') != 'interface' or len(rows) != 1:
        raise ValidationException(f'The file {path} is not an interface snapshot')
    grid = TangentialGrid(int(metadata['n_x']))
    return InterfaceField(grid, np.array(rows[0], dtype=float)), metadata


def read_bulk_snapshot(path: Path) -> Tuple[BulkField, Metadata]:
    metadata, _, rows = read_csv(path, has_columns=False)
    if metadata.get('kind') != 'bulk':
        raise ValidationException(f'The file {path} is not a bulk snapshot')
    grid = Grid.create(int(metadata['n_x']), int(metadata['n_z']))
    return BulkField(grid, np.array(rows, dtype=float).T), metadata
