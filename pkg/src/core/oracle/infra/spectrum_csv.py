from pathlib import Path
from typing import Any, Mapping, Sequence

from core.__seedwork.infra.files import write_csv
from core.oracle.domain.spectrum import LinearizedMode

DEFAULT_EIGENVALUES = 4


def spectrum_columns(count: int) -> list:
    columns = ['k', 'epsilon']
    for index in range(1, count + 1):
        columns += [f're_{index}', f'im_{index}']
    return columns


def write_spectrum_csv(path: Path, modes: Sequence[LinearizedMode],
                       metadata: Mapping[str, Any] = None,
                       count: int = DEFAULT_EIGENVALUES) -> Path:
    """One row per (k, epsilon) with the `count` eigenvalues of largest real part."""
    rows = []
    for mode in modes:
        row = [mode.k, mode.epsilon]
        for value in mode.eigenvalues[:count]:
            row += [float(value.real), float(value.imag)]
        rows.append(row)
    return write_csv(path, metadata or {}, spectrum_columns(count), rows)
