import csv
import os
import shutil
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

Metadata = Dict[str, str]


def format_value(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    try:
        return repr(float(value))
    except (TypeError, ValueError):
        return str(value)


@contextmanager
def atomic_directory(target: Path) -> Iterator[Path]:
    """Yield a staging directory that replaces `target` only if the block succeeds."""
    target = Path(target)
    target.parent.mkdir(parents=True, exist_ok=True)
    staging = Path(tempfile.mkdtemp(prefix=f'.{target.name}.', dir=target.parent))
    try:
        yield staging
    except BaseException:
        shutil.rmtree(staging, ignore_errors=True)
        raise

    if target.exists():
        backup = target.with_name(f'.{target.name}.replaced-{os.getpid()}')
        os.replace(target, backup)
        os.replace(staging, target)
        shutil.rmtree(backup, ignore_errors=True)
    else:
        os.replace(staging, target)


def write_csv(
    path: Path,
    metadata: Mapping[str, Any],
    columns: Sequence[str],
    rows: Iterable[Sequence[Any]],
) -> Path:
    path = Path(path)
    with path.open('w', newline='', encoding='utf-8') as file:
        for key, value in metadata.items():
            file.write(f'# {key}={format_value(value)}\n')
        writer = csv.writer(file, lineterminator='\n')
        if columns:
            writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(value) for value in row])
    return path


def read_csv(path: Path, has_columns: bool = True) -> Tuple[Metadata, List[str], List[List[str]]]:
    metadata: Metadata = {}
    body: List[str] = []
    with Path(path).open('r', encoding='utf-8') as file:
        for line in file:
            if line.startswith('#'):
                key, _, value = line[1:].strip().partition('=')
                metadata[key.strip()] = value.strip()
            elif line.strip():
                body.append(line)
    records = list(csv.reader(body))
    if has_columns and records:
        return metadata, records[0], records[1:]
    return metadata, [], records
