from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from core.__seedwork.infra.files import read_csv, write_csv
from core.energy.domain.entities import COLUMNS, EnergyReport
from core.energy.domain.repositories import EnergyReportRepository


@dataclass(slots=True)
class EnergyReportCsvRepository(EnergyReportRepository):
    """Energy time series backed by one CSV file, rewritten on every change.

    `metadata` becomes the `#` header; an existing file is loaded on construction.
    """
    path: Path
    metadata: Dict[str, Any] = field(default_factory=dict)
    items: List[EnergyReport] = field(default_factory=list, init=False)

    def __post_init__(self):
        self.path = Path(self.path)
        if self.path.exists():
            stored, columns, rows = read_csv(self.path)
            self.metadata = {**stored, **self.metadata}
            self.items = [EnergyReport.from_row(columns, row) for row in rows]

    def insert(self, entity: EnergyReport) -> None:
        self.items.append(entity)
        self._flush()

    def bulk_insert(self, entities: List[EnergyReport]) -> None:
        self.items.extend(entities)
        self._flush()

    def find_all(self) -> List[EnergyReport]:
        return list(self.items)

    def clear(self) -> None:
        self.items = []
        self._flush()

    def latest(self) -> Optional[EnergyReport]:
        return self.items[-1] if self.items else None

    def _flush(self) -> None:
        write_csv(self.path, self.metadata, COLUMNS, (report.row() for report in self.items))
