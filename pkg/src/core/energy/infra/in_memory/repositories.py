from typing import Optional

from core.__seedwork.domain.repositories import InMemoryRepository
from core.energy.domain.entities import EnergyReport
from core.energy.domain.repositories import EnergyReportRepository


class EnergyReportInMemoryRepository(EnergyReportRepository, InMemoryRepository):

    def latest(self) -> Optional[EnergyReport]:
        return self.items[-1] if self.items else None
