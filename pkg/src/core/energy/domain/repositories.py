from abc import ABC, abstractmethod
from typing import Optional

from core.__seedwork.domain.repositories import RepositoryInterface
from core.energy.domain.entities import EnergyReport


class EnergyReportRepository(RepositoryInterface[EnergyReport], ABC):

    @abstractmethod
    def latest(self) -> Optional[EnergyReport]:
        raise NotImplementedError()
