from pathlib import Path
from typing import TYPE_CHECKING, Union

from core.__seedwork.domain.exceptions import BaseValidationException

if TYPE_CHECKING:
    from core.__seedwork.domain.validators import ErrorFields


class ScenarioLoadException(BaseValidationException):
    def __init__(self, path: Union[Path, str], error: 'ErrorFields' = None) -> None:
        self.path = Path(path)
        super().__init__(error)

    def __str__(self) -> str:
        return f'{self.path}: {self.error}'


class SweepCapExceededException(Exception):
    def __init__(self, jobs: int, cap: int) -> None:
        self.jobs = jobs
        self.cap = cap
        super().__init__(f'The sweep has {jobs} jobs, more than the cap of {cap}')
