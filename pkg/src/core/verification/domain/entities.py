import math
from dataclasses import dataclass
from typing import List, Literal, Tuple

from core.__seedwork.domain.value_objects import ValueObject

SUITES = ('identity', 'mms', 'conservation', 'norms')


@dataclass(frozen=True, slots=True)
class Check(ValueObject):
    name: str
    value: float
    threshold: float
    comparison: Literal['>=', '<='] = '>='

    @property
    def passed(self) -> bool:
        if math.isnan(self.value):
            return False
        if self.comparison == '>=':
            return self.value >= self.threshold
        return self.value <= self.threshold

    def line(self) -> str:
        verdict = 'PASS' if self.passed else 'FAIL'
        return f'{self.name}: {self.value:.6g} ({self.comparison} {self.threshold:.6g}) {verdict}'


@dataclass(frozen=True, slots=True)
class SuiteResult(ValueObject):
    suite: str
    checks: Tuple[Check, ...]
    errors: Tuple[Tuple[str, float], ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def lines(self) -> List[str]:
        lines = [f'suite {self.suite}']
        lines += [f'  {name} = {value:.6e}' for name, value in self.errors]
        lines += [f'  {note}' for note in self.notes]
        lines += [f'  {check.line()}' for check in self.checks]
        lines.append(f'suite {self.suite}: ' + ('PASS' if self.passed else 'FAIL'))
        return lines
