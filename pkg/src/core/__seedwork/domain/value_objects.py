import json
from abc import ABC
from dataclasses import dataclass, fields
from typing import Any

import numpy as np


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return f'array{value.shape}'
    if isinstance(value, ValueObject):
        return str(value)
    return value


@dataclass(frozen=True, slots=True)
class ValueObject(ABC):
    def __str__(self) -> str:
        fields_name = [field.name for field in fields(self)]
        if len(fields_name) == 1:
            return str(_jsonable(getattr(self, fields_name[0])))
        return json.dumps({
            field_name: _jsonable(getattr(self, field_name)) for field_name in fields_name
        }, default=str)
