import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from numbers import Integral, Real
from typing import Any, Dict, Generic, List, Type, TypeVar

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from .exceptions import ValidationException


@dataclass(frozen=True, slots=True)
class ValidatorRules:
    value: Any
    prop: str

    @staticmethod
    def values(value, prop) -> 'ValidatorRules':
        return ValidatorRules(value, prop)

    def required(self) -> 'ValidatorRules':
        if self.value is None or self.value == "":
            raise ValidationException(f'The {self.prop} is required')
        return self

    def integer(self) -> 'ValidatorRules':
        if self.value is not None and (
                isinstance(self.value, bool) or not isinstance(self.value, Integral)):
            raise ValidationException(f'The {self.prop} must be an integer')
        return self

    def number(self) -> 'ValidatorRules':
        if self.value is not None and (
                isinstance(self.value, bool) or not isinstance(self.value, Real)):
            raise ValidationException(f'The {self.prop} must be a number')
        return self

    def finite(self) -> 'ValidatorRules':
        if self.value is not None and not math.isfinite(self.value):
            raise ValidationException(f'The {self.prop} must be finite')
        return self

    def positive(self) -> 'ValidatorRules':
        if self.value is not None and self.value <= 0:
            raise ValidationException(f'The {self.prop} must be positive')
        return self

    def non_negative(self) -> 'ValidatorRules':
        if self.value is not None and self.value < 0:
            raise ValidationException(f'The {self.prop} must not be negative')
        return self

    def min_value(self, minimum) -> 'ValidatorRules':
        if self.value is not None and self.value < minimum:
            raise ValidationException(
                f'The {self.prop} must be greater than or equal to {minimum}')
        return self

    def even(self) -> 'ValidatorRules':
        if self.value is not None and self.value % 2 != 0:
            raise ValidationException(f'The {self.prop} must be even')
        return self

    def odd(self) -> 'ValidatorRules':
        if self.value is not None and self.value % 2 != 1:
            raise ValidationException(f'The {self.prop} must be odd')
        return self

    def open_interval(self, lower, upper) -> 'ValidatorRules':
        if self.value is not None and not lower < self.value < upper:
            raise ValidationException(
                f'The {self.prop} must lie strictly between {lower} and {upper}')
        return self


ErrorFields = Dict[str, List[str]]

PropsValidated = TypeVar('PropsValidated')


@dataclass(slots=True)
class ValidatorFieldsInterface(ABC, Generic[PropsValidated]):
    errors: ErrorFields = None
    validated_data: PropsValidated = None

    @abstractmethod
    def validate(self, data: Any) -> bool:
        raise NotImplementedError()


class PydanticValidator(ValidatorFieldsInterface[PropsValidated], ABC):  # pylint: disable=too-few-public-methods
    rules: Type[BaseModel]

    def validate(self, data: Dict[str, Any]) -> bool:
        try:
            self.validated_data = self.rules.model_validate(data)
            return True
        except PydanticValidationError as ex:
            self.errors = {}
            for error in ex.errors():
                field = '.'.join(str(part) for part in error['loc']) or '__root__'
                self.errors.setdefault(field, []).append(error['msg'])
            return False
