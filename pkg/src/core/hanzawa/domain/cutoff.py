from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import ClassVar, Dict, Tuple

import numpy as np

from core.__seedwork.domain.exceptions import ConfigValidationException, ValidationException
from core.__seedwork.domain.utils import Either
from core.__seedwork.domain.validators import ValidatorRules
from core.__seedwork.domain.value_objects import ValueObject

CutoffValues = Tuple[np.ndarray, np.ndarray, np.ndarray]


class TransitionProfile(ABC):
    """Monotone S(s) on [0, 1] with S(0)=0, S(1)=1 and flat ends."""

    @abstractmethod
    def evaluate(self, s: np.ndarray) -> CutoffValues:
        raise NotImplementedError()

    @property
    @abstractmethod
    def max_slope(self) -> float:
        raise NotImplementedError()


class QuinticProfile(TransitionProfile):
    def evaluate(self, s: np.ndarray) -> CutoffValues:
        value = s ** 3 * (10.0 - 15.0 * s + 6.0 * s ** 2)
        first = 30.0 * s ** 2 * (1.0 - s) ** 2
        second = 60.0 * s * (1.0 - s) * (1.0 - 2.0 * s)
        return value, first, second

    @property
    def max_slope(self) -> float:
        return 1.875


class SmoothProfile(TransitionProfile):
    """C-infinity transition built from exp(-1/s)."""

    @staticmethod
    def _bump(s: np.ndarray) -> CutoffValues:
        positive = s > 0
        safe = np.where(positive, s, 1.0)
        value = np.where(positive, np.exp(-1.0 / safe), 0.0)
        first = np.where(positive, value / safe ** 2, 0.0)
        second = np.where(positive, value * (1.0 - 2.0 * safe) / safe ** 4, 0.0)
        return value, first, second

    def evaluate(self, s: np.ndarray) -> CutoffValues:
        left, left_1, left_2 = self._bump(s)
        right, right_1, right_2 = self._bump(1.0 - s)
        # d/ds of right(1-s) flips the sign of the first derivative
        right_1 = -right_1
        total = left + right
        total_1 = left_1 + right_1
        numerator_1 = left_1 * right - left * right_1
        numerator_2 = left_2 * right - left * right_2
        value = left / total
        first = numerator_1 / total ** 2
        second = numerator_2 / total ** 2 - 2.0 * numerator_1 * total_1 / total ** 3
        return value, first, second

    @property
    def max_slope(self) -> float:
        return 2.0


@dataclass(frozen=True, slots=True)
class Cutoff(ValueObject):
    alpha: float
    profile: str = 'quintic'

    PROFILES: ClassVar[Dict[str, TransitionProfile]] = {
        'quintic': QuinticProfile(),
        'smooth': SmoothProfile(),
    }

    def __post_init__(self):
        errors = ConfigValidationException()
        try:
            ValidatorRules.values(self.alpha, 'alpha').required().number().finite() \
                .open_interval(0.0, 1.0 / 3.0)
        except ValidationException as ex:
            errors.set_from_error('alpha', ex)
        if self.profile not in self.PROFILES:
            errors.error['profile'] = [
                f'The profile must be one of {", ".join(sorted(self.PROFILES))}']
        if errors.error:
            raise errors

    @staticmethod
    def create(alpha: float, profile: str = 'quintic') -> Either['Cutoff', Exception]:
        return Either.safe(lambda: Cutoff(alpha, profile))

    @property
    def width(self) -> float:
        return 1.0 - 2.0 * self.alpha

    @property
    def max_slope(self) -> float:
        """Sup of |phi'|."""
        return self.PROFILES[self.profile].max_slope / self.width

    def evaluate(self, z: np.ndarray) -> CutoffValues:
        z = np.asarray(z, dtype=float)
        distance = np.abs(z)
        s = np.clip((distance - self.alpha) / self.width, 0.0, 1.0)
        transition, d_transition, dd_transition = self.PROFILES[self.profile].evaluate(s)
        inside = (distance > self.alpha) & (distance < 1.0 - self.alpha)

        phi = np.where(distance <= self.alpha, 1.0, np.where(inside, 1.0 - transition, 0.0))
        dphi = np.where(inside, -np.sign(z) * d_transition / self.width, 0.0)
        ddphi = np.where(inside, -dd_transition / self.width ** 2, 0.0)
        return phi, dphi, ddphi


def cutoff_eval(z, alpha: float, profile: str = 'quintic') -> CutoffValues:
    return Cutoff(alpha, profile).evaluate(z)
