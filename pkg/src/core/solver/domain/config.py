import hashlib
import json
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.__seedwork.domain.exceptions import ConfigValidationException
from core.__seedwork.domain.validators import PydanticValidator
from core.fields.domain.grids import Grid
from core.hanzawa.domain.cutoff import Cutoff

TIME_SCHEMES = {'backward_euler': 1.0, 'crank_nicolson': 0.5}


class SolverConfigRules(BaseModel):
    model_config = ConfigDict(extra='forbid', strict=True)

    epsilon: float = Field(ge=0.0, allow_inf_nan=False)
    dt: float = Field(gt=0.0, allow_inf_nan=False)
    n_x: int = Field(ge=8)
    n_z: int = Field(ge=7)
    fp_tol: float = Field(gt=0.0, allow_inf_nan=False)
    fp_max_iter: int = Field(ge=1)
    lin_tol: float = Field(gt=0.0, lt=1.0, allow_inf_nan=False)
    lin_max_iter: int = Field(ge=1)
    alpha: float = Field(gt=0.0, lt=1.0 / 3.0)
    k_diag: int = Field(ge=0, le=3)
    time_scheme: Literal['backward_euler', 'crank_nicolson']
    cutoff_profile: Literal['quintic', 'smooth']
    relaxation: Literal['spectral', 'none']
    max_dt_halvings: int = Field(ge=0, le=10)
    consistency_tol: float = Field(gt=0.0, allow_inf_nan=False)
    identity_check: bool

    @field_validator('n_x')
    @classmethod
    def n_x_even(cls, value: int) -> int:
        if value % 2:
            raise ValueError('must be even')
        return value

    @field_validator('n_z')
    @classmethod
    def n_z_odd(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError('must be odd')
        return value


class SolverConfigValidator(PydanticValidator[SolverConfigRules]):  # pylint: disable=too-few-public-methods
    rules = SolverConfigRules


class SolverConfigValidatorFactory:  # pylint: disable=too-few-public-methods
    @staticmethod
    def create() -> SolverConfigValidator:
        return SolverConfigValidator()


@dataclass(frozen=True, slots=True)
class SolverConfig:
    epsilon: float = 0.0
    dt: float = 1e-3
    n_x: int = 64
    n_z: int = 65
    fp_tol: float = 1e-10
    fp_max_iter: int = 50
    lin_tol: float = 1e-10
    lin_max_iter: int = 200
    alpha: float = 0.25
    k_diag: int = 1
    time_scheme: str = 'backward_euler'
    cutoff_profile: str = 'quintic'
    relaxation: str = 'spectral'
    max_dt_halvings: int = 3
    consistency_tol: float = 1e-8
    identity_check: bool = True

    def __post_init__(self):
        self.validate()

    def validate(self):
        validator = SolverConfigValidatorFactory.create()
        is_valid = validator.validate(self.to_dict())
        if not is_valid:
            raise ConfigValidationException(validator.errors)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def with_changes(self, **changes) -> 'SolverConfig':
        return replace(self, **changes)

    @property
    def theta(self) -> float:
        return TIME_SCHEMES[self.time_scheme]

    @property
    def grid(self) -> Grid:
        return Grid.create(self.n_x, self.n_z)

    @property
    def cutoff(self) -> Cutoff:
        return Cutoff(self.alpha, self.cutoff_profile)

    @property
    def config_hash(self) -> str:
        return config_hash(self.to_dict())


def config_hash(data: Dict[str, Any]) -> str:
    """First 16 hex digits of the SHA-256 of the canonical JSON form."""
    canonical = json.dumps(data, sort_keys=True, separators=(',', ':'), default=str)
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()[:16]
