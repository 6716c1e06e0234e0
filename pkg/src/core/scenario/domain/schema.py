from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.__seedwork.domain.validators import PydanticValidator
from core.scenario.domain.entities import (
    InitialCondition,
    ManufacturedSpec,
    Mode,
    OutputSpec,
    RandomModes,
    Scenario,
    SweepAxes,
)
from core.solver.domain.config import SolverConfig


class _Section(BaseModel):
    model_config = ConfigDict(extra='forbid')


class ScenarioSection(_Section):
    name: str = Field(min_length=1)
    t_end: float = Field(ge=0.0, allow_inf_nan=False)
    epsilons: List[float] = Field(default_factory=list)
    seed: int = 0


class ModeSchema(_Section):
    k: int = Field(ge=1)
    amplitude: float = Field(allow_inf_nan=False)
    phase: Literal['sin', 'cos'] = 'sin'


class RandomSchema(_Section):
    amplitude: float = Field(gt=0.0, allow_inf_nan=False)
    n_modes: int = Field(ge=1)


class InitialSection(_Section):
    modes: List[ModeSchema] = Field(default_factory=list)
    mean: float = Field(0.0, allow_inf_nan=False)
    temperature: Literal['compatible', 'zero', 'file'] = 'compatible'
    heat_bump: float = Field(0.0, allow_inf_nan=False)
    u_file: Optional[str] = None
    rho_file: Optional[str] = None
    resume: Optional[str] = None
    random: Optional[RandomSchema] = None

    @model_validator(mode='after')
    def file_temperature_needs_a_file(self) -> 'InitialSection':
        if self.temperature == 'file' and self.u_file is None:
            raise ValueError('temperature = "file" requires u_file')
        return self


class SolverSection(_Section):
    """Every SolverConfig field; omitted ones keep the SolverConfig default."""
    epsilon: Optional[float] = None
    dt: Optional[float] = None
    n_x: Optional[int] = None
    n_z: Optional[int] = None
    fp_tol: Optional[float] = None
    fp_max_iter: Optional[int] = None
    lin_tol: Optional[float] = None
    lin_max_iter: Optional[int] = None
    alpha: Optional[float] = None
    k_diag: Optional[int] = None
    time_scheme: Optional[str] = None
    cutoff_profile: Optional[str] = None
    relaxation: Optional[str] = None
    max_dt_halvings: Optional[int] = None
    consistency_tol: Optional[float] = None
    identity_check: Optional[bool] = None


class SweepSection(_Section):
    epsilon: Optional[List[float]] = Field(None, min_length=1)
    dt: Optional[List[float]] = Field(None, min_length=1)
    n_x: Optional[List[int]] = Field(None, min_length=1)
    n_z: Optional[List[int]] = Field(None, min_length=1)
    max_jobs: Optional[int] = Field(None, ge=1)

    @model_validator(mode='after')
    def at_least_one_axis(self) -> 'SweepSection':
        if all(getattr(self, axis) is None for axis in SweepAxes.AXES):
            raise ValueError('a sweep needs at least one axis')
        return self


class OutputSection(_Section):
    directory: Optional[str] = None
    checkpoint_every: int = Field(0, ge=0)


class ManufacturedSection(_Section):
    u: str = Field(min_length=1)
    rho: str = Field(min_length=1)
    u_lower: Optional[str] = None


class ScenarioSchema(_Section):
    scenario: ScenarioSection
    initial: InitialSection = Field(default_factory=InitialSection)
    solver: SolverSection = Field(default_factory=SolverSection)
    sweep: Optional[SweepSection] = None
    output: OutputSection = Field(default_factory=OutputSection)
    manufactured: Optional[ManufacturedSection] = None

    def to_scenario(self, base_dir: Path = Path('.')) -> Scenario:
        """Build the domain scenario; relative paths resolve against `base_dir`."""
        def path(value: Optional[str]) -> Optional[Path]:
            if value is None:
                return None
            candidate = Path(value)
            return candidate if candidate.is_absolute() else base_dir / candidate

        initial = self.initial
        sweep = None
        if self.sweep is not None:
            sweep = SweepAxes(
                **{axis: tuple(getattr(self.sweep, axis) or ()) for axis in SweepAxes.AXES},
                max_jobs=self.sweep.max_jobs,
            )
        return Scenario(
            name=self.scenario.name,
            t_end=self.scenario.t_end,
            epsilons=tuple(self.scenario.epsilons),
            seed=self.scenario.seed,
            solver=SolverConfig(**self.solver.model_dump(exclude_none=True)),
            initial=InitialCondition(
                modes=tuple(Mode(**mode.model_dump()) for mode in initial.modes),
                mean=initial.mean,
                temperature=initial.temperature,
                heat_bump=initial.heat_bump,
                u_file=path(initial.u_file),
                rho_file=path(initial.rho_file),
                resume=path(initial.resume),
                random=RandomModes(**initial.random.model_dump()) if initial.random else None,
            ),
            sweep=sweep,
            output=OutputSpec(directory=path(self.output.directory),
                              checkpoint_every=self.output.checkpoint_every),
            manufactured=ManufacturedSpec(**self.manufactured.model_dump()) if self.manufactured else None,
        )


class ScenarioValidator(PydanticValidator):  # pylint: disable=too-few-public-methods
    rules = ScenarioSchema


class ScenarioValidatorFactory:  # pylint: disable=too-few-public-methods
    @staticmethod
    def create() -> ScenarioValidator:
        return ScenarioValidator()
