import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Literal, Optional, Tuple

from core.__seedwork.domain.value_objects import ValueObject
from core.solver.domain.config import SolverConfig

TemperatureKind = Literal['compatible', 'zero', 'file']


@dataclass(frozen=True, slots=True)
class Mode(ValueObject):
    k: int
    amplitude: float
    phase: Literal['sin', 'cos'] = 'sin'


@dataclass(frozen=True, slots=True)
class RandomModes(ValueObject):
    """Seeded band-limited interface; wavenumbers above n_x/3 stay zero."""
    amplitude: float
    n_modes: int


@dataclass(frozen=True, slots=True)
class InitialCondition(ValueObject):
    modes: Tuple[Mode, ...] = ()
    mean: float = 0.0
    temperature: TemperatureKind = 'compatible'
    heat_bump: float = 0.0
    u_file: Optional[Path] = None
    rho_file: Optional[Path] = None
    resume: Optional[Path] = None
    random: Optional[RandomModes] = None

    @property
    def single_mode(self) -> Optional[Mode]:
        """The only mode of a pure single-mode interface, if that is what this is."""
        if len(self.modes) == 1 and self.random is None and self.heat_bump == 0.0 \
                and self.temperature == 'compatible' and self.rho_file is None and self.resume is None:
            return self.modes[0]
        return None


@dataclass(frozen=True, slots=True)
class ManufacturedSpec(ValueObject):
    u: str
    rho: str
    u_lower: Optional[str] = None


@dataclass(frozen=True, slots=True)
class SweepAxes(ValueObject):
    epsilon: Tuple[float, ...] = ()
    dt: Tuple[float, ...] = ()
    n_x: Tuple[int, ...] = ()
    n_z: Tuple[int, ...] = ()
    max_jobs: Optional[int] = None

    AXES = ('epsilon', 'dt', 'n_x', 'n_z')

    @property
    def size(self) -> int:
        size = 1
        for axis in self.AXES:
            size *= max(1, len(getattr(self, axis)))
        return size

    def points(self, base: SolverConfig) -> List[SolverConfig]:
        """Cartesian product in axis order; an empty axis keeps the base value."""
        values = [getattr(self, axis) or (getattr(base, axis),) for axis in self.AXES]
        return [base.with_changes(**dict(zip(self.AXES, point)))
                for point in itertools.product(*values)]


@dataclass(frozen=True, slots=True)
class OutputSpec(ValueObject):
    directory: Optional[Path] = None
    checkpoint_every: int = 0


@dataclass(frozen=True, slots=True)
class Scenario(ValueObject):
    name: str
    t_end: float
    solver: SolverConfig = field(default_factory=SolverConfig)
    initial: InitialCondition = field(default_factory=InitialCondition)
    epsilons: Tuple[float, ...] = ()
    seed: int = 0
    sweep: Optional[SweepAxes] = None
    output: OutputSpec = field(default_factory=OutputSpec)
    manufactured: Optional[ManufacturedSpec] = None

    @staticmethod
    def fake():
        from .entities_faker_builder import ScenarioFakerBuilder  # pylint: disable=import-outside-toplevel
        return ScenarioFakerBuilder
