from dataclasses import dataclass, field
from typing import Any, Callable, Generic, List, Tuple, TypeVar

from faker import Faker

from core.scenario.domain.entities import InitialCondition, Mode, Scenario
from core.solver.domain.config import SolverConfig

T = TypeVar('T')

PropOrFactory = T | Callable[[int], T]

_faker = Faker()
Faker.seed(0)


@dataclass
class ScenarioFakerBuilder(Generic[T]):
    count_objs: int = 1

    __name: PropOrFactory[str] = field(
        default=lambda self, index: f'{_faker.slug()}-{index}', init=False
    )
    __t_end: PropOrFactory[float] = field(default=0.05, init=False)
    __solver: PropOrFactory[SolverConfig] = field(
        default=lambda self, index: SolverConfig(n_x=16, n_z=17, dt=1e-2, k_diag=0, identity_check=False),
        init=False,
    )
    __initial: PropOrFactory[InitialCondition] = field(
        default=lambda self, index: InitialCondition(modes=(Mode(1, 1e-3),)), init=False
    )
    __epsilons: PropOrFactory[Tuple[float, ...]] = field(default=(), init=False)
    __seed: PropOrFactory[int] = field(default=0, init=False)

    @staticmethod
    def a_scenario() -> 'ScenarioFakerBuilder[Scenario]':
        return ScenarioFakerBuilder[Scenario]()

    @staticmethod
    def the_scenarios(count: int) -> 'ScenarioFakerBuilder[List[Scenario]]':
        return ScenarioFakerBuilder[List[Scenario]](count)

    def with_name(self, value: PropOrFactory[str]):
        self.__name = value
        return self

    def with_t_end(self, value: PropOrFactory[float]):
        self.__t_end = value
        return self

    def with_solver(self, value: PropOrFactory[SolverConfig]):
        self.__solver = value
        return self

    def with_initial(self, value: PropOrFactory[InitialCondition]):
        self.__initial = value
        return self

    def with_epsilons(self, value: PropOrFactory[Tuple[float, ...]]):
        self.__epsilons = value
        return self

    def with_seed(self, value: PropOrFactory[int]):
        self.__seed = value
        return self

    def flat(self):
        self.__initial = InitialCondition(temperature='zero')
        return self

    def build(self) -> T:
        scenarios = [
            Scenario(
                name=self.__call_factory(self.__name, index),
                t_end=self.__call_factory(self.__t_end, index),
                solver=self.__call_factory(self.__solver, index),
                initial=self.__call_factory(self.__initial, index),
                epsilons=self.__call_factory(self.__epsilons, index),
                seed=self.__call_factory(self.__seed, index),
            )
            for index in range(self.count_objs)
        ]
        return scenarios if self.count_objs > 1 else scenarios[0]

    @property
    def name(self) -> str:
        return self.__call_factory(self.__name, 0)

    @property
    def solver(self) -> SolverConfig:
        return self.__call_factory(self.__solver, 0)

    def __call_factory(self, value: PropOrFactory[Any], index: int) -> Any:
        return value(index) if callable(value) else value
