import logging
from dataclasses import dataclass, field

from core.__seedwork.application.use_cases import UseCase
from core.__seedwork.domain.exceptions import ValidationException
from core.solver.domain.config import SolverConfig
from core.verification.application.studies import STUDIES, StudySettings
from core.verification.domain.entities import SUITES, SuiteResult

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class VerifySuiteUseCase(UseCase):

    def execute(self, input_param: 'Input') -> 'Output':
        if input_param.suite not in SUITES:
            raise ValidationException(
                f'The suite {input_param.suite!r} is unknown; choose one of {", ".join(SUITES)}')
        settings = StudySettings(input_param.cfg, input_param.t_end, input_param.amplitude,
                                 input_param.samples, input_param.seed)
        logger.info('verify %s: base config %s', input_param.suite, input_param.cfg.config_hash)
        result = STUDIES[input_param.suite](settings)
        for line in result.lines():
            logger.info(line)
        return self.Output(result=result)

    @dataclass(slots=True, frozen=True)
    class Input:
        suite: str
        cfg: SolverConfig = field(default_factory=lambda: SolverConfig(n_x=32, n_z=65, dt=1e-3))
        t_end: float = 0.1
        amplitude: float = 1e-3
        samples: int = 100
        seed: int = 0

    @dataclass(slots=True, frozen=True)
    class Output:
        result: SuiteResult

        @property
        def passed(self) -> bool:
            return self.result.passed
