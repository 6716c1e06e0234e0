import logging
from dataclasses import dataclass
from typing import Tuple

from core.__seedwork.application.use_cases import UseCase
from core.__seedwork.domain.exceptions import ValidationException
from core.oracle.domain.spectrum import LinearizedMode, linearized_spectrum

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class ComputeSpectrumUseCase(UseCase):

    def execute(self, input_param: 'Input') -> 'Output':
        if not input_param.ks:
            raise ValidationException('The k range must not be empty')
        epsilons = input_param.epsilons or (0.0,)
        logger.info('computing %d spectra on %d dense nodes',
                    len(input_param.ks) * len(epsilons), input_param.n_z_dense)
        modes = tuple(
            linearized_spectrum(k, input_param.n_z_dense, epsilon)
            for k in input_param.ks for epsilon in epsilons
        )
        return self.Output(modes=modes)

    @dataclass(slots=True, frozen=True)
    class Input:
        ks: Tuple[int, ...]
        epsilons: Tuple[float, ...] = (0.0,)
        n_z_dense: int = 256

    @dataclass(slots=True, frozen=True)
    class Output:
        modes: Tuple[LinearizedMode, ...]

        def mode(self, k: int, epsilon: float = 0.0) -> LinearizedMode:
            return next(mode for mode in self.modes if mode.k == k and mode.epsilon == epsilon)
