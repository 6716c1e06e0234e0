import logging
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

logger = logging.getLogger(__name__)

DEGENERATE_FLOOR = 1e-20


@dataclass(frozen=True, slots=True)
class DecayFit:
    rate: float
    r_squared: float
    quality: Literal['ok', 'degenerate']
    samples: int

    @property
    def ok(self) -> bool:
        return self.quality == 'ok'


def decay_fit(times: Sequence[float], values: Sequence[float], discard: float = 0.2) -> DecayFit:
    """Least-squares rate K of values ~ exp(-K t) after dropping the leading `discard` fraction."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    start = int(np.floor(discard * times.size))
    times, values = times[start:], values[start:]

    if times.size < 3 or np.any(values <= 0.0) or np.max(values) <= DEGENERATE_FLOOR:
        logger.debug('decay fit refused on %d samples', times.size)
        return DecayFit(float('nan'), float('nan'), 'degenerate', int(times.size))

    logs = np.log(values)
    slope, intercept = np.polyfit(times, logs, 1)
    residual = logs - (slope * times + intercept)
    spread = np.sum((logs - logs.mean()) ** 2)
    r_squared = 1.0 - float(np.sum(residual ** 2) / spread) if spread > 0 else 1.0
    return DecayFit(float(-slope), r_squared, 'ok', int(times.size))
