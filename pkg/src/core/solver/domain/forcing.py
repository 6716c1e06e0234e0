from typing import Protocol, runtime_checkable

import numpy as np


@runtime_checkable
class ForcingHook(Protocol):
    """Extra source terms of the forced system at a given time.

    bulk(t) is added to the temperature equation, dirichlet(t) to the interface
    temperature u(., 0) = kappa(rho) and jump(t) to the right-hand side of the jump relation.
    """

    def bulk(self, t: float) -> np.ndarray:
        ...

    def dirichlet(self, t: float) -> np.ndarray:
        ...

    def jump(self, t: float) -> np.ndarray:
        ...
