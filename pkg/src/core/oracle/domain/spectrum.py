"""Spectrum of the flat state linearized in one tangential Fourier mode.

For rho = rho_hat e^{ikx} and u = u_hat(z) e^{ikx} the flattened system reduces, at linear
order about (0, 0), to

    lambda u_hat = u_hat'' - k^2 u_hat          on (-1, 0) and (0, 1)
    u_hat(0) = -k^2 rho_hat,   u_hat'(+-1) = 0
    (1 + eps k^4) lambda rho_hat = u_hat'(0-) - u_hat'(0+)

since the transform coefficients reduce to a = 1, B = 0, c = 0 there. The problem is
discretized with second-order differences on its own uniform mesh and solved densely.
"""
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np
import scipy.linalg

from core.__seedwork.domain.validators import ValidatorRules
from core.oracle.domain.exceptions import EigenSolveException

MIN_DENSE_SIZE = 64


@dataclass(frozen=True, slots=True, eq=False)
class LinearizedMode:
    k: int
    epsilon: float
    matrix_dim: int
    eigenvalues: np.ndarray = field(repr=False)

    @property
    def leading(self) -> complex:
        return complex(self.eigenvalues[0])

    @property
    def energy_decay_rate(self) -> float:
        """Rate of a quadratic functional along the leading mode, 2 |Re lambda_1|."""
        return 2.0 * abs(self.leading.real)

    def is_stable(self) -> bool:
        return bool(np.all(self.eigenvalues.real < 0.0))

    def has_zero_eigenvalue(self, tolerance: float = 1e-8) -> bool:
        return bool(np.min(np.abs(self.eigenvalues)) <= tolerance)


def assemble(k: int, n_z_dense: int, epsilon: float) -> Tuple[np.ndarray, np.ndarray]:
    """Matrices (A, B) of A x = lambda B x with x = (upper u, lower u, rho_hat).

    Each half has M = n_z_dense // 2 unknowns at distances h..1 from the interface.
    """
    half = n_z_dense // 2
    h = 1.0 / half
    k2 = float(k) ** 2
    size = 2 * half + 1
    rho = size - 1
    a = np.zeros((size, size))

    for offset in (0, half):
        for j in range(half):
            row = offset + j
            a[row, row] = -2.0 / h ** 2 - k2
            if j + 1 < half:
                a[row, row + 1] = 1.0 / h ** 2
            else:
                # Neumann wall through the mirrored ghost node
                a[row, row - 1] += 1.0 / h ** 2
            if j > 0:
                a[row, row - 1] += 1.0 / h ** 2
            else:
                a[row, rho] = -k2 / h ** 2

    # one-sided second-order flux on each side of the interface
    for offset in (0, half):
        a[rho, offset] = -4.0 / (2.0 * h)
        a[rho, offset + 1] = 1.0 / (2.0 * h)
    a[rho, rho] = 6.0 * (-k2) / (2.0 * h)

    b = np.eye(size)
    b[rho, rho] = 1.0 + epsilon * float(k) ** 4
    return a, b


def linearized_spectrum(k: int, n_z_dense: int = 256, epsilon: float = 0.0) -> LinearizedMode:
    ValidatorRules.values(k, 'k').required().integer().min_value(0)
    ValidatorRules.values(n_z_dense, 'n_z_dense').required().integer().min_value(MIN_DENSE_SIZE)
    ValidatorRules.values(epsilon, 'epsilon').required().number().finite().non_negative()

    a, b = assemble(k, n_z_dense, epsilon)
    try:
        eigenvalues = scipy.linalg.eig(a, b, right=False)
    except (scipy.linalg.LinAlgError, ValueError) as ex:
        raise EigenSolveException(k, str(ex)) from ex
    if not np.all(np.isfinite(eigenvalues)):
        raise EigenSolveException(k, 'non-finite eigenvalues')

    order = np.argsort(-eigenvalues.real, kind='stable')
    return LinearizedMode(k=int(k), epsilon=float(epsilon), matrix_dim=a.shape[0],
                          eigenvalues=eigenvalues[order])
