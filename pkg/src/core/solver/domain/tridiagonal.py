from typing import Tuple

import numpy as np

Bands = Tuple[np.ndarray, np.ndarray, np.ndarray]


def half_bands(wavenumbers: np.ndarray, a_bar: np.ndarray, h: float,
               inv_dt: float, theta: float) -> Bands:
    """Per-mode bands of inv_dt - theta (-k^2 + a_bar d_zz) on one half.

    Unknowns run from the first node off the interface (Dirichlet neighbour eliminated)
    to the wall, where a mirror ghost enforces the Neumann condition.
    """
    k2 = (wavenumbers ** 2)[:, None]
    coupling = theta * a_bar[None, :] / h ** 2
    diag = inv_dt + theta * k2 + 2.0 * coupling
    lower = np.broadcast_to(-coupling, diag.shape).copy()
    upper = lower.copy()
    lower[:, -1] *= 2.0
    lower[:, 0] = 0.0
    upper[:, -1] = 0.0
    return lower, diag, upper


def solve_batched(lower: np.ndarray, diag: np.ndarray, upper: np.ndarray,
                  rhs: np.ndarray) -> np.ndarray:
    """Thomas algorithm over the last axis, vectorized over the leading (mode) axis."""
    size = diag.shape[-1]
    dtype = np.result_type(diag, rhs)
    c_prime = np.empty(diag.shape, dtype=dtype)
    d_prime = np.empty(rhs.shape, dtype=dtype)

    c_prime[:, 0] = upper[:, 0] / diag[:, 0]
    d_prime[:, 0] = rhs[:, 0] / diag[:, 0]
    for j in range(1, size):
        pivot = diag[:, j] - lower[:, j] * c_prime[:, j - 1]
        c_prime[:, j] = upper[:, j] / pivot
        d_prime[:, j] = (rhs[:, j] - lower[:, j] * d_prime[:, j - 1]) / pivot

    solution = np.empty(rhs.shape, dtype=dtype)
    solution[:, -1] = d_prime[:, -1]
    for j in range(size - 2, -1, -1):
        solution[:, j] = d_prime[:, j] - c_prime[:, j] * solution[:, j + 1]
    return solution


def solve_modes(bands: Bands, values: np.ndarray) -> np.ndarray:
    """Apply the inverse of the per-mode operator to real (n_x, M) data."""
    n_x = values.shape[0]
    spectrum = np.fft.rfft(values, axis=0)
    solved = solve_batched(*bands, spectrum)
    return np.fft.irfft(solved, n=n_x, axis=0)
