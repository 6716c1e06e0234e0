import unittest

import numpy as np

from core.solver.domain.tridiagonal import half_bands, solve_batched, solve_modes


def dense(lower, diag, upper):
    return np.diag(diag) + np.diag(lower[1:], -1) + np.diag(upper[:-1], 1)


class TestTridiagonalUnit(unittest.TestCase):

    def test_batched_solve_matches_dense(self):
        rng = np.random.default_rng(11)
        diag = 4.0 + rng.random((5, 9))
        lower = rng.random((5, 9)) - 0.5
        upper = rng.random((5, 9)) - 0.5
        rhs = rng.standard_normal((5, 9)) + 1j * rng.standard_normal((5, 9))
        solution = solve_batched(lower, diag, upper, rhs)
        for mode in range(5):
            expected = np.linalg.solve(dense(lower[mode], diag[mode], upper[mode]), rhs[mode])
            np.testing.assert_allclose(solution[mode], expected, atol=1e-12)

    def test_half_bands(self):
        lower, diag, upper = half_bands(np.array([0.0, 2.0]), np.ones(4), 0.5, 10.0, 1.0)
        np.testing.assert_allclose(diag[0], 10.0 + 8.0)
        np.testing.assert_allclose(diag[1], 10.0 + 4.0 + 8.0)
        np.testing.assert_allclose(lower[:, 1:3], -4.0)
        np.testing.assert_allclose(lower[:, -1], -8.0)
        np.testing.assert_allclose(upper[:, :3], -4.0)
        self.assertTrue(np.all(lower[:, 0] == 0.0))
        self.assertTrue(np.all(upper[:, -1] == 0.0))

    def test_solve_modes_inverts_the_operator(self):
        n_x, size, h = 16, 6, 0.2
        wavenumbers = np.fft.rfftfreq(n_x, d=1.0 / n_x)
        bands = half_bands(wavenumbers, np.ones(size), h, 5.0, 1.0)
        x = np.arange(n_x) * 2 * np.pi / n_x
        profile = np.linspace(1.0, 0.0, size)
        values = np.cos(3 * x)[:, None] * profile[None, :]
        rhs = np.fft.irfft(
            np.stack([dense(*(band[mode] for band in bands)) @ np.fft.rfft(values, axis=0)[mode]
                      for mode in range(wavenumbers.size)]), n=n_x, axis=0)
        np.testing.assert_allclose(solve_modes(bands, rhs), values, atol=1e-12)
