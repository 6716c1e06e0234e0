import unittest

from core.__seedwork.domain.exceptions import ValidationException
from core.oracle.application.use_cases import ComputeSpectrumUseCase


class TestComputeSpectrumUseCaseUnit(unittest.TestCase):

    def setUp(self):
        self.use_case = ComputeSpectrumUseCase()

    def test_execute(self):
        output = self.use_case.execute(
            ComputeSpectrumUseCase.Input(ks=(0, 1, 2), epsilons=(0.0, 1e-2), n_z_dense=64))
        self.assertEqual(len(output.modes), 6)
        self.assertEqual([(mode.k, mode.epsilon) for mode in output.modes][:2], [(0, 0.0), (0, 1e-2)])
        self.assertTrue(output.mode(0).has_zero_eigenvalue())
        self.assertLess(output.mode(2, 1e-2).leading.real, 0.0)

    def test_empty_range(self):
        with self.assertRaises(ValidationException):
            self.use_case.execute(ComputeSpectrumUseCase.Input(ks=()))
