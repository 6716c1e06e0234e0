import unittest

from core.__seedwork.application.use_cases import UseCase
from core.__seedwork.domain.exceptions import ValidationException
from core.solver.domain.config import SolverConfig
from core.verification.application.use_cases import VerifySuiteUseCase


class TestVerifySuiteUseCaseUnit(unittest.TestCase):

    def setUp(self):
        self.use_case = VerifySuiteUseCase()
        self.cfg = SolverConfig(n_x=16, n_z=17, dt=1e-2)

    def test_if_instance_is_a_use_case(self):
        self.assertIsInstance(self.use_case, UseCase)

    def test_unknown_suite(self):
        with self.assertRaises(ValidationException) as assert_error:
            self.use_case.execute(VerifySuiteUseCase.Input(suite='energy'))
        self.assertIn("'energy' is unknown", str(assert_error.exception))

    def test_norms_draws_a_hundred_pairs_by_default(self):
        self.assertEqual(VerifySuiteUseCase.Input(suite='norms').samples, 100)

    def test_norms(self):
        output = self.use_case.execute(VerifySuiteUseCase.Input(
            suite='norms', cfg=self.cfg, samples=3))
        self.assertEqual(output.result.suite, 'norms')
        self.assertEqual(len(output.result.checks), 6)
        self.assertTrue(output.passed, output.result.lines())
