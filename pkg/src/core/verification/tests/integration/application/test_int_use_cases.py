import unittest

import pytest

from core.solver.domain.config import SolverConfig
from core.verification.application.use_cases import VerifySuiteUseCase


class TestVerifySuiteUseCaseInt(unittest.TestCase):

    def setUp(self):
        self.use_case = VerifySuiteUseCase()
        self.cfg = SolverConfig(n_x=16, n_z=17, dt=1e-2)

    def test_identity_at_steady_state(self):
        output = self.use_case.execute(VerifySuiteUseCase.Input(
            suite='identity', cfg=self.cfg, t_end=0.06, amplitude=0.0))
        self.assertEqual(dict(output.result.errors), {'coarse residual': 0.0, 'fine residual': 0.0})
        self.assertTrue(output.passed)

    def test_conservation_reports_both_levels(self):
        output = self.use_case.execute(VerifySuiteUseCase.Input(
            suite='conservation', cfg=self.cfg, t_end=0.05))
        names = [check.name for check in output.result.checks]
        self.assertEqual(names, ['conservation order', 'max conservation residual'])
        self.assertEqual(len(output.result.errors), 2)


@pytest.mark.group('acceptance')
class TestVerifySuiteAcceptance(unittest.TestCase):

    def test_conservation(self):
        output = VerifySuiteUseCase().execute(VerifySuiteUseCase.Input(suite='conservation'))
        self.assertTrue(output.passed, output.result.lines())

    def test_identity(self):
        output = VerifySuiteUseCase().execute(VerifySuiteUseCase.Input(
            suite='identity', cfg=SolverConfig(n_x=32, n_z=33, dt=1e-2, epsilon=1e-4), t_end=0.5))
        self.assertTrue(output.passed, output.result.lines())

    def test_mms(self):
        output = VerifySuiteUseCase().execute(VerifySuiteUseCase.Input(
            suite='mms', cfg=SolverConfig(n_x=32, n_z=17, dt=1e-2), t_end=0.5))
        self.assertTrue(output.passed, output.result.lines())

    def test_norms(self):
        output = VerifySuiteUseCase().execute(VerifySuiteUseCase.Input(suite='norms'))
        self.assertTrue(output.passed, output.result.lines())

    def test_norms_on_a_hundred_interfaces(self):
        output = VerifySuiteUseCase().execute(VerifySuiteUseCase.Input(suite='norms', samples=100, seed=7))
        self.assertTrue(output.passed, output.result.lines())
