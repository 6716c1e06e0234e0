import unittest
from dataclasses import replace

import numpy as np

from core.energy.domain.diagnostics import EnergyDiagnostics
from core.energy.domain.entities import EnergyReport
from core.fields.domain.entities import BulkField, InterfaceField
from core.hanzawa.domain.cutoff import Cutoff
from core.solver.domain.config import SolverConfig
from core.solver.domain.state import State


class TestEnergyDiagnosticsUnit(unittest.TestCase):

    def setUp(self):
        self.cfg = SolverConfig(n_x=16, n_z=17, epsilon=1e-2, k_diag=1)
        self.grid = self.cfg.grid
        self.flat = State.initial(BulkField.zeros(self.grid),
                                  InterfaceField.constant(self.grid.tangential, 0.1))

    def test_for_config(self):
        diagnostics = EnergyDiagnostics.for_config(self.cfg)
        self.assertEqual(diagnostics.epsilon, 1e-2)
        self.assertEqual(diagnostics.k_diag, 1)
        self.assertEqual(diagnostics.cutoff, Cutoff(0.25, 'quintic'))
        self.assertEqual(diagnostics.history.maxlen, 3)

    def test_flat_states(self):
        diagnostics = EnergyDiagnostics.for_config(self.cfg)
        reports = [diagnostics(replace(self.flat, t=t)) for t in (0.0, 0.1, 0.2)]
        for report in reports:
            self.assertIsInstance(report, EnergyReport)
            self.assertLess(report.E, 1e-20)
            self.assertLess(report.E_eps, 1e-20)
            self.assertLess(report.cons_residual, 1e-14)
            self.assertLess(report.rho_dev_L2, 1e-14)
        self.assertAlmostEqual(diagnostics.mean, 0.1, places=14)
        self.assertIsNone(reports[0].identity_residual)
        self.assertIsNone(reports[1].identity_residual)
        self.assertLess(reports[2].identity_residual, 1e-12)
        self.assertIn('0,1', reports[0].unavailable)
        self.assertEqual(reports[2].unavailable, ())

    def test_regularized_norms_dominate(self):
        diagnostics = EnergyDiagnostics.for_config(self.cfg)
        x = self.grid.tangential.nodes
        states = [
            State.initial(BulkField.zeros(self.grid),
                          InterfaceField(self.grid.tangential, amplitude * np.sin(x)), t=t)
            for t, amplitude in ((0.0, 0.02), (0.1, 0.015), (0.2, 0.01))
        ]
        for state in states:
            report = diagnostics(state)
            self.assertGreater(report.E, 0.0)
            self.assertGreaterEqual(report.E_eps, report.E)
            self.assertGreaterEqual(report.D_eps, report.D)
            self.assertGreaterEqual(report.I_psi_min_gap, -1e-10)
        self.assertGreater(report.D, 0.0)

    def test_identity_can_be_disabled(self):
        diagnostics = EnergyDiagnostics.for_config(self.cfg.with_changes(identity_check=False))
        reports = [diagnostics(replace(self.flat, t=t)) for t in (0.0, 0.1, 0.2)]
        self.assertIsNone(reports[-1].identity_residual)
