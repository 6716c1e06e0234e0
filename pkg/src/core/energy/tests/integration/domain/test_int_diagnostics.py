import unittest

import numpy as np

from core.energy.domain.diagnostics import EnergyDiagnostics
from core.fields.domain.entities import InterfaceField
from core.solver.domain.config import SolverConfig
from core.solver.domain.simulation import Simulation
from core.solver.domain.state import State
from core.solver.domain.temperature import compatible_temperature


class TestDiagnosticsOnSolverRunInt(unittest.TestCase):

    def setUp(self):
        self.cfg = SolverConfig(n_x=16, n_z=33, dt=1e-2, epsilon=1e-4, k_diag=1)
        grid = self.cfg.grid
        rho = InterfaceField(grid.tangential, 1e-3 * np.sin(grid.tangential.nodes))
        self.initial = State.initial(compatible_temperature(rho, grid), rho)

    def test_reports_along_a_decaying_run(self):
        diagnostics = EnergyDiagnostics.for_config(self.cfg)
        trajectory = Simulation(self.cfg).run(self.initial, 0.2, diagnostics)
        reports = trajectory.reports

        self.assertEqual(len(reports), 21)
        for report in reports:
            self.assertTrue(report.is_finite())
            self.assertGreaterEqual(report.E_eps, report.E)
            self.assertGreaterEqual(report.D_eps, report.D)
            self.assertLess(report.cons_residual, 1e-5)
        self.assertLess(reports[-1].E, reports[2].E)
        self.assertTrue(all(report.identity_residual is not None for report in reports[2:]))
        self.assertAlmostEqual(diagnostics.mean, 0.0, delta=1e-12)
