import math
import unittest

from core.energy.domain.entities import EnergyReport
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import Grid
from core.scenario.domain.summary import RunSummary, SteadyDeviation, is_monotone


def report(t: float, energy: float) -> EnergyReport:
    return EnergyReport(t=t, E=energy, D=0.0, E_eps=energy, D_eps=0.0, sobolev_E=energy,
                        sobolev_D=0.0, cons_residual=1e-12 * t, rho_dev_L2=0.0)


class TestIsMonotoneUnit(unittest.TestCase):

    def test_first_step_is_exempt(self):
        self.assertTrue(is_monotone([report(0.0, 1.0), report(0.1, 2.0), report(0.2, 1.5)]))

    def test_growth_beyond_slack(self):
        self.assertFalse(is_monotone([report(0.0, 1.0), report(0.1, 1.0), report(0.2, 1.1)]))
        self.assertTrue(is_monotone([report(0.0, 1.0), report(0.1, 1.0), report(0.2, 1.0 + 1e-7)]))


class TestSteadyDeviationUnit(unittest.TestCase):

    def test_tracks_the_worst_step(self):
        grid = Grid.create(8, 7)
        rho = InterfaceField.constant(grid.tangential, 0.1)
        tracker = SteadyDeviation.start(BulkField.zeros(grid), rho)
        self.assertEqual(tracker.worst, 0.0)

        tracker.observe(BulkField.zeros(grid), rho.with_values(rho.values + 1e-3))
        tracker.observe(BulkField.zeros(grid), rho)
        self.assertAlmostEqual(tracker.worst, 1e-3, places=12)


class TestRunSummaryUnit(unittest.TestCase):

    def test_exponential_decay(self):
        reports = [report(0.1 * j, math.exp(-1.3 * 0.1 * j)) for j in range(30)]
        summary = RunSummary.from_reports(reports, 0.0, 29, 1.0, oracle_rate=1.3)
        self.assertAlmostEqual(summary.decay.rate, 1.3, places=8)
        self.assertTrue(summary.monotone)
        self.assertFalse(summary.steady)
        self.assertAlmostEqual(summary.oracle_relative_error, 0.0, places=8)
        self.assertTrue(summary.oracle_agrees)
        self.assertAlmostEqual(summary.max_conservation_residual, 2.9e-12)
        self.assertIn('energy monotone', summary.lines())

    def test_steady(self):
        reports = [report(0.1 * j, 0.0) for j in range(5)]
        summary = RunSummary.from_reports(reports, 0.0, 4, 0.0)
        self.assertTrue(summary.steady)
        self.assertFalse(summary.decay.ok)
        self.assertIsNone(summary.oracle_relative_error)
        self.assertIn('steady within tolerance', summary.lines())
