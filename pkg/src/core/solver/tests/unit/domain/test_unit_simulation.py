import unittest
from unittest.mock import patch

import numpy as np

from core.__seedwork.domain.exceptions import ValidationException
from core.fields.domain.entities import BulkField, InterfaceField
from core.solver.domain import fixed_point
from core.solver.domain.config import SolverConfig
from core.solver.domain.exceptions import FixedPointDivergenceException
from core.solver.domain.simulation import Simulation, Trajectory, step_plan
from core.solver.domain.state import State


class TestStepPlanUnit(unittest.TestCase):

    def test_plans(self):
        self.assertEqual(step_plan(0.0, 1.0, 0.25), [0.25] * 4)
        self.assertEqual(step_plan(0.0, 0.0, 0.25), [])
        plan = step_plan(0.0, 0.3, 0.25)
        self.assertEqual(len(plan), 2)
        self.assertAlmostEqual(plan[1], 0.05)
        self.assertEqual(len(step_plan(0.0, 2.0, 1e-3)), 2000)

    def test_negative_span(self):
        with self.assertRaises(ValidationException):
            step_plan(1.0, 0.5, 0.1)


class TestSimulationUnit(unittest.TestCase):

    def setUp(self):
        self.cfg = SolverConfig(n_x=16, n_z=17, dt=1e-2)
        self.grid = self.cfg.grid
        self.flat = State.initial(BulkField.zeros(self.grid),
                                  InterfaceField.constant(self.grid.tangential, 0.1))

    def test_zero_horizon_reports_only_the_initial_state(self):
        trajectory = Simulation(self.cfg).run(self.flat, 0.0, diagnostics=lambda state: state.t)
        self.assertIsInstance(trajectory, Trajectory)
        self.assertEqual(trajectory.reports, (0.0,))
        self.assertEqual(trajectory.steps, 0)
        self.assertIs(trajectory.final.rho, self.flat.rho)

    def test_flat_state_stays_constant(self):
        visited = []
        trajectory = Simulation(self.cfg).run(self.flat, 0.05, diagnostics=lambda state: state.t,
                                              callbacks=[visited.append])
        self.assertEqual(trajectory.steps, 5)
        self.assertEqual(len(visited), 5)
        self.assertEqual(len(trajectory.reports), 6)
        self.assertAlmostEqual(trajectory.final.t, 0.05)
        np.testing.assert_allclose(trajectory.final.rho.values, 0.1, atol=1e-12)
        np.testing.assert_allclose(trajectory.final.u.values, 0.0, atol=1e-12)
        self.assertEqual(trajectory.final.step_report, trajectory.reports[-1])

    def test_divergent_step_is_halved(self):
        real_step = fixed_point.fixed_point_step
        calls = []

        def flaky(state, cfg, forcing=None):
            calls.append(cfg.dt)
            if len(calls) == 1:
                raise FixedPointDivergenceException(3, 2.0, 1.0)
            return real_step(state, cfg, forcing)

        with patch('core.solver.domain.simulation.fixed_point_step', side_effect=flaky):
            state = Simulation(self.cfg).step(self.flat)
        self.assertEqual(calls, [1e-2, 5e-3, 5e-3])
        self.assertAlmostEqual(state.t, 1e-2)
        self.assertEqual(state.halvings, 1)
        self.assertEqual(state.inner_iters, 2)

    def test_halving_budget_is_respected(self):
        cfg = self.cfg.with_changes(max_dt_halvings=0)
        with patch('core.solver.domain.simulation.fixed_point_step',
                   side_effect=FixedPointDivergenceException(3, 2.0, 1.0)):
            with self.assertRaises(FixedPointDivergenceException):
                Simulation(cfg).step(self.flat)
