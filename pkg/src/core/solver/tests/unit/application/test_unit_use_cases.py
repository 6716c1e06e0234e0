import unittest

from core.__seedwork.application.use_cases import UseCase
from core.fields.domain.entities import BulkField, InterfaceField
from core.solver.application.use_cases import RunSimulationUseCase
from core.solver.domain.config import SolverConfig
from core.solver.domain.state import State


class TestRunSimulationUseCaseUnit(unittest.TestCase):

    def setUp(self):
        self.cfg = SolverConfig(n_x=16, n_z=17, dt=1e-2)
        grid = self.cfg.grid
        self.initial = State.initial(BulkField.zeros(grid),
                                     InterfaceField.constant(grid.tangential, 0.1))
        self.use_case = RunSimulationUseCase(
            diagnostics_factory=lambda cfg: (lambda state: (cfg.epsilon, state.t)))

    def test_if_instance_is_a_use_case(self):
        self.assertIsInstance(self.use_case, UseCase)

    def test_single_run_uses_the_config_epsilon(self):
        output = self.use_case.execute(RunSimulationUseCase.Input(
            cfg=self.cfg.with_changes(epsilon=1e-3), initial=self.initial, t_end=0.02))
        self.assertEqual(len(output.trajectories), 1)
        self.assertEqual(output.last.epsilon, 1e-3)
        self.assertEqual([report[0] for report in output.reports()], [1e-3] * 3)

    def test_continuation_restarts_from_the_same_data(self):
        output = self.use_case.execute(RunSimulationUseCase.Input(
            cfg=self.cfg, initial=self.initial, t_end=0.02, epsilons=(1e-2, 1e-4, 0.0)))
        self.assertEqual([trajectory.epsilon for trajectory in output.trajectories],
                         [1e-2, 1e-4, 0.0])
        for trajectory in output.trajectories:
            self.assertEqual(trajectory.reports[0], (trajectory.epsilon, 0.0))
            self.assertEqual(trajectory.steps, 2)

    def test_without_diagnostics(self):
        output = RunSimulationUseCase().execute(RunSimulationUseCase.Input(
            cfg=self.cfg, initial=self.initial, t_end=0.01))
        self.assertEqual(output.last.reports, ())
