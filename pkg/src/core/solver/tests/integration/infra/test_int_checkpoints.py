import tempfile
import unittest
from pathlib import Path

import numpy as np

from core.fields.domain.entities import InterfaceField
from core.solver.domain.config import SolverConfig
from core.solver.domain.fixed_point import fixed_point_step
from core.solver.domain.state import State
from core.solver.domain.temperature import compatible_temperature
from core.solver.infra.checkpoints import CheckpointWriter, read_checkpoint, write_checkpoint


class TestCheckpointsInt(unittest.TestCase):

    def setUp(self):
        self.cfg = SolverConfig(n_x=16, n_z=17, dt=1e-3)
        grid = self.cfg.grid
        rho = InterfaceField.from_function(grid.tangential, lambda x: 1e-3 * np.sin(x))
        self.state = fixed_point_step(State.initial(compatible_temperature(rho, grid), rho), self.cfg)

    def test_resume_reproduces_the_state(self):
        with tempfile.TemporaryDirectory() as tmp:
            directory = write_checkpoint(Path(tmp) / 'ckpt', self.state, self.cfg)
            restored, metadata = read_checkpoint(directory)
        self.assertEqual(metadata['config_hash'], self.cfg.config_hash)
        self.assertEqual(restored.t, self.state.t)
        np.testing.assert_array_equal(restored.u.values, self.state.u.values)
        np.testing.assert_array_equal(restored.rho.values, self.state.rho.values)
        np.testing.assert_array_equal(restored.rho_t.values, self.state.rho_t.values)

        resumed = fixed_point_step(restored, self.cfg)
        direct = fixed_point_step(self.state, self.cfg)
        np.testing.assert_array_equal(resumed.rho.values, direct.rho.values)

    def test_writer_cadence(self):
        with tempfile.TemporaryDirectory() as tmp:
            writer = CheckpointWriter(Path(tmp), self.cfg, every=2)
            for _ in range(5):
                writer(self.state)
            written = sorted(path.name for path in Path(tmp).iterdir())
        self.assertEqual(written, ['step-000002', 'step-000004'])
