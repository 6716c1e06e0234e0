import tempfile
import unittest
from pathlib import Path

import numpy as np

from core.__seedwork.domain.exceptions import ValidationException
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import Grid
from core.fields.infra.snapshots import write_bulk_snapshot, write_interface_snapshot
from core.scenario.application.initial_state import band_limit, build_initial_state
from core.scenario.domain.entities import InitialCondition, ManufacturedSpec, Mode, RandomModes, Scenario
from core.solver.domain.temperature import compatible_temperature


class TestBuildInitialStateUnit(unittest.TestCase):

    def setUp(self):
        self.builder = Scenario.fake().a_scenario()
        self.grid = self.builder.solver.grid
        self.x = self.grid.tangential.nodes

    def test_modes_and_mean(self):
        scenario = self.builder.with_initial(InitialCondition(
            modes=(Mode(1, 1e-3), Mode(2, 2e-3, 'cos')), mean=0.1)).build()
        state = build_initial_state(scenario)

        expected = 0.1 + 1e-3 * np.sin(self.x) + 2e-3 * np.cos(2 * self.x)
        np.testing.assert_allclose(state.rho.values, expected, atol=1e-15)
        self.assertEqual(state.t, 0.0)
        np.testing.assert_allclose(state.rho_t.values, 0.0)

    def test_compatible_temperature(self):
        scenario = self.builder.build()
        state = build_initial_state(scenario)
        expected = compatible_temperature(state.rho, self.grid)
        np.testing.assert_allclose(state.u.values, expected.values)

    def test_zero_temperature_with_heat_bump(self):
        scenario = self.builder.with_initial(InitialCondition(temperature='zero', heat_bump=0.5)).build()
        state = build_initial_state(scenario)
        _, z = self.grid.mesh()
        np.testing.assert_allclose(state.u.values, 0.5 * np.sin(np.pi * z) ** 2, atol=1e-15)
        np.testing.assert_allclose(state.u.trace().values, 0.0, atol=1e-15)

    def test_random_interface_is_seeded_and_band_limited(self):
        scenario = self.builder.with_initial(InitialCondition(random=RandomModes(1e-2, 50))).build()
        first = build_initial_state(scenario, seed=3).rho.values
        again = build_initial_state(scenario, seed=3).rho.values
        other = build_initial_state(scenario, seed=4).rho.values

        np.testing.assert_array_equal(first, again)
        self.assertFalse(np.allclose(first, other))
        spectrum = np.abs(np.fft.rfft(first))
        limit = band_limit(self.grid.tangential.n_x)
        np.testing.assert_allclose(spectrum[limit + 1:], 0.0, atol=1e-12)
        self.assertGreater(spectrum[1:limit + 1].max(), 0.0)

    def test_scenario_seed_is_the_default(self):
        scenario = self.builder.with_seed(3).with_initial(
            InitialCondition(random=RandomModes(1e-2, 2))).build()
        np.testing.assert_array_equal(build_initial_state(scenario).rho.values,
                                      build_initial_state(scenario, seed=3).rho.values)

    def test_manufactured(self):
        scenario = Scenario(
            name='mms', t_end=0.1, solver=self.builder.solver,
            manufactured=ManufacturedSpec(u='exp(-t)*cos(pi*z)*(1 + 0.1*cos(x))',
                                          rho='0.05*exp(-t)*sin(x)'))
        state = build_initial_state(scenario)
        np.testing.assert_allclose(state.rho.values, 0.05 * np.sin(self.x), atol=1e-15)
        _, z = self.grid.mesh()
        x, _ = self.grid.mesh()
        np.testing.assert_allclose(state.u.values, np.cos(np.pi * z) * (1 + 0.1 * np.cos(x)),
                                   atol=1e-14)


class TestBuildInitialStateFilesUnit(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.root = Path(self.directory.name)
        self.builder = Scenario.fake().a_scenario()
        self.grid = self.builder.solver.grid

    def tearDown(self):
        self.directory.cleanup()

    def test_files(self):
        rho = InterfaceField.from_function(self.grid.tangential, lambda x: 0.01 * np.cos(x))
        u = BulkField.from_function(self.grid, lambda x, z: z ** 2)
        write_interface_snapshot(self.root / 'rho.csv', rho)
        write_bulk_snapshot(self.root / 'u.csv', u)

        scenario = self.builder.with_initial(InitialCondition(
            temperature='file', u_file=self.root / 'u.csv', rho_file=self.root / 'rho.csv')).build()
        state = build_initial_state(scenario)
        np.testing.assert_allclose(state.rho.values, rho.values)
        np.testing.assert_allclose(state.u.values, u.values)

    def test_grid_mismatch(self):
        write_interface_snapshot(self.root / 'rho.csv', InterfaceField.zeros(Grid.create(8, 7).tangential))
        scenario = self.builder.with_initial(InitialCondition(rho_file=self.root / 'rho.csv')).build()
        with self.assertRaises(ValidationException):
            build_initial_state(scenario)

        write_bulk_snapshot(self.root / 'u.csv', BulkField.zeros(Grid.create(16, 9)))
        scenario = self.builder.with_initial(InitialCondition(
            temperature='file', u_file=self.root / 'u.csv')).build()
        with self.assertRaises(ValidationException):
            build_initial_state(scenario)
