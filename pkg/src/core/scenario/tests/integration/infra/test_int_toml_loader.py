import tempfile
import unittest
from pathlib import Path

from core.scenario.domain.exceptions import ScenarioLoadException
from core.scenario.infra.toml_loader import load_scenario, parse_scenario

DECAY = '''
[scenario]
name = "decay-k1"
t_end = 2.0
epsilons = [1e-2, 1e-4, 0]

[initial]
modes = [{ k = 1, amplitude = 1e-3 }]

[solver]
epsilon = 1e-4
dt = 1e-2
n_x = 32
n_z = 33

[output]
directory = "runs/decay"
'''


class TestLoadScenarioInt(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.root = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def write(self, text: str) -> Path:
        path = self.root / 'scenario.toml'
        path.write_text(text, encoding='utf-8')
        return path

    def test_load(self):
        scenario = load_scenario(self.write(DECAY))
        self.assertEqual(scenario.name, 'decay-k1')
        self.assertEqual(scenario.epsilons, (1e-2, 1e-4, 0.0))
        self.assertEqual(scenario.solver.epsilon, 1e-4)
        self.assertEqual(scenario.solver.n_x, 32)
        self.assertEqual(scenario.output.directory, self.root / 'runs/decay')
        self.assertIsNotNone(scenario.initial.single_mode)

    def test_missing_file(self):
        with self.assertRaises(ScenarioLoadException) as assert_error:
            load_scenario(self.root / 'nope.toml')
        self.assertIn('__file__', assert_error.exception.error)

    def test_malformed_toml(self):
        with self.assertRaises(ScenarioLoadException) as assert_error:
            load_scenario(self.write('[scenario\nname = 1'))
        self.assertIn('__toml__', assert_error.exception.error)

    def test_unknown_key(self):
        with self.assertRaises(ScenarioLoadException) as assert_error:
            load_scenario(self.write(DECAY.replace('dt = 1e-2', 'dtt = 1e-2')))
        self.assertIn('solver.dtt', assert_error.exception.error)
        self.assertIn('scenario.toml', str(assert_error.exception))

    def test_solver_rule_errors_are_keyed_by_section(self):
        with self.assertRaises(ScenarioLoadException) as assert_error:
            parse_scenario({'scenario': {'name': 'x', 't_end': 1.0}, 'solver': {'n_x': 31}})
        self.assertIn('solver.n_x', assert_error.exception.error)
