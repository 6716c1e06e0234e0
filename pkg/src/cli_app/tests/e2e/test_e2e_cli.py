import tempfile
import unittest
from pathlib import Path

import pytest
from dependency_injector import providers

from cli_app.config import ConfigService
from cli_app.container import Container
from cli_app.main import EXIT_OK, EXIT_USAGE, main
from core.__seedwork.infra.files import read_csv

SOLVER = '''
[solver]
n_x = 16
n_z = 17
dt = 1e-2
k_diag = 0
identity_check = false
'''

FLAT = '''
[scenario]
name = "flat"
t_end = 0.05

[initial]
mean = 0.1
temperature = "zero"
''' + SOLVER

SWEEP = '''
[scenario]
name = "sweep-eps"
t_end = 0.03

[initial]
modes = [{ k = 1, amplitude = 1e-3 }]

[sweep]
epsilon = [1e-2, 1e-4, 0.0]
''' + SOLVER


@pytest.mark.group('e2e')
class TestCliE2e(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.root = Path(self.directory.name)
        self.container = Container()
        self.container.config.override(providers.Object(
            ConfigService(_env_file=None, output_root=self.root / 'runs', log_level='WARNING')))

    def tearDown(self):
        self.container.config.reset_override()
        self.directory.cleanup()

    def write(self, name: str, text: str) -> Path:
        path = self.root / name
        path.write_text(text, encoding='utf-8')
        return path

    def test_run_flat(self):
        config = self.write('flat.toml', FLAT)
        self.assertEqual(main(['run', '--config', str(config), '--quiet'], self.container), EXIT_OK)
        summary = (self.root / 'runs' / 'flat' / 'summary.txt').read_text(encoding='utf-8')
        self.assertIn('steady within tolerance', summary)

    def test_run_with_out(self):
        config = self.write('flat.toml', FLAT)
        out = self.root / 'elsewhere'
        self.assertEqual(main(['run', '--config', str(config), '--out', str(out)], self.container), EXIT_OK)
        self.assertTrue((out / 'energy.csv').is_file())

    def test_malformed_config_writes_nothing(self):
        config = self.write('bad.toml', FLAT.replace('dt = 1e-2', 'dt = "fast"'))
        self.assertEqual(main(['run', '--config', str(config)], self.container), EXIT_USAGE)
        self.assertFalse((self.root / 'runs').exists())

        config = self.write('typo.toml', FLAT + 'epsilom = 0.1\n')
        self.assertEqual(main(['run', '--config', str(config)], self.container), EXIT_USAGE)

    def test_spectrum(self):
        out = self.root / 'spectrum'
        code = main(['spectrum', '--k', '0-3', '--eps', '0', '--n-z-dense', '64', '--out', str(out)],
                    self.container)
        self.assertEqual(code, EXIT_OK)
        _, columns, rows = read_csv(out / 'spectrum.csv')
        self.assertEqual(columns[:3], ['k', 'epsilon', 're_1'])
        self.assertEqual([row[0] for row in rows], ['0', '1', '2', '3'])

    def test_empty_k_range(self):
        self.assertEqual(main(['spectrum', '--k', ''], self.container), EXIT_USAGE)

    def test_unknown_suite(self):
        self.assertEqual(main(['verify', 'energy'], self.container), EXIT_USAGE)

    def test_sweep(self):
        config = self.write('sweep.toml', SWEEP)
        self.assertEqual(main(['sweep', '--config', str(config)], self.container), EXIT_OK)
        directory = self.root / 'runs' / 'sweep-eps'
        self.assertTrue((directory / 'combined.csv').is_file())
        _, _, rows = read_csv(directory / 'eps_convergence.csv')
        self.assertEqual(len(rows), 2)

    def test_sweep_cap(self):
        self.container.config.override(providers.Object(
            ConfigService(_env_file=None, output_root=self.root / 'runs', max_sweep_jobs=2)))
        config = self.write('sweep.toml', SWEEP)
        self.assertEqual(main(['sweep', '--config', str(config)], self.container), EXIT_USAGE)
        self.assertFalse((self.root / 'runs').exists())
