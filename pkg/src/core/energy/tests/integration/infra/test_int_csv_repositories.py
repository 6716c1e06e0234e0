import tempfile
import unittest
from pathlib import Path

from core.energy.domain.entities import COLUMNS, EnergyReport
from core.energy.infra.csv.repositories import EnergyReportCsvRepository


def report(t: float, identity=None) -> EnergyReport:
    return EnergyReport(t=t, E=0.1 / (1 + t), D=0.3, E_eps=0.2, D_eps=0.4, sobolev_E=0.1,
                        sobolev_D=0.2, cons_residual=1e-13, rho_dev_L2=1e-4,
                        identity_residual=identity, inner_iters=3)


class TestEnergyReportCsvRepositoryInt(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name) / 'energy.csv'

    def tearDown(self):
        self.directory.cleanup()

    def test_writes_header_and_rows(self):
        repo = EnergyReportCsvRepository(self.path, {'config_hash': 'abc123', 'epsilon': 0.0})
        repo.bulk_insert([report(0.0), report(0.1, identity=0.02)])

        lines = self.path.read_text(encoding='utf-8').splitlines()
        self.assertEqual(lines[0], '# config_hash=abc123')
        self.assertEqual(lines[1], '# epsilon=0.0')
        self.assertEqual(lines[2], ','.join(COLUMNS))
        self.assertEqual(len(lines), 5)

    def test_reload(self):
        repo = EnergyReportCsvRepository(self.path, {'config_hash': 'abc123'})
        reports = [report(0.0), report(0.1, identity=0.02)]
        repo.bulk_insert(reports)

        loaded = EnergyReportCsvRepository(self.path)
        self.assertEqual(loaded.find_all(), reports)
        self.assertEqual(loaded.metadata['config_hash'], 'abc123')
        self.assertEqual(loaded.latest(), reports[-1])

    def test_clear(self):
        repo = EnergyReportCsvRepository(self.path)
        repo.insert(report(0.0))
        repo.clear()
        self.assertEqual(EnergyReportCsvRepository(self.path).find_all(), [])
