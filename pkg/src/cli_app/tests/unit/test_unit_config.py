import os
import unittest
from pathlib import Path
from unittest import mock

from pydantic import ValidationError

from cli_app.config import ConfigService


class TestConfigServiceUnit(unittest.TestCase):

    def test_defaults(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            config = ConfigService(_env_file=None)
        self.assertEqual(config.output_root, Path('runs'))
        self.assertEqual(config.max_sweep_jobs, 64)
        self.assertEqual(config.default_jobs, 1)

    def test_environment_overrides(self):
        env = {'STEFAN_OUTPUT_ROOT': '/tmp/stefan', 'STEFAN_MAX_SWEEP_JOBS': '8'}
        with mock.patch.dict(os.environ, env, clear=True):
            config = ConfigService(_env_file=None)
        self.assertEqual(config.output_root, Path('/tmp/stefan'))
        self.assertEqual(config.max_sweep_jobs, 8)

    def test_job_counts_are_positive(self):
        with mock.patch.dict(os.environ, {'STEFAN_DEFAULT_JOBS': '0'}, clear=True):
            with self.assertRaises(ValidationError):
                ConfigService(_env_file=None)
