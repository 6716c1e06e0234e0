import math
import unittest

import numpy as np

from core.__seedwork.domain.exceptions import NonFiniteFieldException, ValidationException
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import Grid, TangentialGrid


class TestInterfaceFieldUnit(unittest.TestCase):

    def setUp(self):
        self.grid = TangentialGrid(16)

    def test_values_are_copied_and_read_only(self):
        raw = np.ones(16)
        field = InterfaceField(self.grid, raw)
        raw[0] = 5.0
        self.assertEqual(field.values[0], 1.0)
        with self.assertRaises(ValueError):
            field.values[0] = 2.0

    def test_mean_and_norm(self):
        field = InterfaceField.from_function(self.grid, lambda x: 0.1 + np.sin(x))
        self.assertAlmostEqual(field.mean(), 0.1, places=14)
        self.assertAlmostEqual(field.sup_norm(), 1.1, places=2)

    def test_rejects_non_finite_entries(self):
        values = np.zeros(16)
        values[3] = math.nan
        values[5] = math.inf
        with self.assertRaises(NonFiniteFieldException) as assert_error:
            InterfaceField(self.grid, values)
        self.assertEqual(assert_error.exception.count, 2)

    def test_rejects_wrong_shape(self):
        with self.assertRaises(ValidationException):
            InterfaceField(self.grid, np.zeros(15))


class TestBulkFieldUnit(unittest.TestCase):

    def test_trace_is_the_interface_row(self):
        grid = Grid.create(8, 7)
        field = BulkField.from_function(grid, lambda x, z: np.cos(x) + z)
        np.testing.assert_allclose(field.trace().values, np.cos(grid.tangential.nodes))

    def test_rejects_non_finite_entries(self):
        grid = Grid.create(8, 7)
        values = np.zeros(grid.shape)
        values[2, 3] = math.nan
        with self.assertRaises(NonFiniteFieldException):
            BulkField(grid, values)
