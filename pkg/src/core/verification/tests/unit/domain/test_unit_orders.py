import math
import unittest

from core.verification.domain.orders import observed_order, reduction_order


class TestObservedOrderUnit(unittest.TestCase):

    def test_second_order(self):
        self.assertAlmostEqual(observed_order(4e-4, 1e-4), 2.0)
        self.assertAlmostEqual(observed_order(9e-4, 1e-4, ratio=3.0), 2.0)

    def test_exact_levels(self):
        self.assertEqual(observed_order(1e-3, 0.0), math.inf)
        self.assertEqual(observed_order(0.0, 0.0), math.inf)
        self.assertEqual(observed_order(0.0, 1e-3), -math.inf)

    def test_reduction_order(self):
        self.assertAlmostEqual(reduction_order(4.0), 2.0)
        self.assertAlmostEqual(reduction_order(1.8), math.log2(1.8))

    def test_round_off_levels_count_as_exact(self):
        self.assertEqual(observed_order(5.2e-19, 4.6e-19, floor=1e-13), math.inf)
        self.assertAlmostEqual(observed_order(5.2e-19, 4.6e-19), math.log2(5.2 / 4.6))
        self.assertAlmostEqual(observed_order(4e-4, 1e-4, floor=1e-13), 2.0)
        self.assertAlmostEqual(observed_order(1e-12, 1e-14, floor=1e-13), math.log2(100.0))
