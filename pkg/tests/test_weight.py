# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring
from fractions import Fraction
import unittest

from planturan.weight import QuarterWeight, ZERO


class TestQuarterWeight(unittest.TestCase):

    def test_constructors(self) -> None:
        self.assertEqual(QuarterWeight(10), QuarterWeight.from_halves(5))
        self.assertEqual(QuarterWeight(60), QuarterWeight.from_int(15))
        self.assertEqual(Fraction(61, 4), QuarterWeight(61).fraction())

    def test_floor(self) -> None:
        self.assertEqual(QuarterWeight(66), QuarterWeight.floor(Fraction(33, 2)))
        # 20 - 5/3 = 18.33.. floors to 18.25
        self.assertEqual(QuarterWeight(73), QuarterWeight.floor(Fraction(55, 3)))
        self.assertEqual(QuarterWeight(-1), QuarterWeight.floor(Fraction(-1, 5)))

    def test_arithmetic_and_order(self) -> None:
        a, b = QuarterWeight(5), QuarterWeight(3)
        self.assertEqual(QuarterWeight(8), a + b)
        self.assertEqual(QuarterWeight(2), a - b)
        self.assertLess(b, a)
        self.assertLessEqual(a, QuarterWeight(5))
        self.assertGreater(a, ZERO)
        self.assertEqual(max(a, b), a)

    def test_str(self) -> None:
        self.assertEqual("61/4", str(QuarterWeight(61)))
        self.assertEqual("25", str(QuarterWeight(100)))
        self.assertEqual("33/2", str(QuarterWeight(66)))
        self.assertEqual("0", str(ZERO))


if __name__ == "__main__":
    unittest.main()
