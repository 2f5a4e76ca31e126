import unittest
import numpy as np
from fuzzy_tools.core import SideSegment, SideCurve, SideFunctions, SideFunctionViolation, LinearPiece, FuzzyNumber, validate


def _tri() -> FuzzyNumber:
    return validate(FuzzyNumber.build(
        support=(0.0, 2.0),
        core=(1.0, 1.0),
        left=[LinearPiece.through(0.0, 0.0, 1.0, 1.0)],
        right=[LinearPiece.through(1.0, 1.0, 2.0, 0.0)]
    ))


def _plateau(x: float, orientation: int) -> SideCurve:
    return SideCurve(segments=(SideSegment.plateau(0.0, 1.0, x),), orientation=orientation)


class TestSideFunctions(unittest.TestCase):

    def test_triangular_sides(self):
        sides = _tri().side_functions
        alphas = np.linspace(0.0, 1.0, 11)

        np.testing.assert_allclose(alphas, sides.minus.value(alphas), atol=1e-15)
        np.testing.assert_allclose(2.0 - alphas, sides.plus.value(alphas), atol=1e-15)
        self.assertEqual((0.5, 1.5), sides.cut(0.5))
        sides.check()

    def test_sum_of_curves(self):
        sides = _tri().side_functions
        total = sides.minus.add(sides.minus)

        self.assertAlmostEqual(1.0, total.value(0.5), places=12)
        self.assertAlmostEqual(2.0, float(total.slope_left(0.5)), places=12)
        np.testing.assert_array_equal([0.0, 1.0], total.breakpoints())

        with self.assertRaises(ValueError):
            sides.minus.add(sides.plus)

    def test_scaled_curve_flips_orientation(self):
        minus = _tri().side_functions.minus
        flipped = minus.scaled(-2.0)
        self.assertEqual(-1, flipped.orientation)
        self.assertAlmostEqual(-1.0, flipped.value(0.5), places=12)

    def test_value_and_right_limit_at_a_plateau(self):
        # jump of membership from 0.25 to 0.75 at x=1
        minus = SideCurve(segments=(
            SideSegment.linear(0.0, 0.25, 0.0, 1.0),
            SideSegment.plateau(0.25, 0.75, 1.0),
            SideSegment.linear(0.75, 1.0, 1.0, 2.0)
        ), orientation=1)

        self.assertAlmostEqual(1.0, minus.value(0.25), places=12)
        self.assertAlmostEqual(1.0, minus.value_right(0.25), places=12)
        self.assertAlmostEqual(1.0, minus.value(0.75), places=12)
        self.assertAlmostEqual(1.0, minus.value_right(0.75), places=12)
        self.assertAlmostEqual(1.5, minus.value(0.875), places=12)
        self.assertTrue(minus.segment_at(0.5).is_plateau)

    def test_check_rejects_decreasing_lower_side(self):
        minus = SideCurve(segments=(SideSegment.linear(0.0, 1.0, 1.0, 0.0),), orientation=1)
        with self.assertRaises(SideFunctionViolation) as ctx:
            SideFunctions(minus=minus, plus=_plateau(2.0, -1)).check()
        self.assertEqual('(i)', ctx.exception.clause)

    def test_check_rejects_crossed_sides(self):
        with self.assertRaises(SideFunctionViolation) as ctx:
            SideFunctions(minus=_plateau(2.0, 1), plus=_plateau(1.0, -1)).check()
        self.assertEqual('(iv)', ctx.exception.clause)

    def test_check_rejects_sides_not_starting_at_zero(self):
        minus = SideCurve(segments=(SideSegment.plateau(0.1, 1.0, 0.0),), orientation=1)
        with self.assertRaises(SideFunctionViolation) as ctx:
            SideFunctions(minus=minus, plus=_plateau(1.0, -1)).check()
        self.assertEqual('(iii)', ctx.exception.clause)
