import unittest
import numpy as np
from fuzzy_tools.core import FuzzyNumber, LinearPiece, HermitePiece, FuzzyError, Branch, validate, membership, alpha_cut, to_side_functions, from_side_functions
from fuzzy_tools.core import SideSegment, SideCurve, SideFunctions, SideFunctionViolation, SumPiece

GRID_LEVELS = np.linspace(0.0, 1.0, 101)


def _jumping() -> FuzzyNumber:
    return validate(FuzzyNumber.build(
        support=(0.0, 3.0),
        core=(2.0, 2.0),
        left=[LinearPiece.through(0.0, 0.0, 1.0, 0.25), LinearPiece.through(1.0, 0.75, 2.0, 1.0)],
        right=[LinearPiece.through(2.0, 1.0, 3.0, 0.0)]
    ))


def _trapezoid() -> FuzzyNumber:
    return validate(FuzzyNumber.build(
        support=(0.0, 3.0),
        core=(1.0, 2.0),
        left=[LinearPiece.through(0.0, 0.0, 1.0, 1.0)],
        right=[LinearPiece.through(2.0, 1.0, 3.0, 0.0)]
    ))



def _peak() -> FuzzyNumber:
    """core {0}, Hermite branches flat at level 0.5 and at the core"""
    return validate(FuzzyNumber.build(
        support=(-1.0, 1.0),
        core=(0.0, 0.0),
        left=[HermitePiece.from_nodes([-1.0, -0.5, 0.0], [0.0, 0.5, 1.0], [1.0, 0.0, 0.0])],
        right=[HermitePiece.from_nodes([0.0, 0.5, 1.0], [1.0, 0.5, 0.0], [0.0, 0.0, -1.0])]
    ))


def _sides(minus_segments, plus_segments) -> SideFunctions:
    return SideFunctions(minus=SideCurve(segments=tuple(minus_segments), orientation=1),
                         plus=SideCurve(segments=tuple(plus_segments), orientation=-1))


def _levels(*sides: SideFunctions) -> np.ndarray:
    return np.unique(np.concatenate([GRID_LEVELS] + [s.breakpoints() for s in sides]))

class TestFuzzyNumber(unittest.TestCase):

    def test_membership(self):
        u = _trapezoid()
        self.assertEqual(0.0, membership(u, -1.0))
        self.assertEqual(0.5, membership(u, 0.5))
        self.assertEqual(1.0, membership(u, 1.5))
        self.assertEqual(0.5, membership(u, 2.5))
        self.assertEqual(0.0, membership(u, 3.5))

        xs = np.array([[0.0, 0.5], [1.5, 2.5]])
        values = u.membership(xs)
        self.assertEqual((2, 2), values.shape)
        np.testing.assert_array_equal([[0.0, 0.5], [1.0, 0.5]], values)

    def test_membership_at_a_jump_is_the_upper_value(self):
        u = _jumping()
        self.assertEqual(0.75, u.membership(1.0))
        self.assertAlmostEqual(0.24975, u.membership(0.999), places=12)
        np.testing.assert_array_equal([1.0], u.jump_abscissae())

    def test_derivative(self):
        u = _jumping()
        self.assertEqual(0.25, u.derivative(0.5))
        self.assertEqual(0.25, u.derivative(1.5))
        self.assertEqual(-1.0, u.derivative(2.5))
        self.assertEqual(0.0, u.derivative(4.0))

    def test_alpha_cuts(self):
        u = _jumping()
        self.assertEqual((0.0, 3.0), (u.alpha_cut(0.0).lo, u.alpha_cut(0.0).hi))
        self.assertEqual((2.0, 2.0), (u.alpha_cut(1.0).lo, u.alpha_cut(1.0).hi))

        cut = alpha_cut(u, 0.5)
        self.assertAlmostEqual(1.0, cut.lo, places=12)
        self.assertAlmostEqual(2.5, cut.hi, places=12)
        self.assertAlmostEqual(1.5, cut.width, places=12)
        self.assertTrue(u.alpha_cut(0.25).contains(u.alpha_cut(0.875)))

        lo, hi = u.cuts(np.array([0.0, 0.5, 1.0]))
        np.testing.assert_allclose([0.0, 1.0, 2.0], lo, atol=1e-12)
        np.testing.assert_allclose([3.0, 2.5, 2.0], hi, atol=1e-12)

        with self.assertRaises(FuzzyError):
            u.alpha_cut(1.5)
        with self.assertRaises(FuzzyError):
            u.alpha_cut(-0.1)

    def test_crisp(self):
        u = validate(FuzzyNumber.crisp(2.0))
        self.assertTrue(u.is_crisp)
        self.assertEqual(1.0, u.membership(2.0))
        self.assertEqual(0.0, u.membership(2.1))
        cut = u.alpha_cut(0.5)
        self.assertEqual((2.0, 2.0), (cut.lo, cut.hi))

    def test_side_functions_round_trip(self):
        for u in (_jumping(), _trapezoid()):
            rebuilt = from_side_functions(to_side_functions(u))
            self.assertEqual(u, rebuilt)

    def test_breakpoints_and_branches(self):
        u = _jumping()
        np.testing.assert_array_equal([0.0, 1.0, 2.0, 3.0], u.breakpoints())
        self.assertEqual(2, len(u.branch(Branch.LEFT)))
        self.assertEqual([Branch.LEFT, Branch.LEFT, Branch.RIGHT], [side for side, _, _ in u.pieces()])
        self.assertEqual(0.0, u.v_left)
        self.assertEqual(0.0, u.v_right)


class TestFromSideFunctions(unittest.TestCase):

    def test_linear_sides_give_a_triangle(self):
        u = validate(from_side_functions(_sides([SideSegment.linear(0.0, 1.0, 0.0, 1.0)],
                                                [SideSegment.linear(0.0, 1.0, 2.0, 1.0)])))
        self.assertEqual((0.0, 2.0), u.support)
        self.assertEqual((1.0, 1.0), u.core)
        self.assertEqual(LinearPiece.through(0.0, 0.0, 1.0, 1.0), u.left[0])
        self.assertEqual(LinearPiece.through(1.0, 1.0, 2.0, 0.0), u.right[0])
        xs = np.linspace(-0.5, 2.5, 61)
        np.testing.assert_allclose(np.clip(1.0 - np.abs(xs - 1.0), 0.0, 1.0), u.membership(xs), atol=1e-15)

    def test_constant_sides_give_a_crisp_number(self):
        u = validate(from_side_functions(_sides([SideSegment.plateau(0.0, 1.0, 0.0)],
                                                [SideSegment.plateau(0.0, 1.0, 0.0)])))
        self.assertTrue(u.is_crisp)
        self.assertEqual((0.0, 0.0), u.support)
        self.assertEqual(1.0, u.membership(0.0))
        self.assertEqual(0.0, u.membership(1e-9))
        self.assertEqual(0.0, u.membership(-1e-9))

    def test_plateau_of_the_lower_side_gives_a_jump(self):
        u = validate(from_side_functions(_sides(
            [SideSegment.linear(0.0, 0.25, 0.0, 1.0), SideSegment.plateau(0.25, 0.75, 1.0), SideSegment.linear(0.75, 1.0, 1.0, 2.0)],
            [SideSegment.linear(0.0, 1.0, 3.0, 2.0)])))
        np.testing.assert_array_equal([1.0], u.jump_abscissae())
        self.assertEqual(0.75, u.membership(1.0))
        self.assertAlmostEqual(0.25, u.membership(1.0 - 1e-9), places=9)
        self.assertAlmostEqual(0.125, u.membership(0.5), places=12)
        self.assertAlmostEqual(0.875, u.membership(1.5), places=12)
        self.assertEqual((2.0, 2.0), u.core)

    def test_violations_are_reported_with_their_clause(self):
        with self.assertRaises(SideFunctionViolation) as ctx:
            from_side_functions(_sides([SideSegment.linear(0.0, 1.0, 1.0, 0.0)],
                                       [SideSegment.plateau(0.0, 1.0, 2.0)]))
        self.assertEqual('(i)', ctx.exception.clause)

        with self.assertRaises(SideFunctionViolation) as ctx:
            from_side_functions(_sides([SideSegment.plateau(0.0, 1.0, 0.0)],
                                       [SideSegment.linear(0.0, 1.0, 1.0, 2.0)]))
        self.assertEqual('(ii)', ctx.exception.clause)

        with self.assertRaises(SideFunctionViolation) as ctx:
            from_side_functions(_sides([SideSegment.linear(0.0, 1.0, 0.0, 3.0)],
                                       [SideSegment.linear(0.0, 1.0, 4.0, 2.0)]))
        self.assertEqual('(iv)', ctx.exception.clause)

    def test_sides_survive_a_trip_through_the_membership(self):
        tri_sides = _sides([SideSegment.linear(0.0, 1.0, 0.0, 1.0)], [SideSegment.linear(0.0, 1.0, 2.0, 1.0)])
        peak_sides = _peak().side_functions
        cases = {
            'plateau': _sides([SideSegment.linear(0.0, 0.25, 0.0, 1.0), SideSegment.plateau(0.25, 0.75, 1.0),
                               SideSegment.linear(0.75, 1.0, 1.0, 2.0)],
                              [SideSegment.linear(0.0, 1.0, 3.0, 2.0)]),
            'hermite sum': SideFunctions(minus=tri_sides.minus.add(peak_sides.minus), plus=tri_sides.plus.add(peak_sides.plus))
        }
        for name, sides in cases.items():
            with self.subTest(sides=name):
                rebuilt = to_side_functions(validate(from_side_functions(sides)))
                levels = _levels(sides, rebuilt)
                for expected, actual in zip(sides.cut(levels), rebuilt.cut(levels)):
                    np.testing.assert_allclose(expected, actual, rtol=0.0, atol=1e-10)

    def test_sum_pieces_invert_their_side_sum(self):
        tri_sides = _sides([SideSegment.linear(0.0, 1.0, 0.0, 1.0)], [SideSegment.linear(0.0, 1.0, 2.0, 1.0)])
        peak_sides = _peak().side_functions
        u = validate(from_side_functions(SideFunctions(minus=tri_sides.minus.add(peak_sides.minus),
                                                       plus=tri_sides.plus.add(peak_sides.plus))))
        for piece in u.left + u.right:
            self.assertIsInstance(piece, SumPiece)
            self.assertFalse(piece.has_closed_form_inverse)
            alphas = np.linspace(piece.alpha_lo, piece.alpha_hi, 41)[1:]
            np.testing.assert_allclose(alphas, piece.value(piece.inverse(alphas)), rtol=0.0, atol=1e-9)

        # the flat node of the smoother maps to a flat point of the sum
        x = float(u.alpha_cut(0.5).lo)
        self.assertAlmostEqual(0.0, x, places=12)
        self.assertAlmostEqual(0.0, float(u.derivative(x)), places=6)
