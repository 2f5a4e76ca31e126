import unittest
from fuzzy_tools.core import FuzzyNumber, LinearPiece, QuadraticPiece, validate, is_valid
from fuzzy_tools.core import GapInBranch, NonMonotonePiece, CoreNotReached, ValueOutOfRange, Branch


def _falling_right() -> LinearPiece:
    return LinearPiece.through(1.0, 1.0, 2.0, 0.0)


class TestFuzzyValidator(unittest.TestCase):

    def test_valid_numbers(self):
        tri = FuzzyNumber.build(support=(0.0, 2.0), core=(1.0, 1.0),
                                left=[LinearPiece.through(0.0, 0.0, 1.0, 1.0)], right=[_falling_right()])
        self.assertIs(tri, validate(tri))

        w = FuzzyNumber.build(support=(-1.0, 1.0), core=(0.0, 0.0),
                              left=[QuadraticPiece(x_lo=-1.0, x_hi=0.0, a=-1.0, b=0.0, c=1.0)],
                              right=[QuadraticPiece(x_lo=0.0, x_hi=1.0, a=-1.0, b=0.0, c=1.0)])
        self.assertTrue(is_valid(w))

    def test_gap_in_branch(self):
        u = FuzzyNumber.build(support=(0.0, 2.0), core=(1.0, 1.0),
                              left=[LinearPiece(x_lo=0.0, x_hi=0.5, a=1.0, b=0.0)], right=[_falling_right()])
        with self.assertRaises(GapInBranch) as ctx:
            validate(u)
        self.assertEqual(Branch.LEFT, ctx.exception.branch)
        self.assertFalse(is_valid(u))

    def test_pieces_not_contiguous(self):
        u = FuzzyNumber.build(support=(0.0, 2.0), core=(1.0, 1.0),
                              left=[LinearPiece.through(0.0, 0.0, 0.4, 0.4), LinearPiece.through(0.5, 0.5, 1.0, 1.0)],
                              right=[_falling_right()])
        with self.assertRaises(GapInBranch) as ctx:
            validate(u)
        self.assertEqual(1, ctx.exception.piece_index)
        self.assertIn('piece 1', str(ctx.exception))

    def test_non_monotone_piece(self):
        u = FuzzyNumber.build(support=(0.0, 2.0), core=(1.0, 1.0),
                              left=[LinearPiece(x_lo=0.0, x_hi=1.0, a=-1.0, b=1.0)], right=[_falling_right()])
        with self.assertRaises(NonMonotonePiece):
            validate(u)

    def test_value_out_of_range(self):
        u = FuzzyNumber.build(support=(0.0, 2.0), core=(1.0, 1.0),
                              left=[LinearPiece(x_lo=0.0, x_hi=1.0, a=2.0, b=-0.5)], right=[_falling_right()])
        with self.assertRaises(ValueOutOfRange) as ctx:
            validate(u)
        self.assertEqual(0, ctx.exception.piece_index)

    def test_core_outside_support(self):
        u = FuzzyNumber.build(support=(0.0, 2.0), core=(3.0, 3.0))
        with self.assertRaises(CoreNotReached):
            validate(u)

    def test_membership_one_outside_core(self):
        # the left branch reaches 1 at x=0.5, half way to the declared core
        u = FuzzyNumber.build(support=(0.0, 2.0), core=(1.0, 1.0),
                              left=[LinearPiece.through(0.0, 0.0, 0.5, 1.0), LinearPiece(x_lo=0.5, x_hi=1.0, a=0.0, b=1.0)],
                              right=[_falling_right()])
        with self.assertRaises(CoreNotReached):
            validate(u)
