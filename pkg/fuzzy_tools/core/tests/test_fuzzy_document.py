import os
import json
import tempfile
import unittest
from fuzzy_tools.core import FuzzyNumber, LinearPiece, QuadraticPiece, HermitePiece, GeneratorPiece, GeneratorF, validate
from fuzzy_tools.core import FuzzyFileError, NonMonotonePiece, dumps, loads, load, save, number_to_dict, piece_from_dict


def _tri() -> FuzzyNumber:
    return validate(FuzzyNumber.build(
        support=(0.0, 2.0),
        core=(1.0, 1.0),
        left=[LinearPiece.through(0.0, 0.0, 1.0, 1.0)],
        right=[LinearPiece.through(1.0, 1.0, 2.0, 0.0)]
    ))


def _mixed() -> FuzzyNumber:
    # one piece of each serializable closed form
    return validate(FuzzyNumber.build(
        support=(-1.0, 3.0),
        core=(0.0, 0.0),
        left=[GeneratorPiece.build(GeneratorF.circle(), 1.0, -1)],
        right=[HermitePiece.monotone_through([0.0, 0.5, 1.0], [1.0, 0.7, 0.6]),
               QuadraticPiece(x_lo=1.0, x_hi=3.0, a=0.0, b=-0.3, c=0.9)]
    ))


class TestFuzzyDocument(unittest.TestCase):

    def test_round_trip(self):
        for u in (_tri(), _mixed()):
            text = dumps(u)
            document = loads(text)
            self.assertEqual(u, document.number)
            self.assertIsNone(document.smoother_spec)
            self.assertEqual(text, dumps(document.number))

    def test_shortest_round_trip_decimals(self):
        u = validate(FuzzyNumber.build(
            support=(0.1, 0.3),
            core=(0.2, 0.2),
            left=[LinearPiece.through(0.1, 0.0, 0.2, 1.0)],
            right=[LinearPiece.through(0.2, 1.0, 0.3, 0.0)]
        ))
        data = json.loads(dumps(u))
        self.assertEqual([0.1, 0.3], data['support'])
        self.assertEqual(u, loads(dumps(u)).number)

    def test_smoother_spec_is_kept(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, 'w.fz')
            save(path, _tri(), smoother_spec={'p': 0.5})
            document = load(path)
            self.assertEqual({'p': 0.5}, document.smoother_spec)
            self.assertEqual(path, document.path)

    def test_errors_name_the_field(self):
        data = number_to_dict(_tri())

        data['left'][0]['kind'] = 'spline'
        with self.assertRaises(FuzzyFileError) as ctx:
            loads(json.dumps(data), path='bad.fz')
        self.assertEqual('left[0].kind', ctx.exception.field)
        self.assertIn('bad.fz', str(ctx.exception))

        data = number_to_dict(_tri())
        del data['right'][0]['params']['b']
        with self.assertRaises(FuzzyFileError) as ctx:
            loads(json.dumps(data))
        self.assertEqual('right[0].params.b', ctx.exception.field)

        data = number_to_dict(_tri())
        data['support'] = [0.0]
        with self.assertRaises(FuzzyFileError) as ctx:
            loads(json.dumps(data))
        self.assertEqual('support', ctx.exception.field)

    def test_invalid_documents(self):
        with self.assertRaises(FuzzyFileError):
            loads('{"support": ')
        with self.assertRaises(FuzzyFileError):
            load('/this/file/does/not/exist.fz')
        with self.assertRaises(FuzzyFileError):
            piece_from_dict({'kind': 'monotone-hermite', 'domain': [0.0, 1.0], 'params': {'nodes': [[0.0, 0.0, 1.0]]}})

        # parsed, but not a fuzzy number
        data = number_to_dict(_tri())
        data['left'][0]['params']['a'] = -1.0
        data['left'][0]['params']['b'] = 1.0
        with self.assertRaises(NonMonotonePiece):
            loads(json.dumps(data))
