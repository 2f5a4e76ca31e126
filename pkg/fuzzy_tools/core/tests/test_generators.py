import unittest
import numpy as np
from fuzzy_tools.core import GeneratorF, InvalidGenerator


class TestGenerators(unittest.TestCase):

    def test_smoothing_criterion(self):
        self.assertTrue(GeneratorF.sqrt().satisfies_smoothing_criterion)
        self.assertTrue(GeneratorF.circle().satisfies_smoothing_criterion)
        self.assertTrue(GeneratorF.power(0.25).satisfies_smoothing_criterion)
        self.assertFalse(GeneratorF.linear().satisfies_smoothing_criterion)
        self.assertFalse(GeneratorF.cosine().satisfies_smoothing_criterion)
        self.assertFalse(GeneratorF.power(2.0).satisfies_smoothing_criterion)

    def test_closed_forms(self):
        f = GeneratorF.sqrt()
        ts = np.linspace(0.0, 1.0, 11)
        np.testing.assert_allclose(ts, f.f_inverse(f.f(ts)), atol=1e-12)
        self.assertEqual(1.0, float(f.f(np.asarray(0.0))))
        self.assertEqual(0.0, float(f.f(np.asarray(1.0))))

        cosine = GeneratorF.cosine()
        self.assertAlmostEqual(-0.5 * np.pi, float(cosine.f_prime(np.asarray(1.0))), places=12)

    def test_from_text(self):
        self.assertEqual(GeneratorF.sqrt(), GeneratorF.from_text('sqrt'))
        self.assertEqual(GeneratorF.power(0.5), GeneratorF.from_text('power:0.5'))
        self.assertEqual('cosine', GeneratorF.from_text('cosine').name)
        self.assertEqual('circle', GeneratorF.from_text('circle').name)

        with self.assertRaises(InvalidGenerator):
            GeneratorF.from_text('power:steep')
        with self.assertRaises(InvalidGenerator):
            GeneratorF.from_text('spline')
        with self.assertRaises(InvalidGenerator):
            GeneratorF.power(0.0)

    def test_serialization(self):
        f = GeneratorF.power(0.25)
        self.assertEqual({'name': 'power', 'params': {'k': 0.25}}, f.to_dict())
        self.assertEqual(f, GeneratorF.from_dict(f.to_dict()))
        self.assertEqual(GeneratorF.circle(), GeneratorF.from_dict({'name': 'circle'}))

        with self.assertRaises(InvalidGenerator):
            GeneratorF.from_dict({'name': 'spline'})

        custom = GeneratorF(name='mine', f=lambda t: 1.0 - t, f_inverse=lambda s: 1.0 - s, f_prime=lambda t: -np.ones_like(t)).validate()
        with self.assertRaises(InvalidGenerator):
            custom.to_dict()

    def test_validate(self):
        increasing = GeneratorF(name='increasing', f=lambda t: t, f_inverse=lambda s: s, f_prime=lambda t: np.ones_like(t))
        with self.assertRaises(InvalidGenerator) as ctx:
            increasing.validate()
        self.assertIn('f(0)', str(ctx.exception))

        wrong_inverse = GeneratorF(name='wrong', f=lambda t: 1.0 - t, f_inverse=lambda s: s, f_prime=lambda t: -np.ones_like(t))
        with self.assertRaises(InvalidGenerator):
            wrong_inverse.validate()
