from fractions import Fraction
from unittest import TestCase

from core.graph_core import VertexSet
from core.jump_loci import SubspaceComponent, TorusComponent, FullComponent
from core.sampling import RationalSampler

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class TestRationalSampler(TestCase):
    def test_SameSeedSamePoints(self):
        first = RationalSampler(11)
        second = RationalSampler(11)
        expected = [first.generic_vector(4) for _ in range(0, 5)]
        actual = [second.generic_vector(4) for _ in range(0, 5)]
        self.assertEqual(expected, actual)
        self.assertEqual(11, first.seed)

    def test_Bounds(self):
        sampler = RationalSampler(0, 3, 2)
        for _ in range(0, 200):
            value = sampler.rational(True, True)
            self.assertNotEqual(0, value)
            self.assertNotEqual(1, value)
            self.assertLessEqual(abs(value.numerator), 3)
            self.assertLessEqual(value.denominator, 2)

    def test_Distinct(self):
        values = RationalSampler(5).distinct(6)
        self.assertEqual(6, len(set(values)))

    def test_ResonancePointOnComponent(self):
        sampler = RationalSampler(2)
        w = VertexSet.from_indices([1, 3], 4)
        component = SubspaceComponent(w, "G", [(0, 1, 0, 0), (0, 0, 0, 1)],
                                      4)
        for _ in range(0, 20):
            point = sampler.resonance_point(component)
            self.assertTrue(component.contains(point))
            self.assertTrue(any(x != 0 for x in point))
            self.assertEqual(Fraction(0), point[0])

    def test_CharacterPointOnComponent(self):
        sampler = RationalSampler(4)
        torus = TorusComponent(VertexSet.from_indices([0, 2], 3), "N")
        for _ in range(0, 20):
            point = sampler.character_point(torus)
            self.assertTrue(torus.contains(point))
            self.assertFalse(all(x == 1 for x in point))

    def test_FullComponents(self):
        sampler = RationalSampler(8)
        point = sampler.character_point(FullComponent("N", 3, "torus"))
        self.assertEqual(3, len(point))
        self.assertNotIn(1, point)
        self.assertEqual(2, len(sampler.resonance_point(
            FullComponent("N", 2, "space")
        )))
