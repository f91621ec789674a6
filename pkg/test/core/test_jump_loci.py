from fractions import Fraction
from unittest import TestCase

from core.graph_core import Graph, WeightedGraph, VertexSet, path_graph, \
    cycle_graph, complete_graph, complete_multipartite
from core.jump_loci import SubspaceComponent, TorusComponent, \
    FullComponent, resonance_components, characteristic_components, \
    iota_pushforward_basis, subspace_intersection_dim, \
    resonance_membership_oracle, characteristic_membership_oracle, \
    odd_contraction, not_arrangement_certificate, not_artin_certificate
from core.presentations import make_character
from core.sampling import RationalSampler
from core.triangulations import build_special, extend_extra_special
from core.utilities.errors import GateError, TrivialCharacterError

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


def small_disk():
    return extend_extra_special(build_special([("2", "3")]))


class TestComponents(TestCase):
    def test_PathRaag(self):
        g = path_graph(3)
        resonance = resonance_components(g, "raag")
        characteristic = characteristic_components(g, "raag")
        self.assertEqual(1, len(resonance))
        self.assertEqual((0, 2), resonance[0].subset.indices)
        self.assertEqual(2, resonance[0].dimension)
        self.assertEqual((0, 2), characteristic[0].subset.indices)

    def test_PathBestvinaBradyIsWholeSpace(self):
        expected = [FullComponent("N", 2, "space")]
        actual = resonance_components(path_graph(3), "bb")
        self.assertEqual(expected, actual)
        expected = [FullComponent("N", 2, "torus")]
        actual = characteristic_components(path_graph(3), "bb")
        self.assertEqual(expected, actual)

    def test_CycleRaag(self):
        subsets = [c.subset.indices
                   for c in resonance_components(cycle_graph(4), "raag")]
        self.assertEqual([(0, 2), (1, 3)], subsets)

    def test_CycleBestvinaBradyRefused(self):
        self.assertRaises(GateError, resonance_components, cycle_graph(4),
                          "bb")

    def test_CompleteGraphsHaveNone(self):
        for n in (2, 4):
            for target in ("raag", "bb"):
                self.assertEqual([], resonance_components(complete_graph(n),
                                                          target))
                self.assertEqual([], characteristic_components(
                    complete_graph(n), target))

    def test_UnknownTarget(self):
        self.assertRaises(ValueError, resonance_components, path_graph(3),
                          "artin")

    def test_DiskComponents(self):
        disk = small_disk()
        components = resonance_components(disk.graph, "bb")
        self.assertTrue(len(components) > 0)
        for component in components:
            self.assertIsInstance(component, SubspaceComponent)
            self.assertEqual(7, component.ambient_dimension)
            self.assertEqual(len(component.subset), component.dimension)

    def test_DiskBoundaryComponentsMeet(self):
        components = resonance_components(small_disk().graph, "bb")
        boundary = [c for c in components if len(c.subset) == 6]
        self.assertEqual(4, len(boundary))
        for i, first in enumerate(boundary):
            for second in boundary[i + 1:]:
                self.assertEqual(5, subspace_intersection_dim([first,
                                                               second]))
        self.assertEqual(4, subspace_intersection_dim(boundary))


class TestComponentGeometry(TestCase):
    def test_PushforwardBasis(self):
        w = VertexSet.from_indices([0, 3], 4)
        expected = [(1, 0, 0), (-1, -1, -1)]
        actual = iota_pushforward_basis(w, 4)
        self.assertEqual(expected, actual)
        self.assertRaises(ValueError, iota_pushforward_basis,
                          VertexSet.full(3), 3)

    def test_SubspaceContains(self):
        w = VertexSet.from_indices([0, 2], 3)
        component = SubspaceComponent(w, "G", [(1, 0, 0), (0, 0, 1)], 3)
        self.assertTrue(component.contains([3, 0, Fraction(1, 2)]))
        self.assertFalse(component.contains([3, 1, 0]))

    def test_TorusPoints(self):
        w = VertexSet.from_indices([0, 2], 3)
        torus = TorusComponent(w, "G")
        self.assertEqual((2, 1, 3), torus.point([2, 3]))
        self.assertTrue(torus.contains([5, 1, 7]))
        self.assertFalse(torus.contains([5, 2, 7]))
        self.assertRaises(ValueError, torus.point, [2])

    def test_TorusModuloDiagonal(self):
        with_last = TorusComponent(VertexSet.from_indices([1, 3], 4), "N")
        point = with_last.point([2, 4])
        self.assertEqual((Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)),
                         point)
        self.assertTrue(with_last.contains(point))
        self.assertFalse(with_last.contains([2, 1, 3]))
        without_last = TorusComponent(VertexSet.from_indices([0, 1], 4), "N")
        self.assertTrue(without_last.contains([3, 5, 1]))
        self.assertFalse(without_last.contains([3, 5, 2]))
        self.assertEqual(3, without_last.ambient_dimension)

    def test_IntersectionDimension(self):
        components = resonance_components(cycle_graph(4), "raag")
        self.assertEqual(0, subspace_intersection_dim(components))
        self.assertEqual(2, subspace_intersection_dim(components[:1]))
        self.assertRaises(ValueError, subspace_intersection_dim, [])
        mixed = [components[0], FullComponent("N", 3, "space")]
        self.assertRaises(ValueError, subspace_intersection_dim, mixed)


class TestOracles(TestCase):
    def test_RaagResonance(self):
        g = path_graph(3)
        expected = [True, False, True]
        actual = [resonance_membership_oracle(g, "raag", a)
                  for a in ([1, 0, 2], [1, 1, 1], [0, 0, 0])]
        self.assertEqual(expected, actual)
        self.assertRaises(ValueError, resonance_membership_oracle, g, "raag",
                          [1, 2])

    def test_BestvinaBradyResonance(self):
        self.assertTrue(resonance_membership_oracle(path_graph(3), "bb",
                                                    [1, 5]))
        self.assertFalse(resonance_membership_oracle(complete_graph(4), "bb",
                                                     [1, 2, 3]))

    def test_RaagCharacteristic(self):
        g = path_graph(3)
        expected = [True, False]
        actual = [characteristic_membership_oracle(g, "raag", rho)
                  for rho in ([2, 1, 3], [2, 3, 5])]
        self.assertEqual(expected, actual)

    def test_BestvinaBradyCharacteristic(self):
        self.assertTrue(characteristic_membership_oracle(
            path_graph(3), "bb", [2, 3]
        ))
        self.assertFalse(characteristic_membership_oracle(
            complete_graph(4), "bb", [2, 3, 5]
        ))

    def test_BadCharacters(self):
        g = path_graph(3)
        self.assertRaises(TrivialCharacterError,
                          characteristic_membership_oracle, g, "raag",
                          [1, 1, 1])
        self.assertRaises(ValueError, characteristic_membership_oracle, g,
                          "raag", [0, 1, 2])
        self.assertRaises(ValueError, characteristic_membership_oracle, g,
                          "bb", [2, 3, 5])

    def test_CharacterObjects(self):
        g = path_graph(3)
        self.assertTrue(characteristic_membership_oracle(
            g, "raag", make_character([2, 1, 3], "raag")
        ))
        self.assertTrue(characteristic_membership_oracle(
            g, "bb", make_character([2, 3], "bb")
        ))
        self.assertRaises(ValueError, characteristic_membership_oracle, g,
                          "raag", make_character([2, 3], "bb"))
        self.assertRaises(TrivialCharacterError,
                          characteristic_membership_oracle, g, "bb",
                          make_character([1, 1], "bb"))

    def test_SampledPointsAgree(self):
        sampler = RationalSampler(3)
        graphs = [path_graph(4), cycle_graph(5), complete_multipartite([2, 2]),
                  complete_graph(4), small_disk().graph]
        for g in graphs:
            targets = ["raag"] if g == cycle_graph(5) or \
                g == complete_multipartite([2, 2]) else ["raag", "bb"]
            for target in targets:
                dimension = g.num_vertices if target == "raag" \
                    else g.num_vertices - 1
                resonance = resonance_components(g, target)
                for component in resonance:
                    for _ in range(0, 10):
                        a = sampler.resonance_point(component)
                        self.assertTrue(
                            resonance_membership_oracle(g, target, a),
                            "{} {} at {}".format(g, target, a)
                        )
                for _ in range(0, 10):
                    a = sampler.generic_vector(dimension)
                    expected = any(c.contains(a) for c in resonance)
                    actual = resonance_membership_oracle(g, target, a)
                    self.assertEqual(expected, actual,
                                     "{} {} at {}".format(g, target, a))
                characteristic = characteristic_components(g, target)
                for component in characteristic:
                    for _ in range(0, 10):
                        rho = sampler.character_point(component)
                        self.assertTrue(
                            characteristic_membership_oracle(g, target, rho),
                            "{} {} at {}".format(g, target, rho)
                        )
                for _ in range(0, 10):
                    rho = sampler.generic_character(dimension)
                    expected = any(c.contains(rho) for c in characteristic)
                    actual = characteristic_membership_oracle(g, target, rho)
                    self.assertEqual(expected, actual,
                                     "{} {} at {}".format(g, target, rho))

    def test_GenericPointsAreOffProperComponents(self):
        sampler = RationalSampler(8)
        for g in (cycle_graph(5), complete_multipartite([2, 2, 1])):
            for _ in range(0, 10):
                a = sampler.generic_vector(g.num_vertices)
                rho = sampler.generic_character(g.num_vertices)
                self.assertFalse(resonance_membership_oracle(g, "raag", a))
                self.assertFalse(
                    characteristic_membership_oracle(g, "raag", rho)
                )

class TestOddContraction(TestCase):
    def test_Triangle(self):
        wg = WeightedGraph(complete_graph(3), {(0, 1): 3, (1, 2): 2,
                                               (0, 2): 4})
        expected = Graph(["1+2", "3"], [("1+2", "3")])
        actual = odd_contraction(wg)
        self.assertEqual(expected, actual,
                         "Expected\n{}\nbut actual\n{}".format(
                             expected, actual
                         ))

    def test_AllEven(self):
        g = cycle_graph(4)
        wg = WeightedGraph(g, {edge: 2 for edge in g.edges})
        self.assertEqual(g, odd_contraction(wg))

    def test_AllOdd(self):
        g = cycle_graph(4)
        wg = WeightedGraph(g, {edge: 3 for edge in g.edges})
        self.assertEqual(Graph(["1+2+3+4"]), odd_contraction(wg))


class TestCertificates(TestCase):
    def test_NotArrangement(self):
        certificate = not_arrangement_certificate(small_disk().graph)
        self.assertEqual("not_arrangement", certificate.kind)
        witness = certificate.witness
        expected = (5, 7)
        actual = (witness["intersection_dimension"],
                  witness["ambient_dimension"])
        self.assertEqual(expected, actual,
                         "Expected\n{}\nbut actual\n{}".format(
                             expected, actual
                         ))

    def test_NotArrangementInconclusive(self):
        for g in (path_graph(4), complete_graph(4), Graph(["1"])):
            self.assertEqual("inconclusive",
                             not_arrangement_certificate(g).kind)

    def test_NotArtin(self):
        disk = small_disk()
        certificate = not_artin_certificate(disk.graph, disk)
        self.assertEqual("not_artin", certificate.kind)
        witness = certificate.witness
        expected = (7, 6, 4, 3)
        actual = (witness["v_prime"], witness["e_prime"], witness["r"],
                  witness["codimension"])
        self.assertEqual(expected, actual,
                         "Expected\n{}\nbut actual\n{}".format(
                             expected, actual
                         ))
        self.assertEqual(4, len(witness["boundary_edges"]))

    def test_NotArtinInconclusive(self):
        special = build_special([("2", "3")])
        self.assertEqual("inconclusive",
                         not_artin_certificate(special.graph, None).kind)
        self.assertEqual("inconclusive",
                         not_artin_certificate(special.graph, special).kind)
        disk = small_disk()
        self.assertEqual("inconclusive",
                         not_artin_certificate(special.graph, disk).kind)

    def test_ToDict(self):
        certificate = not_artin_certificate(path_graph(3), None)
        expected = ["justification", "kind", "witness"]
        self.assertEqual(expected, sorted(certificate.to_dict().keys()))
