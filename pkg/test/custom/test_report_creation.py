import json
from unittest import TestCase

from core.graph_core import Graph, WeightedGraph, path_graph, cycle_graph, \
    empty_graph, complete_multipartite
from core.handlers.serializers.json_serializer import JSONSerializer
from core.invariants_context import InvariantsContext, InvariantsArgs
from core.triangulations import build_special, extend_extra_special
from core.utilities.errors import GateError
from customs.report_creation import create_report, create_certificates, \
    exit_status, Gates, SCHEMA_VERSION

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


def context_of(graph, assume=False, **kwargs):
    args = InvariantsArgs(order=5, points=2,
                          assume_simply_connected=assume)
    return InvariantsContext(graph, args, **kwargs)


class TestGates(TestCase):
    def test_Statuses(self):
        expected = [(True, "yes", False), (True, "no", False),
                    (False, "no", False), (True, "unknown", True)]
        actual = []
        for graph in (path_graph(3), cycle_graph(4), empty_graph(2),
                      complete_multipartite([2, 2, 2])):
            gates = Gates(graph, False, False)
            actual.append((gates.connected, gates.status.value,
                           gates.refused))
        self.assertEqual(expected, actual,
                         "Expected\n{}\nbut actual\n{}".format(
                             expected, actual
                         ))

    def test_OverrideOnlyForUnknown(self):
        assumed = Gates(complete_multipartite([2, 2, 2]), True, False)
        self.assertTrue(assumed.simply_connected)
        self.assertFalse(assumed.refused)
        self.assertIsNone(assumed.reason())
        cycle = Gates(cycle_graph(4), True, False)
        self.assertFalse(cycle.assumed)
        self.assertEqual("flag complex simply connected: no", cycle.reason())


class TestPathReport(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.report = create_report(context_of(path_graph(3)))

    def test_Header(self):
        report = self.report
        expected = (SCHEMA_VERSION, 5, "q", 0)
        actual = (report["schema_version"], report["order"], report["field"],
                  report["seed"])
        self.assertEqual(expected, actual)
        self.assertEqual({}, report["omitted"])

    def test_Invariants(self):
        invariants = self.report["invariants"]
        self.assertEqual(1, invariants["connectivity"])
        self.assertEqual([1, 3, 2], invariants["clique_polynomial"])
        self.assertEqual({"coefficients": [0, 0, 1, 0], "truncated": False},
                         invariants["cut_polynomial"])
        self.assertEqual(["2"], invariants["cone_vertices"])
        self.assertEqual([["1", "3"]],
                         invariants["maximal_disconnected_subsets"])
        self.assertEqual(1, invariants["holonomy_h2_rank"])

    def test_Ranks(self):
        ranks = self.report["ranks"]
        expected = {
            "raag": {"lcs": [3, 1, 2, 3, 6], "chen": [3, 1, 2, 3, 4]},
            "bb": {"lcs": [2, 1, 2, 3, 6], "chen": [2, 1, 2, 3, 4]},
        }
        actual = {group: {kind: ranks[group][kind]["values"]
                          for kind in ("lcs", "chen")} for group in ranks}
        self.assertEqual(expected, actual,
                         "Expected\n{}\nbut actual\n{}".format(
                             expected, actual
                         ))

    def test_Finiteness(self):
        finiteness = self.report["finiteness"]
        self.assertTrue(finiteness["finitely_presented"])
        self.assertEqual({"apex": "2",
                          "graph": {"vertices": ["1", "3"], "edges": []}},
                         finiteness["isomorphic_to_raag_of"])

    def test_Presentations(self):
        presentations = self.report["presentations"]
        self.assertEqual(2, presentations["raag"]["relators"])
        self.assertEqual([1, 1], presentations["alexander"]["shape"])
        self.assertEqual(2, presentations["tree_reduced"]["generators"])
        self.assertEqual(0, presentations["tree_reduced"]["relators"])

    def test_JumpLoci(self):
        jump_loci = self.report["jump_loci"]
        resonance = jump_loci["raag"]["resonance"]
        self.assertEqual([{"subset": ["1", "3"], "kind": "subspace",
                           "dimension": 2, "ambient_dimension": 3,
                           "basis": [["1", "0", "0"], ["0", "0", "1"]]}],
                         resonance)
        self.assertEqual("full-space", jump_loci["bb"]["resonance"][0]["kind"])

    def test_CertificatesAndCrossCheck(self):
        certificates = self.report["certificates"]
        self.assertEqual("inconclusive", certificates["not_artin"]["kind"])
        self.assertEqual("inconclusive",
                         certificates["not_arrangement"]["kind"])
        crosscheck = self.report["crosscheck"]
        self.assertEqual(crosscheck["total"], crosscheck["agreed"])
        self.assertEqual(0, exit_status(self.report))

    def test_Serializable(self):
        text = json.dumps(self.report)
        self.assertEqual(self.report, json.loads(text))


class TestOmittedSections(TestCase):
    def test_Cycle(self):
        report = create_report(context_of(cycle_graph(4)))
        self.assertIn("presentations.bb", report["omitted"])
        self.assertIn("jump_loci.bb", report["omitted"])
        self.assertNotIn("bb", report["jump_loci"])
        self.assertIn("bb", report["ranks"])
        self.assertEqual(
            ["Δ_Γ not simply connected; N_Γ not finitely presented"],
            report["finiteness"]["notes"]
        )
        self.assertEqual("inconclusive",
                         report["certificates"]["not_arrangement"]["kind"])
        self.assertEqual(0, exit_status(report))

    def test_Disconnected(self):
        report = create_report(context_of(empty_graph(2)))
        self.assertEqual(["raag"], list(report["ranks"].keys()))
        for key in ("ranks.bb", "homology.bb_modules", "presentations.bb",
                    "jump_loci.bb"):
            self.assertIn(key, report["omitted"])
        self.assertFalse(report["finiteness"]["finitely_generated"])

    def test_UndecidedGate(self):
        octahedron = complete_multipartite([2, 2, 2])
        report = create_report(context_of(octahedron))
        self.assertIn("certificates", report["omitted"])
        self.assertEqual(2, exit_status(report))
        self.assertRaises(GateError, create_certificates,
                          context_of(octahedron))

    def test_UndecidedGateAssumed(self):
        octahedron = complete_multipartite([2, 2, 2])
        report = create_report(context_of(octahedron, True))
        self.assertTrue(report["gates"]["assumed"])
        self.assertIn("certificates", report)
        self.assertEqual(3, len(report["jump_loci"]["bb"]["resonance"]))
        self.assertEqual(0, exit_status(report))


class TestTriangulatedReport(TestCase):
    def test_ExtraSpecialDisk(self):
        disk = extend_extra_special(build_special([("2", "3")]))
        context = context_of(disk.graph, triangulation=disk)
        document = create_certificates(context)
        self.assertEqual("not_artin",
                         document["certificates"]["not_artin"]["kind"])
        self.assertEqual("not_arrangement",
                         document["certificates"]["not_arrangement"]["kind"])
        self.assertTrue(document["gates"]["disk_validated"])

    def test_TriangulationAndOddContraction(self):
        disk = build_special([("2", "3")])
        graph = disk.graph
        weighted = WeightedGraph(graph, {edge: 2 for edge in graph.edges})
        report = create_report(context_of(graph, weighted=weighted,
                                          triangulation=disk))
        self.assertEqual([], report["triangulation"]["failures"])
        self.assertTrue(report["triangulation"]["matches_graph"])
        contraction = report["odd_contraction"]
        self.assertEqual(report["graph"]["vertices"],
                         contraction["graph"]["vertices"])
        self.assertEqual(report["ranks"]["raag"]["lcs"],
                         contraction["ranks"]["lcs"])


class TestExitStatus(TestCase):
    def test_Codes(self):
        disagreement = {"crosscheck": {"disagreements": [{"point": []}]},
                        "gates": {"simply_connected": "yes"}}
        refused = {"gates": {"simply_connected": "unknown",
                             "assumed": False}}
        assumed = {"gates": {"simply_connected": "unknown", "assumed": True}}
        expected = [3, 2, 0, 0]
        actual = [exit_status(document) for document in
                  (disagreement, refused, assumed, {"disagreements": []})]
        self.assertEqual(expected, actual)

    def test_SingleVertex(self):
        report = create_report(context_of(Graph(["v"])))
        self.assertEqual(0, exit_status(report))
        self.assertIn("bb", report["crosscheck"]["skipped"])


class TestReproducibility(TestCase):
    def test_SameSeedSameBytes(self):
        serializer = JSONSerializer.new_instance()
        graph = build_special([("2", "3"), ("2", "4")]).graph
        expected = serializer.to_text(create_report(context_of(graph)))
        actual = serializer.to_text(create_report(context_of(graph)))
        self.assertEqual(expected, actual)
