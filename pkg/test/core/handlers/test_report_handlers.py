import json
import os
import shutil
from unittest import TestCase

from core.graph_core import path_graph
from core.handlers.composite_handler import CompositeReportHandler
from core.handlers.json_handler import JSONReportHandler
from core.handlers.plot_handler import rank_series, default_plotname_creator
from core.handlers.table_handler import TableReportHandler
from core.invariants_context import InvariantsContext, InvariantsArgs
from core.report_handler import ReportHandler

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class RecordingHandler(ReportHandler):
    def __init__(self, calls):
        self.calls = calls

    def handle_report(self, report, context):
        self.calls.append(report["name"])


class TestReportHandlers(TestCase):
    def setUp(self):
        self.output_dir = "test-handlers-dir"
        self.context = InvariantsContext(path_graph(3), InvariantsArgs())
        self.report = {"name": "p3", "ranks": {
            "raag": {"lcs": {"values": [3, 2], "truncated": False},
                     "chen": {"values": [3, 2], "truncated": False}},
        }}

    def tearDown(self):
        if os.path.isdir(self.output_dir):
            shutil.rmtree(self.output_dir)

    def test_InterfaceNotImplemented(self):
        self.assertRaises(NotImplementedError, ReportHandler().handle_report,
                          self.report, self.context)

    def test_CompositeKeepsOrder(self):
        calls = []
        composite = CompositeReportHandler([RecordingHandler(calls),
                                            RecordingHandler(calls)])
        composite.handle_report(self.report, self.context)
        self.assertEqual(["p3", "p3"], calls)

    def test_JSONAndTables(self):
        filename = self.output_dir + "/report.json"
        CompositeReportHandler([
            JSONReportHandler(filename), TableReportHandler(self.output_dir)
        ]).handle_report(self.report, self.context)
        with open(filename) as output:
            self.assertEqual(self.report, json.load(output))
        for name in ("invariants_ranks.tsv", "invariants_homology.tsv"):
            self.assertTrue(os.path.isfile(self.output_dir + "/" + name))

    def test_RankSeries(self):
        expected = [("raag_ranks", {"lcs": [3, 2], "chen": [3, 2]})]
        self.assertEqual(expected, rank_series(self.report))
        self.assertEqual([], rank_series({}))

    def test_PlotNames(self):
        expected = ["d/raag_ranks_{}.png".format(os.getpid())]
        actual = list(default_plotname_creator("d", ["raag_ranks"]))
        self.assertEqual(expected, actual)
