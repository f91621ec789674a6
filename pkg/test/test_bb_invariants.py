import io
import json
import os
import shutil
from contextlib import redirect_stdout
from unittest import TestCase
from unittest.mock import patch

from bb_invariants import main
from core.utilities.errors import IdentityViolationError, ChainComplexError

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class TestCommandLine(TestCase):
    def setUp(self):
        self.output_dir = "test-command-dir"
        os.makedirs(self.output_dir, exist_ok=True)

    def tearDown(self):
        if os.path.isdir(self.output_dir):
            shutil.rmtree(self.output_dir)

    def write_graph(self, name: str, document) -> str:
        filename = "{}/{}.json".format(self.output_dir, name)
        with open(filename, "w") as output:
            json.dump(document, output)
        return filename

    def run_main(self, argv):
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = main(argv)
        return code, buffer.getvalue()

    def test_Report(self):
        filename = self.write_graph("p3", {
            "vertices": ["1", "2", "3"], "edges": [["1", "2"], ["2", "3"]]
        })
        code, text = self.run_main(["report", filename, "--order", "4",
                                    "--points", "2"])
        self.assertEqual(0, code)
        report = json.loads(text)
        self.assertEqual([2, 1, 2, 3], report["ranks"]["bb"]["lcs"]["values"])

    def test_ReportToFileAndTables(self):
        filename = self.write_graph("c4", {
            "vertices": ["a", "b", "c", "d"],
            "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]]
        })
        out = self.output_dir + "/c4_report.json"
        tables = self.output_dir + "/tables"
        code, _ = self.run_main(["report", filename, "--order", "3",
                                 "--points", "1", "--out", out, "-d",
                                 tables])
        self.assertEqual(0, code)
        with open(out) as output:
            report = json.load(output)
        self.assertEqual(2, report["invariants"]["connectivity"])
        for name in ("invariants_ranks.tsv", "invariants_homology.tsv"):
            self.assertTrue(os.path.isfile(tables + "/" + name))

    def test_InvalidInput(self):
        broken = self.output_dir + "/broken.json"
        with open(broken, "w") as output:
            output.write('{"vertices": [')
        expected = [1, 1, 1]
        actual = [self.run_main(argv)[0] for argv in (
            ["report", broken],
            ["report", self.output_dir + "/missing.json"],
            ["generate", "special", "--steps", "1-5"],
        )]
        self.assertEqual(expected, actual)

    def write_octahedron(self) -> str:
        names = [str(i) for i in range(1, 7)]
        edges = [[u, v] for i, u in enumerate(names) for v in names[i + 1:]
                 if (int(u) - 1) // 2 != (int(v) - 1) // 2]
        return self.write_graph("octahedron", {"vertices": names,
                                               "edges": edges})

    def test_UndecidedGate(self):
        filename = self.write_octahedron()
        code, _ = self.run_main(["distinguish", filename])
        self.assertEqual(2, code)
        code, text = self.run_main(["distinguish", filename,
                                    "--assume-simply-connected"])
        self.assertEqual(0, code)
        self.assertIn("certificates", json.loads(text))

    def test_GenerateThenDistinguish(self):
        out = self.output_dir + "/disk.json"
        code, _ = self.run_main(["generate", "extra-special", "--steps", "2-3",
                                 "--out", out])
        self.assertEqual(0, code)
        code, text = self.run_main(["distinguish", out])
        self.assertEqual(0, code)
        certificates = json.loads(text)["certificates"]
        self.assertEqual("not_artin", certificates["not_artin"]["kind"])

    def test_GenerateRandom(self):
        code, text = self.run_main(["generate", "special", "--seed", "3",
                                    "--count", "4"])
        self.assertEqual(0, code)
        document = json.loads(text)
        self.assertEqual(7, len(document["vertices"]))
        self.assertEqual(4, len(document["triangulation"]["steps"]))

    def test_CrossCheck(self):
        filename = self.write_graph("k4", {
            "vertices": ["1", "2", "3", "4"],
            "edges": [["1", "2"], ["1", "3"], ["1", "4"], ["2", "3"],
                      ["2", "4"], ["3", "4"]]
        })
        code, text = self.run_main(["crosscheck", filename, "--points", "2"])
        self.assertEqual(0, code)
        summary = json.loads(text)["crosscheck"]
        self.assertEqual(summary["total"], summary["agreed"])

    def test_CrossCheckUndecidedGate(self):
        filename = self.write_octahedron()
        code, text = self.run_main(["crosscheck", filename, "--points", "2",
                                    "--order", "3"])
        self.assertEqual(2, code)
        document = json.loads(text)
        self.assertEqual("unknown", document["gates"]["simply_connected"])
        self.assertIn("bb", document["crosscheck"]["skipped"])
        code, text = self.run_main(["crosscheck", filename, "--points", "2",
                                    "--order", "3",
                                    "--assume-simply-connected"])
        self.assertEqual(0, code)
        self.assertTrue(json.loads(text)["gates"]["assumed"])

    def test_InternalIdentityFailure(self):
        filename = self.write_graph("p2", {"vertices": ["1", "2"],
                                           "edges": [["1", "2"]]})
        for error in (IdentityViolationError("Negative rank", 3),
                      ChainComplexError("Boundary squares to nonzero")):
            with patch("bb_invariants.create_report", side_effect=error):
                code, _ = self.run_main(["report", filename])
            self.assertEqual(3, code)
