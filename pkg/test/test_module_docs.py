import importlib
from unittest import TestCase

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

DOCUMENTED = [
    "bb_invariants", "core.alexander", "core.flag_homology",
    "core.jump_loci", "core.presentations", "core.sampling", "core.series",
    "core.triangulations", "core.utilities.errors", "core.utilities.linalg",
    "core.utilities.type_aliases", "customs.crosscheck_creation",
    "customs.report_creation", "data_management.json_format",
    "utilities.terminal"
]


class TestModuleDocs(TestCase):
    def test_DocstringBeforeImports(self):
        # a docstring placed after the imports leaves __doc__ empty
        for name in DOCUMENTED:
            module = importlib.import_module(name)
            self.assertIsNotNone(module.__doc__,
                                 "{} has no module docstring".format(name))
            self.assertNotEqual("", module.__doc__.strip())
