import io
import json
import os
import shutil
from contextlib import redirect_stdout
from unittest import TestCase

from core.handlers.serializers.json_serializer import JSONSerializer

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class TestJSONSerializer(TestCase):
    def setUp(self):
        self.output_dir = "test-json-dir"
        self.document = {"schema_version": 1, "ranks": [2, 1, 2],
                         "omitted": {}}

    def tearDown(self):
        if os.path.isdir(self.output_dir):
            shutil.rmtree(self.output_dir)

    def test_WritesFile(self):
        filename = self.output_dir + "/nested/report.json"
        JSONSerializer.new_instance(filename).serialize_document(
            self.document
        )
        with open(filename) as output:
            actual = json.load(output)
        self.assertEqual(self.document, actual)

    def test_StandardOutput(self):
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            JSONSerializer.new_instance().serialize_document(self.document)
        self.assertEqual(self.document, json.loads(buffer.getvalue()))

    def test_StableText(self):
        serializer = JSONSerializer.new_instance()
        expected = serializer.to_text(dict(self.document))
        actual = serializer.to_text(self.document)
        self.assertEqual(expected, actual)
        self.assertTrue(actual.startswith('{\n  "schema_version": 1,'))
        self.assertTrue(actual.endswith("}\n"))
