from typing import Dict, Optional

from core.handlers.serializers.json_serializer import JSONSerializer
from core.invariants_context import InvariantsContext
from core.report_handler import ReportHandler

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class JSONReportHandler(ReportHandler):
    """
    Writes the report document as JSON, to filename or to the standard
    output when filename is None.
    """

    def __init__(self, filename: Optional[str] = None):
        self.json_serializer = JSONSerializer.new_instance(filename)

    def handle_report(self, report: Dict, context: InvariantsContext):
        self.json_serializer.serialize_document(report)
