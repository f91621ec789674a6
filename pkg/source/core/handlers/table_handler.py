from typing import Dict

from core.handlers.serializers.table_serializer import TableSerializer
from core.invariants_context import InvariantsContext
from core.report_handler import ReportHandler

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class TableReportHandler(ReportHandler):
    """
    A simple ReportHandler with just a TSV table serializer for the rank
    vectors and the homology table.
    """

    def __init__(self, output_dir: str, prefix: str = "invariants"):
        self.table_serializer = TableSerializer.new_instance(output_dir,
                                                             prefix)

    def handle_report(self, report: Dict, context: InvariantsContext):
        self.table_serializer.serialize_ranks(report)
        self.table_serializer.serialize_homology(context.graph,
                                                 context.args.field)
