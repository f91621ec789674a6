from typing import Dict, List

from core.invariants_context import InvariantsContext
from core.report_handler import ReportHandler

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class CompositeReportHandler(ReportHandler):
    """
    A ReportHandler that accepts one or more ReportHandler and dispatch the
    report to each of them, in order.
    """

    def __init__(self, handlers_list: List[ReportHandler]):
        self._handlers = handlers_list

    def handle_report(self, report: Dict, context: InvariantsContext):
        for handler in self._handlers:
            handler.handle_report(report, context)
