from typing import Dict

from core.invariants_context import InvariantsContext

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class ReportHandler:
    """
    Functional Interface for implementing an Handler.
    Every implementation should just take care on how to handle the report
    document received as parameter, built for the given context.
    """

    def handle_report(self, report: Dict, context: InvariantsContext):
        raise NotImplementedError(self.handle_report.__name__)
