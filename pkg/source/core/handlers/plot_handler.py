import os
from typing import Dict, Iterable, List, Tuple

from core.handlers.serializers.plot_serializer import PlotSerializer
from core.invariants_context import InvariantsContext
from core.report_handler import ReportHandler

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


def default_plotname_creator(directory: str, names: List[str]
                             ) -> Iterable[str]:
    pid = os.getpid()
    for name in names:
        yield "{}/{}_{}.png".format(directory, name, pid)


def rank_series(report: Dict) -> List[Tuple[str, Dict[str, List[int]]]]:
    """
    For each group of the report with ranks, the name of the plot and the
    lcs and chen vectors to draw on it.
    """
    series = []
    for group, ranks in report.get("ranks", {}).items():
        series.append(("{}_ranks".format(group),
                       {kind: ranks[kind]["values"] for kind in ("lcs", "chen")
                        if kind in ranks}))
    return series


class PlotReportHandler(ReportHandler):
    def __init__(self, directory: str,
                 name_creator=default_plotname_creator):
        self.plot_serializer = PlotSerializer.new_instance(directory,
                                                           name_creator)

    def handle_report(self, report: Dict, context: InvariantsContext):
        self.plot_serializer.serialize_series(rank_series(report))
