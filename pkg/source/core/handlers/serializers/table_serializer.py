import logging
import os
from typing import Dict

import pandas as pd

from core.flag_homology import flag_complex, homology_table
from core.graph_core import Graph

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class TableSerializer:
    """
    This class represents a serializer of the tabular parts of a report in
    tab separated files.
    """

    def __init__(self, directory: str, prefix: str):
        self._directory = directory
        self._prefix = prefix
        self._separator = "\t"

    @classmethod
    def new_instance(cls, output_dir: str, prefix: str) -> 'TableSerializer':
        """
        Creates a new instance of a TableSerializer.
        :param output_dir: Name of the directory where to put the tables. It's
        created if it doesn't exist.
        :param prefix: Prefix of every file name.
        :return: An instance of TableSerializer.
        """
        if not os.path.isdir(output_dir):
            os.makedirs(output_dir)
        if prefix == "":
            raise RuntimeError("Prefix for table serialization is empty.")
        return TableSerializer(output_dir, prefix)

    def _path(self, name: str) -> str:
        return "{}/{}_{}.tsv".format(self._directory, self._prefix, name)

    @staticmethod
    def ranks_frame(report: Dict) -> pd.DataFrame:
        """
        One row per degree, one column per group and kind of rank. Shorter
        vectors leave empty cells.
        """
        columns = {}
        for group, ranks in report.get("ranks", {}).items():
            for kind in ("lcs", "chen"):
                if kind in ranks:
                    columns["{}_{}".format(group, kind)] = pd.Series(
                        ranks[kind]["values"], dtype="Int64"
                    )
        frame = pd.DataFrame(columns)
        frame.insert(0, "degree", range(1, len(frame) + 1))
        return frame

    def serialize_ranks(self, report: Dict):
        filename = self._path("ranks")
        self.ranks_frame(report).to_csv(filename, sep=self._separator,
                                        index=False)
        logging.getLogger(__name__).info(
            "Created file {}".format(filename)
        )

    def serialize_homology(self, graph: Graph, field: str):
        filename = self._path("homology")
        homology_table(flag_complex(graph), field).to_csv(
            filename, sep=self._separator, index=False
        )
        logging.getLogger(__name__).info(
            "Created file {}".format(filename)
        )
