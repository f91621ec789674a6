from logging import Logger
from typing import Optional

import psutil

from core.graph_core import Graph, WeightedGraph
from core.triangulations import DiskTriangulation, validate

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class InvariantsContext:
    """
    Represents the context of the current run: the graph under study, its
    optional edge weights and disk triangulation, and the arguments chosen by
    the user.
    """

    def __init__(self, graph: Graph, args: 'InvariantsArgs',
                 weighted: Optional[WeightedGraph] = None,
                 triangulation: Optional[DiskTriangulation] = None):
        self.__graph = graph
        self.__args = args
        if weighted is not None and weighted.graph != graph:
            raise ValueError("Weights refer to a different graph")
        self.__weighted = weighted
        self.__triangulation = triangulation
        self.__disk_validated = triangulation is not None and \
            triangulation.graph == graph and validate(triangulation).passed

    @property
    def graph(self) -> Graph:
        return self.__graph

    @property
    def args(self) -> 'InvariantsArgs':
        return self.__args

    @property
    def weighted(self) -> Optional[WeightedGraph]:
        return self.__weighted

    @property
    def triangulation(self) -> Optional[DiskTriangulation]:
        return self.__triangulation

    @property
    def disk_validated(self) -> bool:
        return self.__disk_validated

    def __str__(self) -> str:
        return "InvariantsContext({} vertices, {} edges)".format(
            self.__graph.num_vertices, self.__graph.num_edges
        )

    __repr__ = __str__


class InvariantsArgs:
    """
    This class represents the arguments of a computation. Except for the
    number of workers, each argument is read-only and is initialized at class
    instantiation.
    """

    def __init__(self, order: int = 12, field: str = "q", seed: int = 0,
                 max_subset_size: Optional[int] = None,
                 assume_simply_connected: bool = False, workers: int = 1,
                 points: int = 10):
        if order < 1:
            raise ValueError("Truncation order must be positive")
        if points < 1:
            raise ValueError("Number of points must be positive")
        if max_subset_size is not None and max_subset_size < 2:
            raise ValueError("Subset size cap must be at least 2")
        self.__order = order
        self.__field = field
        self.__seed = seed
        self.__max_subset_size = max_subset_size
        self.__assume = assume_simply_connected
        self.__workers = max(workers, 1)
        self.__points = points

    @property
    def order(self) -> int:
        return self.__order

    @property
    def field(self) -> str:
        return self.__field

    @property
    def seed(self) -> int:
        return self.__seed

    @property
    def max_subset_size(self) -> Optional[int]:
        return self.__max_subset_size

    @property
    def assume_simply_connected(self) -> bool:
        return self.__assume

    @property
    def workers(self) -> int:
        return self.__workers

    @workers.setter
    def workers(self, workers: int):
        # if the number is less than one, then use all the CPUs available
        if workers < 1:
            workers = psutil.cpu_count()
        self.__workers = workers

    @property
    def points(self) -> int:
        return self.__points

    def log_args(self, logger: Logger):
        """
        Used to log the arguments inserted by the user.
        :param logger: the logging object to use
        """
        logger.info("Truncation order is {}".format(self.__order))
        logger.info("Coefficient field is {}".format(self.__field))
        logger.info("Seed is {}".format(self.__seed))
        logger.info("Subset size cap is {}".format(self.__max_subset_size))
        logger.info("Assume simply connected is {}".format(self.__assume))
        logger.info("Number of workers is {}".format(self.__workers))
        logger.info("Points per component is {}".format(self.__points))
