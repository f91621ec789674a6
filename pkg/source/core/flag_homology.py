"""
Flag complexes of graphs, their reduced simplicial chain complexes over an
exact field, and the module structure of the homology of the Bestvina-Brady
group read off from them.
"""

import logging
from enum import Enum
from typing import List, Tuple, NamedTuple

import numpy as np
import pandas as pd
from sortedcontainers import SortedSet

from core.factories import FieldFactory
from core.graph_core import Graph, cliques, connected_components, \
    cone_vertices, is_connected
from core.utilities import linalg
from core.utilities.errors import ChainComplexError, GateError
from core.utilities.type_aliases import Simplex

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class FlagComplex:
    """
    Simplicial complex whose k-simplices are the (k+1)-cliques of a graph,
    each stored as a sorted tuple of vertex indices.
    """

    def __init__(self, graph: Graph):
        self.__graph = graph
        simplices = {}
        for clique in cliques(graph):
            simplices.setdefault(len(clique) - 1, []).append(clique)
        self.__simplices = simplices
        self.__positions = {
            dim: {simplex: i for i, simplex in enumerate(faces)}
            for dim, faces in simplices.items()
        }

    @property
    def graph(self) -> Graph:
        return self.__graph

    @property
    def dimension(self) -> int:
        # the empty complex has dimension -1
        return max(self.__simplices.keys(), default=-1)

    def simplices(self, dim: int) -> List[Simplex]:
        return list(self.__simplices.get(dim, []))

    def count(self, dim: int) -> int:
        if dim == -1:
            return 1
        return len(self.__simplices.get(dim, []))

    def position(self, simplex: Simplex) -> int:
        return self.__positions[len(simplex) - 1][simplex]

    def all_simplices(self) -> List[Simplex]:
        return [simplex for dim in sorted(self.__simplices.keys())
                for simplex in self.__simplices[dim]]


def flag_complex(g: Graph) -> FlagComplex:
    return FlagComplex(g)


class ChainComplex:
    """
    Augmented chain complex of a flag complex. The boundary d_k goes from
    k-chains to (k-1)-chains, with sign (-1)^(r-1) on the face omitting the
    r-th vertex of the sorted simplex; d_0 is the augmentation.
    """

    def __init__(self, complex_: FlagComplex, field: str = "q"):
        self.__complex = complex_
        self.__field = field
        self.__domain = FieldFactory.new_domain(field)
        self.__boundaries = {
            k: self._boundary_matrix(k)
            for k in range(0, complex_.dimension + 1)
        }
        self.__ranks = {}
        for k in range(1, complex_.dimension + 1):
            product = self.__boundaries[k - 1].dot(self.__boundaries[k])
            if np.any(product != 0):
                logging.getLogger(__name__).error(
                    "d_{} * d_{} is not zero".format(k - 1, k)
                )
                raise ChainComplexError(
                    "Boundary maps d_{} and d_{} do not compose to zero"
                    .format(k - 1, k)
                )

    def _boundary_matrix(self, k: int) -> np.ndarray:
        complex_ = self.__complex
        matrix = np.zeros((complex_.count(k - 1), complex_.count(k)),
                          dtype=np.int64)
        for column, simplex in enumerate(complex_.simplices(k)):
            if k == 0:
                matrix[0, column] = 1
                continue
            for r in range(0, len(simplex)):
                face = simplex[:r] + simplex[r + 1:]
                matrix[complex_.position(face), column] = (-1) ** r
        return matrix

    @property
    def field(self) -> str:
        return self.__field

    @property
    def complex(self) -> FlagComplex:
        return self.__complex

    @property
    def top(self) -> int:
        return self.__complex.dimension

    def boundary(self, k: int) -> np.ndarray:
        return self.__boundaries[k].copy()

    def boundary_rank(self, k: int) -> int:
        """
        Rank of d_k over the field, zero outside 0..top.
        """
        if k < 0 or k > self.top:
            return 0
        if k not in self.__ranks:
            matrix = self.__boundaries[k]
            self.__ranks[k] = linalg.rank(
                matrix.tolist(), matrix.shape[1], self.__domain
            )
        return self.__ranks[k]


class HomologyDegree(NamedTuple):
    degree: int
    chains: int
    cycles: int
    boundaries: int
    reduced_homology: int


def homology_ranks(k: FlagComplex, field: str = "q") -> List[HomologyDegree]:
    """
    Dimensions of the reduced chains, cycles, boundaries and homology in every
    degree from -1 to the dimension of k.
    """
    chain = ChainComplex(k, field)
    degrees = []
    for j in range(-1, k.dimension + 1):
        chains = k.count(j)
        cycles = chains - chain.boundary_rank(j) if j >= 0 else chains
        boundaries = chain.boundary_rank(j + 1)
        degrees.append(HomologyDegree(j, chains, cycles, boundaries,
                                      cycles - boundaries))
    return degrees


def homology_table(k: FlagComplex, field: str = "q") -> pd.DataFrame:
    table = pd.DataFrame(
        [list(row) for row in homology_ranks(k, field)],
        columns=list(HomologyDegree._fields)
    )
    table.insert(0, "field", field)
    return table


def _degree(table: List[HomologyDegree], j: int) -> HomologyDegree:
    for row in table:
        if row.degree == j:
            return row
    return HomologyDegree(j, 0, 0, 0, 0)


class BBHomologyModule(NamedTuple):
    """
    H_r of the Bestvina-Brady group over k[Z]: free_rank copies of the group
    ring plus trivial_rank copies of the trivial module.
    """
    degree: int
    free_rank: int
    trivial_rank: int

    @property
    def finitely_generated(self) -> bool:
        return self.free_rank == 0


def bb_homology_module(g: Graph, field: str, r: int) -> BBHomologyModule:
    if r < 1:
        raise ValueError("Degree must be at least 1, not {}".format(r))
    if not is_connected(g):
        raise GateError("The graph is not connected", "disconnected")
    row = _degree(homology_ranks(flag_complex(g), field), r - 1)
    return BBHomologyModule(r, row.reduced_homology, row.boundaries)


class IntegralGroup(NamedTuple):
    rank: int
    torsion: Tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.rank == 0 and len(self.torsion) == 0


def integral_h1(k: FlagComplex) -> IntegralGroup:
    """
    H_1 of the complex with integer coefficients, from the Smith normal form
    of d_2.
    """
    chain = ChainComplex(k, "q")
    edges = k.count(1)
    rank = edges - chain.boundary_rank(1) - chain.boundary_rank(2)
    torsion = ()
    if k.dimension >= 2:
        d2 = chain.boundary(2)
        torsion = tuple(factor for factor in linalg.integer_invariant_factors(
            d2.tolist(), d2.shape[1]) if factor > 1)
    return IntegralGroup(rank, torsion)


class SimplyConnected(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def _facets(simplex: Simplex) -> List[Simplex]:
    if len(simplex) == 1:
        return []
    return [simplex[:r] + simplex[r + 1:] for r in range(0, len(simplex))]


def collapses_to_point(k: FlagComplex) -> bool:
    """
    Greedy elementary collapses: a face with exactly one coface is removed
    together with it, until no such face is left.
    """
    cofaces = {simplex: set() for simplex in k.all_simplices()}
    for simplex in cofaces:
        for facet in _facets(simplex):
            cofaces[facet].add(simplex)
    free = SortedSet(key=lambda s: (-len(s), s))
    free.update(s for s, above in cofaces.items() if len(above) == 1)
    while len(free) > 0:
        face = free.pop(0)
        if face not in cofaces or len(cofaces[face]) != 1:
            continue
        coface = next(iter(cofaces[face]))
        for removed in (face, coface):
            for facet in _facets(removed):
                if facet in cofaces:
                    cofaces[facet].discard(removed)
                    if len(cofaces[facet]) == 1:
                        free.add(facet)
            del cofaces[removed]
    return len(cofaces) == 1


def simply_connected_status(k: FlagComplex,
                            disk_validated: bool = False
                            ) -> SimplyConnected:
    """
    Three-valued answer to whether the flag complex is simply connected.

    :param k: The flag complex.
    :param disk_validated: True when k comes from a validated disk
        triangulation.
    :return: NO on a certain obstruction, YES on a proof, UNKNOWN otherwise.
    """
    logger = logging.getLogger(__name__)
    graph = k.graph
    if len(connected_components(graph)) != 1:
        return SimplyConnected.NO
    if not integral_h1(k).trivial:
        return SimplyConnected.NO
    if len(cone_vertices(graph)) > 0 or graph.num_vertices == 1:
        return SimplyConnected.YES
    if disk_validated:
        return SimplyConnected.YES
    if collapses_to_point(k):
        return SimplyConnected.YES
    logger.warning("Simple connectivity of the flag complex undecided")
    return SimplyConnected.UNKNOWN


def require_simply_connected(g: Graph, assume_simply_connected: bool = False,
                             disk_validated: bool = False
                             ) -> SimplyConnected:
    """
    Gate for results that need a simply connected flag complex. A status NO
    is always refused, UNKNOWN only passes with the explicit override.
    """
    status = simply_connected_status(flag_complex(g), disk_validated)
    if status == SimplyConnected.YES:
        return status
    logger = logging.getLogger(__name__)
    if status == SimplyConnected.UNKNOWN and assume_simply_connected:
        logger.warning("Assuming the flag complex is simply connected")
        return status
    logger.warning("Simple connectivity gate refused with status {}".format(
        status.value
    ))
    raise GateError("Flag complex simply connected: {}".format(status.value),
                    status.value)


def truncated_cohomology_dims(g: Graph) -> Tuple[int, int, int]:
    """
    Dimensions in degrees 0, 1, 2 of the cohomology ring of the right-angled
    Artin group modulo the ideal generated by the sum of the degree one
    generators.
    """
    n = g.num_vertices
    # multiplication by the sum of generators: x -> x_w - x_u on edge (u, w)
    rows = []
    for u, w in g.edges:
        row = [0] * n
        row[u] = -1
        row[w] = 1
        rows.append(row)
    return 1, max(n - 1, 0), g.num_edges - linalg.rank(rows, n)
