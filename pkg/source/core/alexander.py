"""
Presentation matrices of the Alexander invariant of a right-angled Artin
group over the Laurent polynomial ring, and of its infinitesimal version over
the polynomial ring, evaluated at points as support oracles.
"""

from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Tuple, Sequence

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from core.graph_core import Graph, non_edges
from core.utilities import linalg
from core.utilities.errors import TrivialCharacterError
from core.utilities.type_aliases import Edge, Triple

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

KINDS = ("laurent", "linear")


class Support(Enum):
    IN = "in_support"
    NOT_IN = "not_in_support"


class AlexanderMatrix:
    """
    Rows are the vertex triples that are not 3-cliques, columns the non-edges.
    Entries are polynomials in v1..vn: +-(v - 1) for the laurent kind and
    +-v for the linear kind.
    """

    def __init__(self, n_vertices: int, rows: List[Triple],
                 columns: List[Edge], kind: str):
        if kind not in KINDS:
            raise ValueError("Kind must be one of {}".format(KINDS))
        names = ["v{}".format(i + 1) for i in range(0, max(n_vertices, 1))]
        self.__ring, *self.__variables = ring(",".join(names), QQ)
        self.__n_vertices = n_vertices
        self.__rows = list(rows)
        self.__columns = list(columns)
        self.__kind = kind
        self.__entries = {}

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def rows(self) -> List[Triple]:
        return list(self.__rows)

    @property
    def columns(self) -> List[Edge]:
        return list(self.__columns)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.__rows), len(self.__columns)

    @property
    def n_vertices(self) -> int:
        return self.__n_vertices

    @property
    def entries(self) -> Dict[Tuple[int, int], object]:
        return dict(self.__entries)

    def variable(self, vertex: int):
        return self.__variables[vertex]

    def set_entry(self, row: int, column: int, vertex: int, sign: int):
        variable = self.__variables[vertex]
        entry = variable - 1 if self.__kind == "laurent" else variable
        self.__entries[(row, column)] = entry * sign


def triple_signs(t: Sequence[int]) -> Dict[Edge, Tuple[int, int]]:
    """
    For a triple a < b < c, the vertex v_e opposite to each pair e and the
    sign of the permutation (v_e, rest of the triple).
    """
    if len(t) != 3 or not t[0] < t[1] < t[2]:
        raise ValueError("Triple {} is not strictly sorted".format(tuple(t)))
    a, b, c = t
    return {(b, c): (a, 1), (a, c): (b, -1), (a, b): (c, 1)}


def _presentation(g: Graph, kind: str) -> AlexanderMatrix:
    columns = non_edges(g)
    position = {edge: i for i, edge in enumerate(columns)}
    rows = [t for t in combinations(range(0, g.num_vertices), 3)
            if not (g.has_edge(t[0], t[1]) and g.has_edge(t[1], t[2])
                    and g.has_edge(t[0], t[2]))]
    matrix = AlexanderMatrix(g.num_vertices, rows, columns, kind)
    for r, triple in enumerate(rows):
        for pair, (vertex, sign) in triple_signs(triple).items():
            if pair in position:
                matrix.set_entry(r, position[pair], vertex, sign)
    return matrix


def alexander_presentation(g: Graph) -> AlexanderMatrix:
    return _presentation(g, "laurent")


def infinitesimal_presentation(g: Graph) -> AlexanderMatrix:
    return _presentation(g, "linear")


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def evaluate(m: AlexanderMatrix, point: Sequence) -> List[List[Fraction]]:
    point = [Fraction(value) for value in point]
    if len(point) != m.n_vertices:
        raise ValueError("Point with {} coordinates for {} vertices".format(
            len(point), m.n_vertices
        ))
    arguments = [QQ(value.numerator, value.denominator) for value in point]
    if m.n_vertices == 0:
        arguments = [QQ(0)]
    rows, columns = m.shape
    values = [[Fraction(0)] * columns for _ in range(0, rows)]
    for (r, c), entry in m.entries.items():
        values[r][c] = _to_fraction(entry(*arguments))
    return values


def evaluate_support(m: AlexanderMatrix, point: Sequence) -> Support:
    """
    Whether the module presented by m has a nonzero fiber at point, i.e. the
    evaluated matrix has rank below its number of columns.

    :param m: A laurent or linear presentation matrix.
    :param point: A character (laurent) or a vector (linear), one exact
        rational per vertex.
    :return: Support.IN or Support.NOT_IN.
    """
    values = [Fraction(value) for value in point]
    if m.kind == "laurent":
        if any(value == 0 for value in values):
            raise ValueError("Zero coordinate in a Laurent evaluation")
        if all(value == 1 for value in values):
            raise TrivialCharacterError(
                "Support test away from the identity character only"
            )
    evaluated = evaluate(m, values)
    rank = linalg.rank(evaluated, m.shape[1])
    return Support.IN if rank < m.shape[1] else Support.NOT_IN


def export_triples(m: AlexanderMatrix) -> List[str]:
    """
    Sparse "row col polynomial" lines, indices starting at 0.
    """
    return ["{} {} {}".format(r, c, str(m.entries[(r, c)]).replace(" ", ""))
            for r, c in sorted(m.entries.keys())]
