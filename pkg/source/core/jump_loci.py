"""
Components of the first resonance and characteristic varieties of
right-angled Artin groups and Bestvina-Brady groups, the oracles testing
single points against their definitions, and the certificates built on the
component geometry.

Coordinates: the Artin group uses one coordinate per vertex. The
Bestvina-Brady group uses C^V modulo the diagonal, represented by
x_v - x_last for every vertex but the last; characters likewise use
rho_v / rho_last.
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Sequence, Union, Optional, Dict, NamedTuple, Tuple

from core.alexander import alexander_presentation, evaluate_support, \
    Support, AlexanderMatrix
from core.flag_homology import require_simply_connected
from core.graph_core import Graph, VertexSet, WeightedGraph, connectivity, \
    maximal_disconnected_subsets, connected_components
from core.presentations import GroupPresentation, raag_presentation, \
    spanning_tree_reduction, fox_h1_dimension, make_character, Character
from core.triangulations import DiskTriangulation, validate
from core.utilities import linalg
from core.utilities.errors import OracleDisagreementError, \
    TrivialCharacterError
from core.utilities.type_aliases import QVector

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

TARGETS = ("raag", "bb")


def _check_target(target: str):
    if target not in TARGETS:
        raise ValueError("Target must be one of {}".format(TARGETS))


def _names(g: Graph, w: VertexSet) -> List[str]:
    return [g.vertices[i] for i in w]


class SubspaceComponent:
    """
    Linear subspace H_W (ambient G) or its image H'_W (ambient N), given by a
    basis of exact rational vectors.
    """

    def __init__(self, subset: VertexSet, ambient: str,
                 basis: Sequence[QVector], ambient_dimension: int):
        self.__subset = subset
        self.__ambient = ambient
        self.__basis = tuple(tuple(Fraction(x) for x in v) for v in basis)
        self.__ambient_dimension = ambient_dimension

    @property
    def subset(self) -> VertexSet:
        return self.__subset

    @property
    def ambient(self) -> str:
        return self.__ambient

    @property
    def basis(self) -> Tuple[QVector, ...]:
        return self.__basis

    @property
    def ambient_dimension(self) -> int:
        return self.__ambient_dimension

    @property
    def dimension(self) -> int:
        return linalg.rank(self.__basis, self.__ambient_dimension)

    def contains(self, point: Sequence) -> bool:
        point = tuple(Fraction(x) for x in point)
        rows = list(self.__basis)
        return linalg.rank(rows + [point], self.__ambient_dimension) == \
            linalg.rank(rows, self.__ambient_dimension)


class TorusComponent:
    """
    Subtorus T_W (ambient G) or its image T'_W (ambient N), stored by its
    parameterization: free coordinates on W, 1 elsewhere, then the quotient
    by the diagonal for N.
    """

    def __init__(self, subset: VertexSet, ambient: str):
        self.__subset = subset
        self.__ambient = ambient

    @property
    def subset(self) -> VertexSet:
        return self.__subset

    @property
    def ambient(self) -> str:
        return self.__ambient

    @property
    def dimension(self) -> int:
        return len(self.__subset)

    @property
    def ambient_dimension(self) -> int:
        n = self.__subset.size
        return n if self.__ambient == "G" else n - 1

    def point(self, parameters: Sequence) -> QVector:
        """
        The character with the given values on W, in ambient coordinates.
        """
        w = self.__subset
        if len(parameters) != len(w):
            raise ValueError("Expected {} parameters".format(len(w)))
        rho = [Fraction(1)] * w.size
        for index, value in zip(w, parameters):
            rho[index] = Fraction(value)
        if self.__ambient == "G":
            return tuple(rho)
        return tuple(value / rho[-1] for value in rho[:-1])

    def contains(self, character: Sequence) -> bool:
        values = [Fraction(x) for x in character]
        w = self.__subset
        outside = [v for v in range(0, w.size) if v not in w]
        if self.__ambient == "G":
            return all(values[v] == 1 for v in outside)
        last = w.size - 1
        if last not in w:
            return all(values[v] == 1 for v in outside if v != last)
        # pulled back through rho_last = 1 / common value outside W
        return len(set(values[v] for v in outside)) <= 1


class FullComponent(NamedTuple):
    """
    The whole of H^1 (kind space) or of the character torus (kind torus).
    """
    ambient: str
    ambient_dimension: int
    kind: str

    @property
    def dimension(self) -> int:
        return self.ambient_dimension

    def contains(self, point: Sequence) -> bool:
        return True


Component = Union[SubspaceComponent, TorusComponent, FullComponent]


def iota_pushforward_basis(w: VertexSet, n_vertices: int) -> List[QVector]:
    """
    Images of the coordinate vectors e_w, w in W, in C^V modulo the diagonal.

    :param w: A proper subset of the vertices.
    :param n_vertices: |V|.
    :return: |W| independent vectors of length |V| - 1.
    """
    if len(w) >= n_vertices:
        raise ValueError("The restriction is injective on proper subsets "
                         "only, got all {} vertices".format(n_vertices))
    basis = []
    for index in w:
        if index == n_vertices - 1:
            basis.append(tuple(Fraction(-1) for _ in range(0, n_vertices - 1)))
        else:
            basis.append(tuple(Fraction(int(i == index))
                               for i in range(0, n_vertices - 1)))
    return basis


def _coordinate_basis(w: VertexSet) -> List[QVector]:
    return [tuple(Fraction(int(i == index)) for i in range(0, w.size))
            for index in w]


def _bb_subsets(g: Graph, assume_simply_connected: bool,
                disk_validated: bool) -> Tuple[List[VertexSet], bool]:
    """
    Maximal disconnected subsets for the Bestvina-Brady group after the
    gate, and whether the whole space is a component.
    """
    require_simply_connected(g, assume_simply_connected, disk_validated)
    subsets = maximal_disconnected_subsets(g)
    if len(subsets) == 0:
        return [], False
    return subsets, connectivity(g) == 1


def resonance_components(g: Graph, target: str,
                         assume_simply_connected: bool = False,
                         disk_validated: bool = False) -> List[Component]:
    """
    Irreducible components of the first resonance variety away from 0.
    """
    _check_target(target)
    n = g.num_vertices
    if target == "raag":
        return [SubspaceComponent(w, "G", _coordinate_basis(w), n)
                for w in maximal_disconnected_subsets(g)]
    if n <= 1:
        return []
    subsets, full = _bb_subsets(g, assume_simply_connected, disk_validated)
    if full:
        return [FullComponent("N", n - 1, "space")]
    return [SubspaceComponent(w, "N", iota_pushforward_basis(w, n), n - 1)
            for w in subsets]


def characteristic_components(g: Graph, target: str,
                              assume_simply_connected: bool = False,
                              disk_validated: bool = False
                              ) -> List[Component]:
    """
    Irreducible components of the first characteristic variety away from the
    identity.
    """
    _check_target(target)
    n = g.num_vertices
    if target == "raag":
        return [TorusComponent(w, "G")
                for w in maximal_disconnected_subsets(g)]
    if n <= 1:
        return []
    subsets, full = _bb_subsets(g, assume_simply_connected, disk_validated)
    if full:
        return [FullComponent("N", n - 1, "torus")]
    return [TorusComponent(w, "N") for w in subsets]


def _annihilator(component: Component) -> List[QVector]:
    if isinstance(component, FullComponent):
        return []
    return linalg.nullspace(component.basis, component.ambient_dimension)


def subspace_intersection_dim(components: Sequence[Component]) -> int:
    """
    Dimension of the intersection of subspace components sharing an ambient,
    from the rank of their stacked annihilators.
    """
    if len(components) == 0:
        raise ValueError("Intersection of no components")
    ambients = set((c.ambient, c.ambient_dimension) for c in components)
    if len(ambients) != 1:
        raise ValueError("Components live in different ambients: {}".format(
            sorted(ambients)
        ))
    dimension = components[0].ambient_dimension
    constraints = [row for component in components
                   for row in _annihilator(component)]
    return dimension - linalg.rank(constraints, dimension)


def _multiplication_rows(g: Graph, a: Sequence[Fraction]
                         ) -> List[List[Fraction]]:
    # row per edge {u, w}: a_u x_w - a_w x_u
    rows = []
    for u, w in g.edges:
        row = [Fraction(0)] * g.num_vertices
        row[w] += a[u]
        row[u] -= a[w]
        rows.append(row)
    return rows


def resonance_membership_oracle(g: Graph, target: str, a: Sequence,
                                assume_simply_connected: bool = False,
                                disk_validated: bool = False) -> bool:
    """
    Whether the cochain complex of the cohomology ring in degrees 0, 1, 2,
    with differential multiplication by a, fails to be exact in degree 1.
    For the Bestvina-Brady group the ring is the quotient of the Artin
    group's by the sum of the degree one generators.

    :param g: The graph.
    :param target: raag or bb.
    :param a: |V| coordinates for raag, |V| - 1 for bb.
    :return: True when a is resonant.
    """
    _check_target(target)
    n = g.num_vertices
    a = [Fraction(x) for x in a]
    if target == "raag":
        if len(a) != n:
            raise ValueError("Expected {} coordinates".format(n))
        if all(x == 0 for x in a):
            return n > 0
        rows = _multiplication_rows(g, a)
        return n - linalg.rank(rows, n) > 1

    require_simply_connected(g, assume_simply_connected, disk_validated)
    if len(a) != n - 1:
        raise ValueError("Expected {} coordinates".format(n - 1))
    if all(x == 0 for x in a):
        return n - 1 > 0
    lift = a + [Fraction(0)]
    nu_rows = _multiplication_rows(g, [Fraction(1)] * n)
    a_rows = _multiplication_rows(g, lift)
    joined = [row_a + row_nu for row_a, row_nu in zip(a_rows, nu_rows)]
    nu_rank = linalg.rank(nu_rows, n)
    composite_rank = linalg.rank(joined, 2 * n) - nu_rank
    # kernel in C^V contains the diagonal, then a itself spans the image
    return n - composite_rank - 2 > 0


def characteristic_membership_oracle(
        g: Graph, target: str, rho: Union[Character, Sequence],
        assume_simply_connected: bool = False, disk_validated: bool = False,
        presentation: Optional[GroupPresentation] = None,
        alexander: Optional[AlexanderMatrix] = None) -> bool:
    """
    Whether H^1 with coefficients twisted by rho is nonzero, by Fox calculus.
    For the Artin group the verdict is checked against the support of the
    Alexander invariant.

    :param rho: A Character of target, or its raw coordinates.
    :param presentation: Presentation to reuse, the raag or tree reduced one
        depending on target.
    :param alexander: Alexander matrix to reuse for the raag check.
    """
    _check_target(target)
    n = g.num_vertices
    character = make_character(rho, target)
    values = character.values
    if character.is_trivial:
        raise TrivialCharacterError("Membership is tested away from the "
                                    "identity character")
    if target == "raag":
        if len(values) != n:
            raise ValueError("Expected {} coordinates".format(n))
        if presentation is None:
            presentation = raag_presentation(g)
        verdict = fox_h1_dimension(presentation, character) > 0
        if alexander is None:
            alexander = alexander_presentation(g)
        support = evaluate_support(alexander, values) == Support.IN
        if support != verdict:
            logging.getLogger(__name__).error(
                "Fox calculus says {}, Alexander support says {} at {}"
                .format(verdict, support, [str(x) for x in values])
            )
            raise OracleDisagreementError(
                "Fox calculus and Alexander support disagree", values,
                "characteristic-raag"
            )
        return verdict

    if len(values) != n - 1:
        raise ValueError("Expected {} coordinates".format(n - 1))
    if presentation is None:
        presentation = spanning_tree_reduction(
            g, None, assume_simply_connected, disk_validated
        )
    return fox_h1_dimension(presentation, character) > 0


def odd_contraction(wg: WeightedGraph) -> Graph:
    """
    Graph on the connected components of the subgraph of odd weight edges,
    two components joined when some edge of the graph joins them.
    """
    graph = wg.graph
    odd = Graph.from_indices(
        graph.vertices,
        [edge for edge in graph.edges if wg.weight(edge) % 2 == 1]
    )
    components = connected_components(odd)
    owner = {}
    for position, component in enumerate(components):
        for index in component:
            owner[index] = position
    names = ["+".join(_names(graph, component)) for component in components]
    edges = set()
    for u, v in graph.edges:
        a, b = owner[u], owner[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_indices(names, sorted(edges))


class Certificate(NamedTuple):
    kind: str
    witness: Dict
    justification: str

    def to_dict(self) -> Dict:
        return {"kind": self.kind, "witness": self.witness,
                "justification": self.justification}


def _inconclusive(reason: str) -> Certificate:
    return Certificate("inconclusive", {}, reason)


def not_arrangement_certificate(g: Graph,
                                assume_simply_connected: bool = False,
                                disk_validated: bool = False
                                ) -> Certificate:
    """
    Resonance components of an arrangement group meet only at 0; a pair of
    components of the Bestvina-Brady group with a positive dimensional
    intersection rules that out.
    """
    if g.num_vertices <= 1:
        return _inconclusive("Graph has at most one vertex")
    components = resonance_components(g, "bb", assume_simply_connected,
                                      disk_validated)
    if any(isinstance(c, FullComponent) for c in components):
        return _inconclusive("Connectivity is 1, the resonance variety is "
                             "the whole space")
    best = None
    for first, second in combinations(components, 2):
        dimension = subspace_intersection_dim([first, second])
        if dimension > 0 and (best is None or dimension > best[2]):
            best = (first, second, dimension)
    if best is None:
        return _inconclusive("All components meet only at 0")
    first, second, dimension = best
    witness = {
        "pair": [_names(g, first.subset), _names(g, second.subset)],
        "component_dimensions": [first.dimension, second.dimension],
        "intersection_dimension": dimension,
        "ambient_dimension": g.num_vertices - 1,
    }
    return Certificate(
        "not_arrangement", witness,
        "The resonance components H'_W for W = {{{}}} and W = {{{}}} meet in "
        "a subspace of dimension {} > 0, while distinct resonance components "
        "of an arrangement group meet only at 0.".format(
            ", ".join(witness["pair"][0]), ", ".join(witness["pair"][1]),
            dimension
        ))


def not_artin_certificate(g: Graph,
                          triangulation: Optional[DiskTriangulation]
                          ) -> Certificate:
    """
    For the 1-skeleton of an extra-special triangulation: any Artin group
    with the same first Betti number and holonomy rank would have a tree as
    odd contraction, whose resonance components are in general position,
    while the r boundary components here meet in codimension r - 1.
    """
    if triangulation is None or triangulation.kind != "extra-special":
        return _inconclusive("Graph is not given as an extra-special "
                             "triangulation")
    if triangulation.graph != g or not validate(triangulation).passed:
        return _inconclusive("Triangulation does not validate against the "
                             "graph")
    n = g.num_vertices
    kappa = connectivity(g)
    if kappa <= 1:
        return _inconclusive("Connectivity {} leaves the resonance variety "
                             "the whole space".format(kappa))
    v_prime = n - 1
    e_prime = comb(v_prime, 2) - (comb(n, 2) - g.num_edges)
    if v_prime != e_prime + 1:
        return _inconclusive("v' = {} and e' = {} do not force a tree".format(
            v_prime, e_prime
        ))
    full = VertexSet.full(n)
    boundary = []
    for u, v in triangulation.special_boundary:
        w = full.intersection(VertexSet.from_indices([u, v], n).complement())
        boundary.append(
            SubspaceComponent(w, "N", iota_pushforward_basis(w, n), n - 1)
        )
    r = len(boundary)
    codimension = v_prime - subspace_intersection_dim(boundary)
    witness = {
        "v_prime": v_prime,
        "e_prime": e_prime,
        "r": r,
        "codimension": codimension,
        "boundary_edges": [list(g.edge_names(edge))
                           for edge in triangulation.special_boundary],
    }
    if codimension != r - 1:
        return Certificate("inconclusive", witness,
                           "Boundary components meet in codimension {}, not "
                           "{}".format(codimension, r - 1))
    return Certificate(
        "not_artin", witness,
        "Connectivity is {} > 1. An Artin group with b1 = {} and holonomy "
        "rank matching would have {} vertices and {} edges in its odd "
        "contraction, hence a tree, whose resonance components are in general "
        "position. The {} boundary components here meet in codimension {} < "
        "{}.".format(kappa, v_prime, v_prime, e_prime, r, codimension, r)
    )
