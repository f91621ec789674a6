"""
Presentations of right-angled Artin groups and of their Bestvina-Brady
subgroups, with relators kept as sympy free group words, and Fox calculus
evaluated at rank one characters.
"""

import logging
from fractions import Fraction
from math import comb
from typing import List, Tuple, Optional, NamedTuple, Sequence, Dict, \
    Iterable, Union

import networkx as nx
from sympy.combinatorics.free_groups import free_group

from core.flag_homology import require_simply_connected
from core.graph_core import Graph, cliques
from core.utilities import linalg
from core.utilities.errors import TrivialCharacterError
from core.utilities.type_aliases import Edge

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

PROVENANCES = ("raag", "dicks_leary", "tree_reduced", "parsed")
TARGETS = ("raag", "bb")

Letter = Tuple[int, int]


class Relator(NamedTuple):
    """
    A relator word, with the pair (a, b) when it was built as [a, b].
    """
    word: object
    commutator: Optional[Tuple[object, object]] = None


class DirectedTriangle(NamedTuple):
    u: int
    v: int
    w: int

    @property
    def e(self) -> Edge:
        return self.u, self.v

    @property
    def f(self) -> Edge:
        return self.v, self.w

    @property
    def g(self) -> Edge:
        return self.u, self.w


class Character(NamedTuple):
    """
    Rank one character: a nonzero rational per abelianization coordinate.
    Target raag uses one coordinate per vertex; target bb uses the values
    rho_v / rho_last for every vertex but the last one.
    """
    values: Tuple[Fraction, ...]
    target: str

    @property
    def is_trivial(self) -> bool:
        return all(value == 1 for value in self.values)

    @property
    def vertex_values(self) -> Tuple[Fraction, ...]:
        """
        Values on the vertices of a character of the Artin group restricting
        to this one.
        """
        if self.target == "raag":
            return self.values
        return self.values + (Fraction(1),)


def make_character(values: Union[Character, Iterable],
                   target: str) -> Character:
    """
    Checked character for target, from raw values or from a Character of
    the same target.
    """
    if target not in TARGETS:
        raise ValueError("Target must be one of {}".format(TARGETS))
    if isinstance(values, Character):
        if values.target != target:
            raise ValueError("Character of {} used for {}".format(
                values.target, target
            ))
        values = values.values
    values = tuple(Fraction(value) for value in values)
    if any(value == 0 for value in values):
        raise ValueError("Character values must be nonzero: {}".format(
            [str(value) for value in values]
        ))
    return Character(values, target)


class GroupPresentation:
    """
    Finite presentation over a sympy free group. Generators have a display
    name and a lower case text token; embedding maps a generator to the
    vertex pair (u, v) with image u v^-1 in the Artin group, when known.
    """

    def __init__(self, names: Sequence[str], tokens: Sequence[str],
                 provenance: str,
                 embedding: Optional[Dict[int, Edge]] = None):
        if provenance not in PROVENANCES:
            raise ValueError("Unknown provenance {}".format(provenance))
        if len(names) != len(tokens):
            raise ValueError("Every generator needs a token")
        for token in tokens:
            if token != token.lower() or not any(c.isalpha() for c in token):
                raise ValueError("Token {} must be lower case with a letter"
                                 .format(token))
        if len(set(tokens)) != len(tokens):
            raise ValueError("Duplicate generator tokens")
        symbols = ["x{}".format(i) for i in range(0, len(names))]
        free = free_group(", ".join(symbols) if len(symbols) > 0 else ())
        self.__free = free[0]
        self.__generators = tuple(free[1:])
        self.__symbol_index = {
            generator.array_form[0][0]: i
            for i, generator in enumerate(self.__generators)
        }
        self.__names = tuple(names)
        self.__tokens = tuple(tokens)
        self.__provenance = provenance
        self.__relators = []
        self.__embedding = dict(embedding) if embedding is not None else {}

    @property
    def free_group(self):
        return self.__free

    @property
    def generators(self) -> Tuple:
        return self.__generators

    @property
    def names(self) -> Tuple[str, ...]:
        return self.__names

    @property
    def tokens(self) -> Tuple[str, ...]:
        return self.__tokens

    @property
    def provenance(self) -> str:
        return self.__provenance

    @property
    def relators(self) -> List[Relator]:
        return list(self.__relators)

    @property
    def embedding(self) -> Dict[int, Edge]:
        return dict(self.__embedding)

    @property
    def num_generators(self) -> int:
        return len(self.__generators)

    @property
    def num_relators(self) -> int:
        return len(self.__relators)

    def word(self, letters: Iterable[Letter]):
        result = self.__free.identity
        for index, sign in letters:
            result = result * self.__generators[index] ** sign
        return result

    def letters(self, word) -> List[Letter]:
        """
        The word as a list of (generator index, +1 or -1).
        """
        expanded = []
        for symbol, exponent in word.array_form:
            sign = 1 if exponent > 0 else -1
            expanded.extend([(self.__symbol_index[symbol], sign)]
                            * abs(exponent))
        return expanded

    def add_relator(self, word, commutator: Optional[Tuple] = None):
        # sympy keeps words freely reduced
        self.__relators.append(Relator(word, commutator))

    def add_commutator(self, a, b):
        self.add_relator(a * b * a ** -1 * b ** -1, (a, b))

    def exponent_sums(self, word) -> List[int]:
        sums = [0] * self.num_generators
        for index, sign in self.letters(word):
            sums[index] += sign
        return sums

    def to_text(self) -> str:
        clauses = ["gen " + " ".join(self.__tokens)]
        for relator in self.__relators:
            clauses.append("rel " + " ".join(
                self.__tokens[index] if sign > 0
                else self.__tokens[index].upper()
                for index, sign in self.letters(relator.word)
            ))
        return "; ".join(clauses) + ";"

    def __str__(self) -> str:
        return "GroupPresentation({}, {} generators, {} relators)".format(
            self.__provenance, self.num_generators, self.num_relators
        )

    __repr__ = __str__


def from_text(text: str) -> GroupPresentation:
    """
    Parses the "gen a b c; rel a b A B;" format, upper case meaning inverse.
    """
    clauses = [clause.split() for clause in text.split(";")
               if clause.strip() != ""]
    if len(clauses) == 0 or clauses[0][0] != "gen":
        raise ValueError("Presentation text must start with a gen clause")
    tokens = clauses[0][1:]
    presentation = GroupPresentation(tokens, tokens, "parsed")
    position = {token: i for i, token in enumerate(tokens)}
    for clause in clauses[1:]:
        if clause[0] != "rel":
            raise ValueError("Unknown clause {}".format(clause[0]))
        letters = []
        for token in clause[1:]:
            if token in position:
                letters.append((position[token], 1))
            elif token.lower() in position and token != token.lower():
                letters.append((position[token.lower()], -1))
            else:
                raise ValueError("Unknown generator {}".format(token))
        presentation.add_relator(presentation.word(letters))
    return presentation


def raag_presentation(g: Graph) -> GroupPresentation:
    """
    One generator per vertex, one commutator per edge.
    """
    tokens = ["v{}".format(i + 1) for i in range(0, g.num_vertices)]
    presentation = GroupPresentation(g.vertices, tokens, "raag")
    gens = presentation.generators
    for u, w in g.edges:
        presentation.add_commutator(gens[u], gens[w])
    return presentation


def directed_triangles(g: Graph) -> List[DirectedTriangle]:
    return [DirectedTriangle(*clique) for clique in cliques(g)
            if len(clique) == 3]


def _edge_names(g: Graph, edges: Sequence[Edge]) -> List[str]:
    return ["{}-{}".format(*g.edge_names(edge)) for edge in edges]


def dicks_leary_presentation(g: Graph, assume_simply_connected: bool = False,
                             disk_validated: bool = False
                             ) -> GroupPresentation:
    """
    Presentation of the Bestvina-Brady group on the edges: for each directed
    triangle (e, f, g) the relators [e, f] and e f g^-1.

    :param g: A graph with simply connected flag complex.
    :param assume_simply_connected: Override for an undecided gate.
    :param disk_validated: The graph is the 1-skeleton of a validated disk.
    :return: The presentation, embedding edge {u, v} as u v^-1.
    """
    require_simply_connected(g, assume_simply_connected, disk_validated)
    edges = g.edges
    position = {edge: i for i, edge in enumerate(edges)}
    tokens = ["e{}".format(i + 1) for i in range(0, len(edges))]
    presentation = GroupPresentation(
        _edge_names(g, edges), tokens, "dicks_leary",
        {i: edge for i, edge in enumerate(edges)}
    )
    gens = presentation.generators
    for triangle in directed_triangles(g):
        e = gens[position[triangle.e]]
        f = gens[position[triangle.f]]
        g_edge = gens[position[triangle.g]]
        presentation.add_commutator(e, f)
        presentation.add_relator(e * f * g_edge ** -1)
    return presentation


def default_spanning_tree(g: Graph) -> List[Edge]:
    """
    Breadth first tree from the first vertex.
    """
    if g.num_vertices == 0:
        return []
    tree = nx.bfs_tree(g.to_networkx(), 0)
    return sorted((min(u, v), max(u, v)) for u, v in tree.edges())


def _check_spanning_tree(g: Graph, tree: Sequence[Edge]):
    n = g.num_vertices
    tree_graph = nx.Graph()
    tree_graph.add_nodes_from(range(0, n))
    tree_graph.add_edges_from(tree)
    if len(tree) != n - 1 or any(not g.has_edge(*edge) for edge in tree) \
            or not nx.is_connected(tree_graph):
        logging.getLogger(__name__).error(
            "Edges {} are not a spanning tree".format(tree)
        )
        raise ValueError("Edges {} are not a spanning tree of the graph"
                         .format(tree))


def spanning_tree_reduction(g: Graph, tree: Optional[Sequence[Edge]] = None,
                            assume_simply_connected: bool = False,
                            disk_validated: bool = False
                            ) -> GroupPresentation:
    """
    Eliminates every non-tree edge generator of the Dicks-Leary presentation
    by the word along its tree path, leaving one generator per tree edge and
    one commutator per triangle.

    :param g: A connected graph with simply connected flag complex.
    :param tree: Spanning tree edges as index pairs, a breadth first tree
        when missing.
    :param assume_simply_connected: Override for an undecided gate.
    :param disk_validated: The graph is the 1-skeleton of a validated disk.
    :return: A tree_reduced presentation.
    """
    require_simply_connected(g, assume_simply_connected, disk_validated)
    if tree is None:
        tree = default_spanning_tree(g)
    tree = sorted((min(u, v), max(u, v)) for u, v in tree)
    _check_spanning_tree(g, tree)

    numbering = {edge: i for i, edge in enumerate(g.edges)}
    tokens = ["e{}".format(numbering[edge] + 1) for edge in tree]
    presentation = GroupPresentation(
        _edge_names(g, tree), tokens, "tree_reduced",
        {i: edge for i, edge in enumerate(tree)}
    )
    gens = presentation.generators
    position = {edge: i for i, edge in enumerate(tree)}
    tree_graph = nx.Graph()
    tree_graph.add_nodes_from(range(0, g.num_vertices))
    tree_graph.add_edges_from(tree)

    def substitute(edge: Edge):
        # tree edge {a, b} with a < b stands for a b^-1
        path = nx.shortest_path(tree_graph, edge[0], edge[1])
        word = presentation.free_group.identity
        for a, b in zip(path, path[1:]):
            if a < b:
                word = word * gens[position[(a, b)]]
            else:
                word = word * gens[position[(b, a)]] ** -1
        return word

    words = {edge: substitute(edge) for edge in g.edges}
    for triangle in directed_triangles(g):
        e, f, g_edge = words[triangle.e], words[triangle.f], \
                       words[triangle.g]
        commutator = e * f * e ** -1 * f ** -1
        if not commutator.is_identity:
            presentation.add_relator(commutator, (e, f))
        remainder = e * f * g_edge ** -1
        if not remainder.is_identity:
            logging.getLogger(__name__).warning(
                "Triangle relator {} survived the substitution".format(
                    remainder
                ))
            presentation.add_relator(remainder)
    return presentation


class AbelianGroup(NamedTuple):
    rank: int
    torsion: Tuple[int, ...]


def abelianization(p: GroupPresentation) -> AbelianGroup:
    rows = [p.exponent_sums(relator.word) for relator in p.relators]
    factors = linalg.integer_invariant_factors(rows, p.num_generators)
    return AbelianGroup(p.num_generators - len(factors),
                        tuple(factor for factor in factors if factor > 1))


def character_values(p: GroupPresentation,
                     character: Character) -> List[Fraction]:
    """
    Values on the generators of p: the character itself for an Artin group
    presentation, u / v on a generator embedded as u v^-1 for a
    Bestvina-Brady one.
    """
    if p.provenance == "raag":
        if character.target != "raag":
            raise ValueError("Artin group presentation needs a raag "
                             "character")
        return list(character.values)
    if p.provenance == "parsed" or character.target != "bb":
        raise ValueError("Presentation {} takes no {} character".format(
            p.provenance, character.target
        ))
    embedding = p.embedding
    vertex_values = character.vertex_values
    vertices = 1 + max((max(pair) for pair in embedding.values()), default=0)
    if len(vertex_values) != vertices:
        raise ValueError("Expected {} character values, got {}".format(
            vertices - 1, len(character.values)
        ))
    return [vertex_values[embedding[i][0]] / vertex_values[embedding[i][1]]
            for i in range(0, p.num_generators)]


def fox_jacobian(p: GroupPresentation,
                 values: Sequence[Fraction]) -> List[List[Fraction]]:
    """
    Fox derivatives of the relators, evaluated at the character sending
    generator j to values[j]. One row per relator.
    """
    inverse = [1 / Fraction(value) for value in values]
    jacobian = []
    for relator in p.relators:
        row = [Fraction(0)] * p.num_generators
        prefix = Fraction(1)
        for index, sign in p.letters(relator.word):
            if sign > 0:
                row[index] += prefix
                prefix *= values[index]
            else:
                prefix *= inverse[index]
                row[index] -= prefix
        jacobian.append(row)
    return jacobian


def fox_h1_dimension(p: GroupPresentation, character: Character) -> int:
    """
    Dimension of H^1 of the group with coefficients twisted by a nontrivial
    rank one character.
    """
    values = character_values(p, character)
    if len(values) != p.num_generators:
        raise ValueError("Character has {} values for {} generators".format(
            len(values), p.num_generators
        ))
    if any(value == 0 for value in values):
        raise ValueError("Character values must be nonzero")
    if all(value == 1 for value in values):
        raise TrivialCharacterError(
            "Fox calculus count needs a nontrivial character"
        )
    jacobian = fox_jacobian(p, values)
    return p.num_generators - 1 - linalg.rank(jacobian, p.num_generators)


def holonomy_h2_rank(g: Graph) -> int:
    """
    Rank of the degree two part of the holonomy Lie algebra: one bracket per
    non-edge.
    """
    return comb(g.num_vertices, 2) - g.num_edges


def presentation_summary(p: GroupPresentation) -> Dict:
    abelian = abelianization(p)
    return {
        "provenance": p.provenance,
        "generators": p.num_generators,
        "relators": p.num_relators,
        "all_commutators": all(relator.commutator is not None
                               for relator in p.relators),
        "abelianization": {"rank": abelian.rank,
                           "torsion": list(abelian.torsion)},
        "text": p.to_text(),
    }
