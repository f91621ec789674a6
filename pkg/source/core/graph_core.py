import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterable, Iterator, List, Tuple, Dict, NamedTuple, \
    Optional, Sequence

import networkx as nx
from sortedcontainers import SortedSet, SortedDict

from core.utilities.type_aliases import Edge

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """
    Subset of the vertex index range 0..size-1 of a graph, stored as a bit
    mask. Iteration always follows the vertex order.
    """

    def __init__(self, mask: int, size: int):
        if mask < 0 or mask >> size:
            raise IndexError(
                "Mask {} has indices outside the range 0..{}".format(
                    bin(mask), size - 1
                ))
        self.__mask = mask
        self.__size = size

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> 'VertexSet':
        mask = 0
        for index in indices:
            if index < 0 or index >= size:
                raise IndexError("Vertex index {} out of range 0..{}".format(
                    index, size - 1
                ))
            mask |= 1 << index
        return VertexSet(mask, size)

    @classmethod
    def full(cls, size: int) -> 'VertexSet':
        return VertexSet((1 << size) - 1, size)

    @property
    def mask(self) -> int:
        return self.__mask

    @property
    def size(self) -> int:
        """
        Size of the ambient vertex range, not of the subset.
        """
        return self.__size

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(_bits(self.__mask))

    def union(self, other: 'VertexSet') -> 'VertexSet':
        self._check_ambient(other)
        return VertexSet(self.__mask | other.mask, self.__size)

    def intersection(self, other: 'VertexSet') -> 'VertexSet':
        self._check_ambient(other)
        return VertexSet(self.__mask & other.mask, self.__size)

    def complement(self) -> 'VertexSet':
        return VertexSet(((1 << self.__size) - 1) ^ self.__mask, self.__size)

    def issubset(self, other: 'VertexSet') -> bool:
        self._check_ambient(other)
        return self.__mask & ~other.mask == 0

    def _check_ambient(self, other: 'VertexSet'):
        if other.size != self.__size:
            raise ValueError("Vertex sets on ranges of size {} and {}".format(
                self.__size, other.size
            ))

    def sort_key(self) -> Tuple[int, ...]:
        return self.indices

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.__size and bool(self.__mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.__mask)

    def __len__(self) -> int:
        return bin(self.__mask).count("1")

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and \
               other.mask == self.__mask and other.size == self.__size

    def __hash__(self) -> int:
        return hash((self.__mask, self.__size))

    def __str__(self) -> str:
        return "{" + ", ".join(str(i) for i in self.indices) + "}"

    __repr__ = __str__


class Graph:
    """
    Finite simple graph with a fixed linear order on its vertices. Vertex
    identifiers are arbitrary strings, everything else works on their index in
    that order, so every sign convention depends on it.
    """

    def __init__(self, vertices: Sequence[str],
                 edges: Iterable[Tuple[str, str]] = ()):
        self.__vertices = tuple(str(vertex) for vertex in vertices)
        self.__index = {name: i for i, name in enumerate(self.__vertices)}
        if len(self.__index) != len(self.__vertices):
            raise ValueError("Duplicate vertex identifiers in {}".format(
                list(self.__vertices)
            ))
        self.__edges = SortedSet()
        for u, v in edges:
            edge = self._canonical_edge(u, v)
            if edge in self.__edges:
                raise ValueError("Duplicate edge ({}, {})".format(u, v))
            self.__edges.add(edge)
        adjacency = [0] * len(self.__vertices)
        for i, j in self.__edges:
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i
        self.__adjacency = tuple(adjacency)

    @classmethod
    def from_indices(cls, vertices: Sequence[str],
                     edges: Iterable[Edge]) -> 'Graph':
        names = [str(vertex) for vertex in vertices]
        return Graph(names, ((names[i], names[j]) for i, j in edges))

    def _canonical_edge(self, u: str, v: str) -> Edge:
        try:
            i, j = self.__index[str(u)], self.__index[str(v)]
        except KeyError as error:
            raise ValueError("Edge ({}, {}) has an endpoint that is not a "
                             "vertex".format(u, v)) from error
        if i == j:
            raise ValueError("Loop on vertex {} is not allowed".format(u))
        return (i, j) if i < j else (j, i)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.__vertices

    @property
    def edges(self) -> List[Edge]:
        return list(self.__edges)

    @property
    def num_vertices(self) -> int:
        return len(self.__vertices)

    @property
    def num_edges(self) -> int:
        return len(self.__edges)

    @property
    def adjacency(self) -> Tuple[int, ...]:
        """
        Neighbourhood of each vertex as a bit mask.
        """
        return self.__adjacency

    def index(self, vertex: str) -> int:
        return self.__index[str(vertex)]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.__adjacency[i] >> j & 1)

    def neighbours(self, i: int) -> VertexSet:
        return VertexSet(self.__adjacency[i], self.num_vertices)

    def vertex_set(self, names: Iterable[str]) -> VertexSet:
        return VertexSet.from_indices(
            (self.index(name) for name in names), self.num_vertices
        )

    def edge_names(self, edge: Edge) -> Tuple[str, str]:
        return self.__vertices[edge[0]], self.__vertices[edge[1]]

    def to_networkx(self) -> nx.Graph:
        """
        networkx view with the vertex indices as nodes.
        """
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(0, self.num_vertices))
        nx_graph.add_edges_from(self.__edges)
        return nx_graph

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and \
               other.vertices == self.__vertices and \
               other.edges == self.edges

    def __hash__(self) -> int:
        return hash((self.__vertices, tuple(self.__edges)))

    def __str__(self) -> str:
        edges = ["{}-{}".format(*self.edge_names(edge))
                 for edge in self.__edges]
        return "Graph(vertices=[{}], edges=[{}])".format(
            ", ".join(self.__vertices), ", ".join(edges)
        )

    __repr__ = __str__


class WeightedGraph:
    """
    A Graph with an integer weight m(e) >= 2 on every edge.
    """

    def __init__(self, graph: Graph, weights: Dict[Edge, int]):
        missing = [edge for edge in graph.edges if edge not in weights]
        if len(missing) > 0:
            raise ValueError("Edges without weight: {}".format(missing))
        unknown = [edge for edge in weights if not graph.has_edge(*edge)]
        if len(unknown) > 0:
            raise ValueError("Weights on non edges: {}".format(unknown))
        low = {edge: m for edge, m in weights.items() if m < 2}
        if len(low) > 0:
            raise ValueError("Weights must be at least 2, found {}".format(
                low
            ))
        self.__graph = graph
        self.__weights = SortedDict(weights)

    @property
    def graph(self) -> Graph:
        return self.__graph

    @property
    def weights(self) -> SortedDict:
        return SortedDict(self.__weights)

    def weight(self, edge: Edge) -> int:
        return self.__weights[edge]


class CutCoefficients(NamedTuple):
    """
    The values c_2..c_m of the cut polynomial, with m = |V| unless a subset
    size cap stopped the enumeration earlier.
    """
    values: Tuple[int, ...]
    n_vertices: int
    truncated: bool

    def coefficient(self, j: int) -> int:
        if j < 2 or j > self.n_vertices:
            return 0
        if j - 2 >= len(self.values):
            raise ValueError("c_{} was not computed, cap at {}".format(
                j, len(self.values) + 1
            ))
        return self.values[j - 2]

    @property
    def max_size(self) -> int:
        return len(self.values) + 1


def component_count(adjacency: Sequence[int], mask: int) -> int:
    """
    Number of connected components of the subgraph induced on mask.
    """
    count = 0
    remaining = mask
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            reached = 0
            for vertex in _bits(frontier):
                reached |= adjacency[vertex]
            frontier = reached & mask & ~seen
            seen |= frontier
        remaining &= ~seen
        count += 1
    return count


def induced_subgraph(g: Graph, w: VertexSet) -> Graph:
    if w.size != g.num_vertices:
        raise IndexError("Vertex set over {} indices for a graph with {} "
                         "vertices".format(w.size, g.num_vertices))
    kept = w.indices
    position = {old: new for new, old in enumerate(kept)}
    names = [g.vertices[i] for i in kept]
    edges = [(position[i], position[j]) for i, j in g.edges
             if i in w and j in w]
    return Graph.from_indices(names, edges)


def connected_components(g: Graph) -> List[VertexSet]:
    """
    Components in the order of their smallest vertex.
    """
    components = []
    remaining = (1 << g.num_vertices) - 1
    adjacency = g.adjacency
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            reached = 0
            for vertex in _bits(frontier):
                reached |= adjacency[vertex]
            frontier = reached & ~seen
            seen |= frontier
        components.append(VertexSet(seen, g.num_vertices))
        remaining &= ~seen
    return components


def reduced_b0(g: Graph) -> int:
    # the empty graph has reduced b0 equal to -1
    return len(connected_components(g)) - 1


def is_connected(g: Graph) -> bool:
    return reduced_b0(g) == 0


def connectivity(g: Graph) -> int:
    """
    Largest r such that deleting fewer than r vertices always leaves a
    connected graph. Complete graphs K_n get n - 1, disconnected graphs 0.

    :param g: A graph with at least one vertex.
    :return: The connectivity of g.
    """
    n = g.num_vertices
    if n == 0:
        raise ValueError("Connectivity of the graph with no vertices")
    full = (1 << n) - 1
    adjacency = g.adjacency
    if component_count(adjacency, full) > 1:
        logging.getLogger(__name__).warning(
            "Connectivity requested for a disconnected graph, returning 0"
        )
        return 0
    for r in range(1, n - 1):
        for removed in combinations(range(0, n), r):
            mask = full
            for index in removed:
                mask &= ~(1 << index)
            if component_count(adjacency, mask) > 1:
                return r
    return n - 1


def cliques(g: Graph) -> List[Tuple[int, ...]]:
    """
    All nonempty cliques as sorted index tuples, by size then
    lexicographically.
    """
    found = [tuple(sorted(clique))
             for clique in nx.enumerate_all_cliques(g.to_networkx())]
    return sorted(found, key=lambda clique: (len(clique), clique))


def clique_counts(g: Graph) -> Tuple[int, ...]:
    counts = [1]
    for clique in cliques(g):
        if len(clique) == len(counts):
            counts.append(0)
        counts[len(clique)] += 1
    return tuple(counts)


def non_edges(g: Graph) -> List[Edge]:
    return [(i, j) for i, j in combinations(range(0, g.num_vertices), 2)
            if not g.has_edge(i, j)]


def _cut_sum(adjacency: Tuple[int, ...], n: int, size: int) -> int:
    total = 0
    for subset in combinations(range(0, n), size):
        mask = 0
        for index in subset:
            mask |= 1 << index
        total += component_count(adjacency, mask) - 1
    return total


def cut_coefficients(g: Graph, max_subset_size: Optional[int] = None,
                     workers: int = 1) -> CutCoefficients:
    """
    Computes c_j, the sum of reduced b0 over all induced subgraphs on j
    vertices, for 2 <= j <= |V|.

    :param g: The graph.
    :param max_subset_size: Optional cap on j. When it is below |V| the
        result is flagged as truncated and stops at the cap.
    :param workers: Number of processes sharing the subset sizes.
    :return: A CutCoefficients tuple.
    """
    n = g.num_vertices
    top = n if max_subset_size is None else min(n, max_subset_size)
    truncated = top < n
    if truncated:
        logging.getLogger(__name__).warning(
            "Cut coefficients truncated at subset size {} of {}".format(
                top, n
            ))
    sizes = list(range(2, top + 1))
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(sizes))) as pool:
            values = list(pool.map(
                _cut_sum, [g.adjacency] * len(sizes), [n] * len(sizes), sizes
            ))
    else:
        values = [_cut_sum(g.adjacency, n, size) for size in sizes]
    return CutCoefficients(tuple(values), n, truncated)


def maximal_disconnected_subsets(g: Graph) -> List[VertexSet]:
    n = g.num_vertices
    adjacency = g.adjacency
    disconnected = set()
    for mask in range(1, 1 << n):
        if component_count(adjacency, mask) > 1:
            disconnected.add(mask)
    # a disconnected set with a disconnected proper superset also has a
    # disconnected one-vertex extension
    maximal = [VertexSet(mask, n) for mask in disconnected
               if all(mask | 1 << v not in disconnected
                      for v in range(0, n) if not mask >> v & 1)]
    return sorted(maximal, key=VertexSet.sort_key)


def cone_vertices(g: Graph) -> List[int]:
    """
    Vertices adjacent to every other vertex.
    """
    n = g.num_vertices
    if n < 2:
        return []
    full = (1 << n) - 1
    return [v for v in range(0, n) if g.adjacency[v] | 1 << v == full]


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(
        g, VertexSet.full(g.num_vertices).intersection(
            VertexSet.from_indices([v], g.num_vertices).complement()
        ))


def _numbered(n: int) -> List[str]:
    return [str(i) for i in range(1, n + 1)]


def empty_graph(n: int) -> Graph:
    return Graph(_numbered(n))


def path_graph(n: int) -> Graph:
    return Graph.from_indices(_numbered(n), [(i, i + 1)
                                             for i in range(0, n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("A cycle needs at least 3 vertices")
    return Graph.from_indices(_numbered(n),
                              [(i, (i + 1) % n) for i in range(0, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_indices(_numbered(n), combinations(range(0, n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """
    K_{n_1,...,n_r}: vertices in consecutive blocks, edges between blocks.
    """
    block = []
    for part, size in enumerate(parts):
        block.extend([part] * size)
    edges = [(i, j) for i, j in combinations(range(0, len(block)), 2)
             if block[i] != block[j]]
    return Graph.from_indices(_numbered(len(block)), edges)


def graph_from_networkx(nx_graph: nx.Graph) -> Graph:
    """
    Vertex order follows the node order of nx_graph.
    """
    names = [str(node) for node in nx_graph.nodes()]
    return Graph(names, ((str(u), str(v)) for u, v in nx_graph.edges()))
