"""
Special triangulations of the disk, built one triangle at a time along a
boundary edge, and their extra-special extensions.
"""

import logging
from typing import List, Tuple, Dict, NamedTuple, Optional, Sequence

import numpy as np
from sortedcontainers import SortedSet

from core.graph_core import Graph, connectivity, cliques
from core.utilities.errors import TriangulationError
from core.utilities.type_aliases import Triple

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

KINDS = ("special", "extra-special")
Step = Tuple[str, str]


class DiskTriangulation:
    """
    A triangulated disk: its 1-skeleton, its triangles as sorted index
    triples, the boundary circuit as a cyclic list of vertex indices and the
    build log. For extra-special triangulations special_boundary lists the
    boundary edges of the special triangulation it extends.
    """

    def __init__(self, graph: Graph, triangles: Sequence[Triple],
                 boundary: Sequence[int], steps: Sequence[Step], kind: str,
                 special_boundary: Sequence[Tuple[int, int]] = ()):
        if kind not in KINDS:
            raise ValueError("Triangulation kind must be one of {}".format(
                KINDS
            ))
        self.__graph = graph
        self.__triangles = tuple(tuple(sorted(t)) for t in triangles)
        self.__boundary = tuple(boundary)
        self.__steps = tuple((str(u), str(v)) for u, v in steps)
        self.__kind = kind
        self.__special_boundary = tuple(
            (min(u, v), max(u, v)) for u, v in special_boundary
        )

    @property
    def graph(self) -> Graph:
        return self.__graph

    @property
    def triangles(self) -> Tuple[Triple, ...]:
        return self.__triangles

    @property
    def boundary(self) -> Tuple[int, ...]:
        return self.__boundary

    @property
    def boundary_edges(self) -> List[Tuple[int, int]]:
        circuit = self.__boundary
        return [(min(a, b), max(a, b))
                for a, b in zip(circuit, circuit[1:] + circuit[:1])]

    @property
    def steps(self) -> Tuple[Step, ...]:
        return self.__steps

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def special_boundary(self) -> Tuple[Tuple[int, int], ...]:
        return self.__special_boundary

    def __str__(self) -> str:
        return "DiskTriangulation({}, {} vertices, {} triangles)".format(
            self.__kind, self.__graph.num_vertices, len(self.__triangles)
        )

    __repr__ = __str__


class _Builder:
    def __init__(self):
        self.names = ["1", "2", "3"]
        self.edges = [(0, 1), (1, 2), (0, 2)]
        self.triangles = [(0, 1, 2)]
        self.boundary = [0, 1, 2]

    def boundary_position(self, a: int, b: int) -> Optional[int]:
        size = len(self.boundary)
        for i in range(0, size):
            pair = {self.boundary[i], self.boundary[(i + 1) % size]}
            if pair == {a, b}:
                return i
        return None

    def attach(self, i: int) -> int:
        """
        Adds a vertex on the boundary edge starting at position i.
        """
        size = len(self.boundary)
        a, b = self.boundary[i], self.boundary[(i + 1) % size]
        apex = len(self.names)
        self.names.append(str(apex + 1))
        self.edges.extend([(min(a, apex), apex), (min(b, apex), apex)])
        self.triangles.append(tuple(sorted((a, b, apex))))
        self.boundary.insert(i + 1, apex)
        return apex

    def build(self, steps: Sequence[Step], kind: str,
              special_boundary: Sequence[Tuple[int, int]] = ()
              ) -> DiskTriangulation:
        graph = Graph.from_indices(self.names, self.edges)
        return DiskTriangulation(graph, self.triangles, self.boundary, steps,
                                 kind, special_boundary)


def build_special(steps: Optional[Sequence[Step]] = None,
                  seed: Optional[int] = None,
                  count: int = 0) -> DiskTriangulation:
    """
    Builds a special triangulation starting from the triangle on vertices
    1, 2, 3. Each step names a boundary edge by its two vertex names and
    attaches a new vertex, named by the next integer, along it.

    :param steps: The attachment script. When None, count steps are chosen
        uniformly among the boundary edges by a generator seeded with seed.
    :param seed: Seed of the random builds.
    :param count: Number of random steps.
    :return: The triangulation, with the steps actually used as build log.
    """
    builder = _Builder()
    used = []
    if steps is not None:
        for index, (u, v) in enumerate(steps):
            names = {name: i for i, name in enumerate(builder.names)}
            a, b = names.get(str(u)), names.get(str(v))
            position = None
            if a is not None and b is not None:
                position = builder.boundary_position(a, b)
            if position is None:
                logging.getLogger(__name__).error(
                    "Step {} names {}-{}, not a boundary edge".format(
                        index, u, v
                    ))
                raise TriangulationError(
                    "Step {} names {}-{}, which is not a boundary edge"
                    .format(index, u, v), index
                )
            builder.attach(position)
            used.append((str(u), str(v)))
    else:
        rng = np.random.default_rng(seed)
        for _ in range(0, count):
            position = int(rng.integers(0, len(builder.boundary)))
            size = len(builder.boundary)
            a = builder.boundary[position]
            b = builder.boundary[(position + 1) % size]
            used.append((builder.names[a], builder.names[b]))
            builder.attach(position)
    return builder.build(used, "special")


def extend_extra_special(d: DiskTriangulation) -> DiskTriangulation:
    """
    Adds one triangle on every boundary edge of a validated special
    triangulation.
    """
    report = validate(d)
    if d.kind != "special" or not report.passed:
        raise TriangulationError(
            "Extension needs a valid special triangulation: {}".format(
                "; ".join(report.failures) or "kind is " + d.kind
            ))
    builder = _Builder()
    builder.names = list(d.graph.vertices)
    builder.edges = d.graph.edges
    builder.triangles = list(d.triangles)
    builder.boundary = list(d.boundary)
    special_boundary = d.boundary_edges
    # walk the original circuit, each attachment shifts the next edge by one
    position = 0
    for _ in range(0, len(special_boundary)):
        builder.attach(position)
        position += 2
    return builder.build(d.steps, "extra-special", special_boundary)


class ValidationReport(NamedTuple):
    checks: Dict[str, bool]
    failures: List[str]

    @property
    def passed(self) -> bool:
        return len(self.failures) == 0


def validate(d: DiskTriangulation) -> ValidationReport:
    """
    Checks 2|V| - |E| = 3, that the triangles are exactly the 3-cliques of
    the 1-skeleton, that the boundary circuit is a simple cycle made of the
    edges lying on one triangle only, and connectivity above 1 for
    extra-special triangulations.
    """
    graph = d.graph
    checks = {}
    failures = []

    count = 2 * graph.num_vertices - graph.num_edges
    checks["euler_count"] = count == 3
    if not checks["euler_count"]:
        failures.append("2|V| - |E| is {}, expected 3".format(count))

    three_cliques = SortedSet(c for c in cliques(graph) if len(c) == 3)
    checks["flag"] = three_cliques == SortedSet(d.triangles) and \
        len(set(d.triangles)) == len(d.triangles)
    if not checks["flag"]:
        failures.append("3-cliques of the graph differ from the triangles")

    circuit = d.boundary
    simple = len(circuit) >= 3 and len(set(circuit)) == len(circuit) and \
        all(0 <= v < graph.num_vertices for v in circuit) and \
        all(graph.has_edge(a, b) for a, b in d.boundary_edges)
    on_one_triangle = SortedSet()
    if simple:
        usage = {}
        for t in d.triangles:
            for pair in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
                usage[pair] = usage.get(pair, 0) + 1
        on_one_triangle = SortedSet(p for p, n in usage.items() if n == 1)
    checks["boundary"] = simple and \
        on_one_triangle == SortedSet(d.boundary_edges)
    if not checks["boundary"]:
        failures.append("Boundary circuit is not the simple cycle of edges "
                        "on a single triangle")

    if d.kind == "extra-special":
        kappa = connectivity(graph) if graph.num_vertices > 0 else 0
        checks["connectivity"] = kappa > 1
        if not checks["connectivity"]:
            failures.append("Connectivity {} is not above 1".format(kappa))
    return ValidationReport(checks, failures)


def to_build_script(d: DiskTriangulation) -> Dict:
    return {"kind": d.kind, "steps": [list(step) for step in d.steps]}


def replay(script: Dict) -> DiskTriangulation:
    """
    Rebuilds a triangulation from its build script.
    """
    kind = script.get("kind", "special")
    if kind not in KINDS:
        raise TriangulationError("Unknown triangulation kind {}".format(kind))
    steps = [tuple(step) for step in script.get("steps", [])]
    for index, step in enumerate(steps):
        if len(step) != 2:
            raise TriangulationError(
                "Step {} must name exactly two vertices".format(index), index
            )
    special = build_special(steps)
    if kind == "extra-special":
        return extend_extra_special(special)
    return special
