"""
Reading and writing of graph documents: a JSON object with the ordered list
of "vertices", the "edges" as pairs of vertices, optional "weights" as a map
"u-v" -> integer >= 2 and an optional "triangulation" build script.
"""

import json
import logging
from typing import Dict, Optional, Tuple

from core.graph_core import Graph, WeightedGraph
from core.triangulations import DiskTriangulation, replay, to_build_script
from core.utilities.errors import GraphDocumentError, TriangulationError

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


def _fail(message: str, field: Optional[str] = None, line: int = None,
          column: int = None):
    logging.getLogger(__name__).error(message)
    raise GraphDocumentError(message + " - check log.", field, line, column)


def parse_graph_text(text: str) -> Tuple[Graph, Optional[WeightedGraph],
                                         Optional[DiskTriangulation]]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        _fail("Invalid JSON at line {} column {}: {}".format(
            error.lineno, error.colno, error.msg
        ), None, error.lineno, error.colno)
    return parse_graph_document(document)


def parse_graph_file(filename: str) -> Tuple[Graph, Optional[WeightedGraph],
                                             Optional[DiskTriangulation]]:
    """
    Parses the graph document in filename.

    :param filename: Path of the JSON document.
    :return: The graph, the weighted graph if weights are present and the
        replayed triangulation if a build script is present.
    """
    try:
        with open(filename) as document:
            text = document.read()
    except OSError as error:
        _fail("Cannot read {}: {}".format(filename, error))
    return parse_graph_text(text)


def parse_graph_document(document: Dict
                         ) -> Tuple[Graph, Optional[WeightedGraph],
                                    Optional[DiskTriangulation]]:
    if not isinstance(document, dict):
        _fail("Graph document must be a JSON object")
    vertices = document.get("vertices")
    if not isinstance(vertices, list) or \
            not all(isinstance(v, str) for v in vertices):
        _fail("Field vertices must be a list of strings", "vertices")
    if len(vertices) == 0:
        _fail("Field vertices is empty", "vertices")
    if len(set(vertices)) != len(vertices):
        _fail("Field vertices has duplicates", "vertices")
    edges = document.get("edges", [])
    if not isinstance(edges, list):
        _fail("Field edges must be a list", "edges")
    known = set(vertices)
    seen = set()
    for i, edge in enumerate(edges):
        field = "edges[{}]".format(i)
        if not isinstance(edge, list) or len(edge) != 2 or \
                not all(isinstance(v, str) for v in edge):
            _fail("{} must be a pair of vertex names".format(field), field)
        if edge[0] not in known or edge[1] not in known:
            _fail("{} uses an unknown vertex".format(field), field)
        if edge[0] == edge[1]:
            _fail("{} is a loop".format(field), field)
        key = frozenset(edge)
        if key in seen:
            _fail("{} duplicates an earlier edge".format(field), field)
        seen.add(key)
    graph = Graph(vertices, [tuple(edge) for edge in edges])

    weighted = None
    if "weights" in document:
        weighted = _parse_weights(graph, document["weights"])

    triangulation = None
    if "triangulation" in document:
        try:
            triangulation = replay(document["triangulation"])
        except (TriangulationError, TypeError, ValueError) as error:
            _fail("Field triangulation does not replay: {}".format(error),
                  "triangulation")
    return graph, weighted, triangulation


def _weight_edge(graph: Graph, key: str, field: str) -> Tuple[int, int]:
    """
    The edge named by a "u-v" key. Vertex names may contain "-" themselves,
    so every split point is tried and exactly one must give an edge.
    """
    known = set(graph.vertices)
    pairs = set()
    for position, char in enumerate(key):
        if char == "-" and key[:position] in known and \
                key[position + 1:] in known:
            i, j = graph.index(key[:position]), graph.index(key[position + 1:])
            pairs.add((min(i, j), max(i, j)))
    if "-" not in key:
        _fail("{} must map u-v to an integer >= 2".format(field), field)
    if len(pairs) == 0:
        _fail("{} uses an unknown vertex".format(field), field)
    edges = [pair for pair in pairs if graph.has_edge(*pair)]
    if len(edges) == 0:
        _fail("{} is not an edge".format(field), field)
    if len(edges) > 1:
        _fail("{} names more than one edge".format(field), field)
    return edges[0]


def _parse_weights(graph: Graph, weights) -> WeightedGraph:
    if not isinstance(weights, dict):
        _fail("Field weights must be an object", "weights")
    values = {}
    for key, value in weights.items():
        field = "weights[{}]".format(key)
        if not isinstance(value, int) or isinstance(value, bool) or value < 2:
            _fail("{} must map u-v to an integer >= 2".format(field), field)
        edge = _weight_edge(graph, key, field)
        if edge in values:
            _fail("{} duplicates an earlier weight".format(field), field)
        values[edge] = value
    missing = [edge for edge in graph.edges if edge not in values]
    if len(missing) > 0:
        _fail("Field weights misses edges {}".format(
            ["-".join(graph.edge_names(edge)) for edge in missing]
        ), "weights")
    return WeightedGraph(graph, values)


def graph_document(graph: Graph, weighted: Optional[WeightedGraph] = None,
                   triangulation: Optional[DiskTriangulation] = None
                   ) -> Dict:
    document = {
        "vertices": list(graph.vertices),
        "edges": [list(graph.edge_names(edge)) for edge in graph.edges],
    }
    if weighted is not None:
        document["weights"] = {
            "-".join(graph.edge_names(edge)): weight
            for edge, weight in weighted.weights.items()
        }
    if triangulation is not None:
        document["triangulation"] = to_build_script(triangulation)
    return document