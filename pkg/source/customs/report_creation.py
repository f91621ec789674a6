"""
Set of custom functions assembling the invariant report of a graph and the
certificates distinguishing its Bestvina-Brady group. Every number in the
report is recomputable from the graph document and the recorded seed.
"""

import logging
from typing import Dict, List, Optional

from core.alexander import alexander_presentation, infinitesimal_presentation
from core.flag_homology import flag_complex, homology_ranks, integral_h1, \
    simply_connected_status, SimplyConnected, bb_homology_module, \
    truncated_cohomology_dims
from core.graph_core import Graph, CutCoefficients, is_connected, \
    connectivity, cut_coefficients, maximal_disconnected_subsets, \
    cone_vertices, delete_vertex
from core.invariants_context import InvariantsContext
from core.jump_loci import resonance_components, characteristic_components, \
    odd_contraction, not_arrangement_certificate, not_artin_certificate, \
    FullComponent, SubspaceComponent, Component, Certificate
from core.presentations import raag_presentation, dicks_leary_presentation, \
    spanning_tree_reduction, presentation_summary, holonomy_h2_rank
from core.series import clique_polynomial, lcs_ranks, chen_ranks, \
    RankVector
from core.triangulations import validate
from core.utilities.errors import GateError
from customs.crosscheck_creation import create_crosscheck
from data_management.json_format import graph_document

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

SCHEMA_VERSION = 1


def _names(g: Graph, indices) -> List[str]:
    return [g.vertices[i] for i in indices]


def _ranks(vector: RankVector) -> Dict:
    return {"values": list(vector.values), "truncated": vector.truncated}


def _component(g: Graph, component: Component) -> Dict:
    if isinstance(component, FullComponent):
        return {"subset": list(g.vertices), "kind": "full-" + component.kind,
                "dimension": component.dimension,
                "ambient_dimension": component.ambient_dimension}
    document = {"subset": _names(g, component.subset),
                "kind": "subspace" if isinstance(component, SubspaceComponent)
                else "torus",
                "dimension": component.dimension,
                "ambient_dimension": component.ambient_dimension}
    if isinstance(component, SubspaceComponent):
        document["basis"] = [[str(x) for x in vector]
                             for vector in component.basis]
    return document


class Gates:
    """
    Hypotheses of the results on the Bestvina-Brady group: connectivity of
    the graph and simple connectivity of its flag complex.
    """

    def __init__(self, g: Graph, assume_simply_connected: bool,
                 disk_validated: bool):
        self.connected = is_connected(g)
        self.status = simply_connected_status(flag_complex(g), disk_validated)
        self.assumed = assume_simply_connected and \
            self.status == SimplyConnected.UNKNOWN
        self.disk_validated = disk_validated

    @property
    def simply_connected(self) -> bool:
        return self.status == SimplyConnected.YES or self.assumed

    @property
    def refused(self) -> bool:
        """
        Undecided and not overridden, the only refusal reported by exit code.
        """
        return self.status == SimplyConnected.UNKNOWN and not self.assumed

    def reason(self) -> Optional[str]:
        if not self.connected:
            return "graph is not connected"
        if not self.simply_connected:
            return "flag complex simply connected: {}".format(
                self.status.value
            )
        return None

    def to_dict(self) -> Dict:
        return {"connected": self.connected,
                "simply_connected": self.status.value,
                "assumed": self.assumed,
                "disk_validated": self.disk_validated}


def graph_section(g: Graph, cuts: CutCoefficients) -> Dict:
    return {
        "num_vertices": g.num_vertices,
        "num_edges": g.num_edges,
        "connectivity": connectivity(g),
        "clique_polynomial": list(clique_polynomial(g).coefficients),
        "cut_polynomial": {"coefficients": [0, 0] + list(cuts.values),
                           "truncated": cuts.truncated},
        "cone_vertices": _names(g, cone_vertices(g)),
        "maximal_disconnected_subsets": [
            _names(g, w) for w in maximal_disconnected_subsets(g)
        ],
        "holonomy_h2_rank": holonomy_h2_rank(g),
    }


def ranks_section(g: Graph, cuts: CutCoefficients, order: int,
                  gates: Gates) -> Dict:
    polynomial = clique_polynomial(g)
    modes = ["raag"] + (["bb"] if gates.connected else [])
    return {mode: {"lcs": _ranks(lcs_ranks(polynomial, mode, order)),
                   "chen": _ranks(chen_ranks(cuts, mode, order))}
            for mode in modes}


def homology_section(g: Graph, context: InvariantsContext,
                     gates: Gates) -> Dict:
    complex_ = flag_complex(g)
    field = context.args.field
    section = {
        "field": field,
        "flag_complex": [row._asdict() for row in homology_ranks(complex_,
                                                                 field)],
        "integral_h1": integral_h1(complex_)._asdict(),
    }
    section["integral_h1"]["torsion"] = list(
        section["integral_h1"]["torsion"]
    )
    if gates.connected:
        modules = []
        for r in range(1, complex_.dimension + 2):
            module = bb_homology_module(g, field, r)
            modules.append({"degree": r, "free_rank": module.free_rank,
                            "trivial_rank": module.trivial_rank,
                            "finitely_generated": module.finitely_generated})
        section["bb_modules"] = modules
        dims = truncated_cohomology_dims(g)
        section["bb_truncated_cohomology"] = list(dims)
    return section


def finiteness_section(g: Graph, gates: Gates) -> Dict:
    """
    The kernel is finitely generated exactly when the graph is connected and
    finitely presented exactly when the flag complex is simply connected.
    """
    notes = []
    if not gates.connected:
        notes.append("Γ not connected; N_Γ not finitely generated")
    elif gates.status == SimplyConnected.NO:
        notes.append("Δ_Γ not simply connected; N_Γ not finitely presented")
    elif gates.status == SimplyConnected.UNKNOWN:
        notes.append("simple connectivity of Δ_Γ undecided")
    section = {
        "finitely_generated": gates.connected,
        "finitely_presented": gates.connected and
        gates.status == SimplyConnected.YES,
        "notes": notes,
    }
    cones = cone_vertices(g)
    if len(cones) > 0 and g.num_vertices > 1:
        apex = cones[0]
        section["isomorphic_to_raag_of"] = {
            "apex": g.vertices[apex],
            "graph": graph_document(delete_vertex(g, apex)),
        }
    return section


def presentations_section(g: Graph, context: InvariantsContext,
                          gates: Gates, omitted: Dict[str, str]) -> Dict:
    args = context.args
    section = {"raag": presentation_summary(raag_presentation(g))}
    alexander = alexander_presentation(g)
    section["alexander"] = {"shape": list(alexander.shape),
                            "linear_shape": list(
                                infinitesimal_presentation(g).shape)}
    reason = gates.reason()
    if reason is not None:
        omitted["presentations.bb"] = reason
    elif g.num_edges > 0:
        section["dicks_leary"] = presentation_summary(dicks_leary_presentation(
            g, args.assume_simply_connected, gates.disk_validated
        ))
        section["tree_reduced"] = presentation_summary(
            spanning_tree_reduction(g, None, args.assume_simply_connected,
                                    gates.disk_validated)
        )
    return section


def jump_loci_section(g: Graph, context: InvariantsContext, gates: Gates,
                      omitted: Dict[str, str]) -> Dict:
    args = context.args
    section = {"raag": {
        "resonance": [_component(g, c)
                      for c in resonance_components(g, "raag")],
        "characteristic": [_component(g, c)
                           for c in characteristic_components(g, "raag")],
    }}
    reason = gates.reason()
    if reason is not None:
        omitted["jump_loci.bb"] = reason
        return section
    section["bb"] = {
        "resonance": [_component(g, c) for c in resonance_components(
            g, "bb", args.assume_simply_connected, gates.disk_validated
        )],
        "characteristic": [_component(g, c) for c in
                           characteristic_components(
                               g, "bb", args.assume_simply_connected,
                               gates.disk_validated)],
    }
    return section


def certificates_section(g: Graph, context: InvariantsContext) -> Dict:
    """
    The not_artin and not_arrangement certificates, inconclusive with a
    reason when their hypotheses fail. A gate refusal with status unknown
    and no override is raised.
    """
    args = context.args
    try:
        arrangement = not_arrangement_certificate(
            g, args.assume_simply_connected, context.disk_validated
        )
    except GateError as error:
        if error.status == SimplyConnected.UNKNOWN.value:
            raise
        arrangement = Certificate("inconclusive", {}, str(error))
    artin = not_artin_certificate(g, context.triangulation)
    return {"not_artin": artin.to_dict(),
            "not_arrangement": arrangement.to_dict()}


def odd_contraction_section(context: InvariantsContext) -> Dict:
    weighted = context.weighted
    contraction = odd_contraction(weighted)
    order = context.args.order
    section = {"graph": graph_document(contraction),
               "ranks": {"lcs": _ranks(lcs_ranks(
                   clique_polynomial(contraction), "raag", order)),
                   "chen": _ranks(chen_ranks(
                       cut_coefficients(contraction), "raag", order))}}
    return section


def create_report(context: InvariantsContext) -> Dict:
    """
    Creates the invariant report of the graph in the context.
    :param context: An InvariantsContext, its args give order, field, seed
    and gate override.
    :return: The report document. Sections about the Bestvina-Brady group
    whose hypotheses fail are left out and listed under "omitted" with the
    reason.
    """
    logger = logging.getLogger(__name__)
    g = context.graph
    args = context.args
    gates = Gates(g, args.assume_simply_connected, context.disk_validated)
    omitted = {}

    report = {
        "schema_version": SCHEMA_VERSION,
        "graph": graph_document(g, context.weighted, context.triangulation),
        "order": args.order,
        "field": args.field,
        "seed": args.seed,
        "gates": gates.to_dict(),
    }
    logger.info("Computing graph invariants")
    cuts = cut_coefficients(g, args.max_subset_size, args.workers)
    report["invariants"] = graph_section(g, cuts)
    logger.info("Computing rank vectors")
    report["ranks"] = ranks_section(g, cuts, args.order, gates)
    if not gates.connected:
        omitted["ranks.bb"] = "graph is not connected"
    logger.info("Computing homology")
    report["homology"] = homology_section(g, context, gates)
    if not gates.connected:
        omitted["homology.bb_modules"] = "graph is not connected"
    report["finiteness"] = finiteness_section(g, gates)
    logger.info("Computing presentations")
    report["presentations"] = presentations_section(g, context, gates,
                                                    omitted)
    logger.info("Computing jump loci")
    report["jump_loci"] = jump_loci_section(g, context, gates, omitted)
    if gates.refused:
        omitted["certificates"] = gates.reason()
    else:
        report["certificates"] = certificates_section(g, context)
    if context.triangulation is not None:
        validation = validate(context.triangulation)
        report["triangulation"] = {"kind": context.triangulation.kind,
                                   "checks": dict(validation.checks),
                                   "failures": list(validation.failures),
                                   "matches_graph":
                                       context.triangulation.graph == g}
    if context.weighted is not None:
        report["odd_contraction"] = odd_contraction_section(context)
    logger.info("Cross-checking oracles")
    report["crosscheck"] = create_crosscheck(context)
    report["omitted"] = omitted
    return report


def create_certificates(context: InvariantsContext) -> Dict:
    """
    The document emitted by distinguish: graph echo, gate statuses and the
    two certificates.
    """
    g = context.graph
    gates = Gates(g, context.args.assume_simply_connected,
                  context.disk_validated)
    if gates.refused:
        raise GateError("Flag complex simply connected: unknown",
                        SimplyConnected.UNKNOWN.value)
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": graph_document(g, context.weighted, context.triangulation),
        "gates": gates.to_dict(),
        "certificates": certificates_section(g, context),
    }


def exit_status(document: Dict) -> int:
    """
    3 when a cross-check disagreed, 2 when the simple connectivity gate was
    undecided and not overridden, 0 otherwise.
    """
    crosscheck = document.get("crosscheck", document)
    if len(crosscheck.get("disagreements", [])) > 0:
        return 3
    gates = document.get("gates", {})
    if gates.get("simply_connected") == SimplyConnected.UNKNOWN.value and \
            not gates.get("assumed", False):
        return 2
    return 0
