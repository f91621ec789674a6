"""
Sampling cross-validation: points drawn on every predicted jump-loci
component and generic points are tested against the oracles that work
straight from the definitions, and the rank formulas are checked against
their independent evaluations.
"""

import logging
from typing import Dict, List, Optional, Sequence

from core.alexander import alexander_presentation, \
    infinitesimal_presentation, evaluate_support, Support
from core.flag_homology import simply_connected_status, flag_complex, \
    SimplyConnected
from core.graph_core import Graph, is_connected, cut_coefficients
from core.invariants_context import InvariantsContext
from core.jump_loci import resonance_components, characteristic_components, \
    resonance_membership_oracle, characteristic_membership_oracle, \
    FullComponent, Component
from core.presentations import raag_presentation, spanning_tree_reduction, \
    holonomy_h2_rank
from core.sampling import RationalSampler
from core.series import graph_lcs_ranks, chen_ranks, \
    chen_ranks_by_substitution, clique_polynomial, rank_product_series, \
    PowerSeries
from core.utilities.errors import OracleDisagreementError

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


def _label(g: Graph, component: Component) -> List[str]:
    if isinstance(component, FullComponent):
        return list(g.vertices)
    return [g.vertices[i] for i in component.subset]


def _text(point: Sequence) -> List[str]:
    return [str(x) for x in point]


def _plain(value):
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, (list, tuple)):
        return _text(value)
    return str(value)


class _Tally:
    def __init__(self):
        self.checks = []
        self.disagreements = []

    def record(self, target: str, kind: str, component: Optional[List[str]],
               verdicts: List):
        agreed = 0
        for point, expected, actual in verdicts:
            if expected == actual:
                agreed += 1
            else:
                logging.getLogger(__name__).warning(
                    "{} {} oracle says {} at {}, components say {}".format(
                        target, kind, actual, _text(point), expected
                    ))
                self.disagreements.append({
                    "target": target, "kind": kind, "point": _text(point),
                    "expected": _plain(expected), "actual": _plain(actual),
                })
        self.checks.append({
            "target": target, "kind": kind,
            "component": component if component is not None else "generic",
            "points": len(verdicts), "agreed": agreed,
        })


def _jump_loci_checks(g: Graph, target: str, sampler: RationalSampler,
                      points: int, assume: bool, disk_validated: bool,
                      tally: _Tally):
    n = g.num_vertices
    dimension = n if target == "raag" else n - 1
    if target == "raag":
        presentation = raag_presentation(g)
        alexander = alexander_presentation(g)
        linear = infinitesimal_presentation(g)
    else:
        presentation = spanning_tree_reduction(g, None, assume,
                                               disk_validated)
        alexander = None
        linear = None

    def resonant(a) -> bool:
        return resonance_membership_oracle(g, target, a, assume,
                                           disk_validated)

    def supported(a) -> bool:
        return evaluate_support(linear, a) == Support.IN

    def jumping(rho) -> bool:
        try:
            return characteristic_membership_oracle(
                g, target, rho, assume, disk_validated, presentation,
                alexander
            )
        except OracleDisagreementError:
            # logged by the oracle, recorded as a disagreement by the tally
            return None

    resonance = resonance_components(g, target, assume, disk_validated)
    for component in resonance + [None]:
        verdicts = []
        supports = []
        for _ in range(0, points):
            if component is None:
                a = sampler.generic_vector(dimension)
                expected = any(c.contains(a) for c in resonance)
            else:
                a = sampler.resonance_point(component)
                expected = True
            verdicts.append((a, expected, resonant(a)))
            if linear is not None:
                supports.append((a, expected, supported(a)))
        label = _label(g, component) if component is not None else None
        tally.record(target, "resonance", label, verdicts)
        if linear is not None:
            tally.record(target, "linear-support", label, supports)

    characteristic = characteristic_components(g, target, assume,
                                               disk_validated)
    for component in characteristic:
        verdicts = []
        for _ in range(0, points):
            rho = sampler.character_point(component)
            verdicts.append((rho, True, jumping(rho)))
        tally.record(target, "characteristic", _label(g, component),
                     verdicts)
    verdicts = []
    for _ in range(0, points):
        rho = sampler.generic_character(dimension)
        expected = any(c.contains(rho) for c in characteristic)
        verdicts.append((rho, expected, jumping(rho)))
    tally.record(target, "characteristic", None, verdicts)


def _rank_checks(g: Graph, target: str, order: int, workers: int,
                 tally: _Tally):
    """
    Chen closed form against the substitution series, the product formula
    against the clique polynomial and phi_2 against the holonomy rank.
    """
    cuts = cut_coefficients(g, None, workers)
    closed = chen_ranks(cuts, target, order)
    substituted = chen_ranks_by_substitution(cuts, target, order)
    tally.record(target, "chen", None, [(closed.values, closed.values,
                                         substituted.values)])

    lcs = graph_lcs_ranks(g, target, order)
    product = rank_product_series(lcs.values, order + 1)
    expected = clique_polynomial(g).at_negative().to_series(order + 1)
    if target == "bb":
        expected = expected * PowerSeries.geometric(order + 1)
    tally.record(target, "lcs", None, [(lcs.values, expected.coefficients,
                                        product.coefficients)])
    if order >= 2:
        tally.record(target, "holonomy", None, [
            (lcs.values[:2], holonomy_h2_rank(g), lcs.values[1])
        ])


def create_crosscheck(context: InvariantsContext) -> Dict:
    """
    Runs every cross-check the graph admits and summarizes them.
    :param context: The context of the run, its args give seed, number of
    points and truncation order.
    :return: The summary document: seed, checks with their agreement counts
    and the disagreeing points.
    """
    logger = logging.getLogger(__name__)
    g = context.graph
    args = context.args
    sampler = RationalSampler(args.seed)
    tally = _Tally()
    skipped = {}

    targets = ["raag"]
    if not is_connected(g):
        skipped["bb"] = "graph is not connected"
    elif g.num_vertices == 1:
        skipped["bb"] = "the Bestvina-Brady group of one vertex is trivial"
    else:
        status = simply_connected_status(flag_complex(g),
                                         context.disk_validated)
        if status == SimplyConnected.YES or \
                (status == SimplyConnected.UNKNOWN and
                 args.assume_simply_connected):
            targets.append("bb")
        else:
            skipped["bb"] = "flag complex simply connected: {}".format(
                status.value
            )

    for target in targets:
        logger.info("Cross-checking {} jump loci".format(target))
        _jump_loci_checks(g, target, sampler, args.points,
                          args.assume_simply_connected,
                          context.disk_validated, tally)
    for target in ["raag"] + (["bb"] if is_connected(g) else []):
        logger.info("Cross-checking {} rank formulas".format(target))
        _rank_checks(g, target, args.order, args.workers, tally)

    total = sum(check["points"] for check in tally.checks)
    agreed = sum(check["agreed"] for check in tally.checks)
    logger.info("Agreement on {} of {} points".format(agreed, total))
    return {
        "seed": args.seed,
        "points_per_component": args.points,
        "total": total,
        "agreed": agreed,
        "checks": tally.checks,
        "skipped": skipped,
        "disagreements": tally.disagreements,
    }
