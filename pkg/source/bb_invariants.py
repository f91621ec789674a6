"""
This script and the functions used in it are how the toolbox works. Each
subcommand reads a graph document, or builds one, and writes a JSON document
to the standard output or to --out.

Exit codes: 0 success, 1 invalid input, 2 simple connectivity undecided and
not overridden, 3 disagreement between the oracles or a failed internal
identity.
"""

import logging
import sys
from typing import List, Optional

from core.handlers.composite_handler import CompositeReportHandler
from core.handlers.json_handler import JSONReportHandler
from core.handlers.plot_handler import PlotReportHandler
from core.handlers.table_handler import TableReportHandler
from core.invariants_context import InvariantsContext, InvariantsArgs
from core.triangulations import build_special, extend_extra_special, \
    validate
from core.utilities.errors import GateError, GraphDocumentError, \
    TriangulationError, OracleDisagreementError, IdentityViolationError, \
    ChainComplexError
from customs.crosscheck_creation import create_crosscheck
from customs.report_creation import create_report, create_certificates, \
    exit_status, Gates, SCHEMA_VERSION
from data_management.json_format import parse_graph_file, graph_document
from utilities.logger_setup import LoggerSetup
from utilities.terminal import create_parser, get_logger_args, \
    get_graph_args, get_invariants_args, get_steps_args, get_output_args

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


def load_context(args) -> InvariantsContext:
    filename = get_graph_args(args)
    invariants_args = get_invariants_args(args)
    graph, weighted, triangulation = parse_graph_file(filename)
    logger = logging.getLogger(__name__)
    logger.info("Graph is {}".format(graph))
    invariants_args.log_args(logger)
    return InvariantsContext(graph, invariants_args, weighted, triangulation)


def cmd_report(args) -> int:
    context = load_context(args)
    output = get_output_args(args)
    handlers = [JSONReportHandler(output["out"])]
    if output["directory"] is not None:
        handlers.append(TableReportHandler(output["directory"]))
        handlers.append(PlotReportHandler(output["directory"]))
    report = create_report(context)
    CompositeReportHandler(handlers).handle_report(report, context)
    return exit_status(report)


def cmd_generate(args) -> int:
    steps = get_steps_args(args)
    output = get_output_args(args)
    if steps is None:
        seed = args.seed if args.seed is not None else 0
        triangulation = build_special(None, seed, max(args.count, 0))
    else:
        triangulation = build_special(steps)
    if args.kind == "extra-special":
        triangulation = extend_extra_special(triangulation)
    report = validate(triangulation)
    if not report.passed:
        logging.getLogger(__name__).error(
            "Generated triangulation fails: {}".format(
                "; ".join(report.failures)
            ))
        raise TriangulationError("Generated triangulation does not validate")
    document = graph_document(triangulation.graph, None, triangulation)
    context = InvariantsContext(triangulation.graph, InvariantsArgs(),
                                None, triangulation)
    JSONReportHandler(output["out"]).handle_report(document, context)
    return 0


def cmd_distinguish(args) -> int:
    context = load_context(args)
    output = get_output_args(args)
    document = create_certificates(context)
    JSONReportHandler(output["out"]).handle_report(document, context)
    return 0


def cmd_crosscheck(args) -> int:
    context = load_context(args)
    output = get_output_args(args)
    gates = Gates(context.graph, context.args.assume_simply_connected,
                  context.disk_validated)
    document = {
        "schema_version": SCHEMA_VERSION,
        "graph": graph_document(context.graph, context.weighted,
                                context.triangulation),
        "gates": gates.to_dict(),
        "crosscheck": create_crosscheck(context),
    }
    JSONReportHandler(output["out"]).handle_report(document, context)
    return exit_status(document)


commands = {
    "report": cmd_report,
    "generate": cmd_generate,
    "distinguish": cmd_distinguish,
    "crosscheck": cmd_crosscheck,
}


def main(argv: Optional[List[str]] = None) -> int:
    script_name = "bb_invariants"
    parser = create_parser(script_name)
    args = parser.parse_args(argv)
    setup = LoggerSetup()
    logger = logging.getLogger(__name__)
    try:
        get_logger_args(args, setup)
        return commands[args.command](args)
    except (GraphDocumentError, TriangulationError) as error:
        logger.error(str(error))
        return 1
    except GateError as error:
        logger.error("Gate refused: {}".format(error))
        return 2
    except OracleDisagreementError as error:
        logger.error("{} at {}".format(error, [str(x) for x in error.point]))
        return 3
    except (IdentityViolationError, ChainComplexError) as error:
        logger.error("Internal identity failed: {}".format(error))
        return 3
    except ValueError as error:
        logger.error(str(error))
        return 1
    finally:
        setup.close()


if __name__ == "__main__":
    sys.exit(main())
