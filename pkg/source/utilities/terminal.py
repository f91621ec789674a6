"""
This scripts contains all the possible terminal options of the user. Each
subcommand sets the options that it needs and gets them back from the parsed
terminal arguments.
"""

import logging
import os
from argparse import ArgumentParser
from typing import Dict, List, Optional, Tuple

import psutil

from core.factories import FieldFactory
from core.invariants_context import InvariantsArgs
from core.triangulations import KINDS
from core.utilities.errors import TriangulationError
from utilities.logger_setup import LoggerSetup

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

messages = {
    # MANDATORY
    "input-graph": "The file path of the JSON graph document.",
    "kind": "Kind of triangulation to generate. Choices are {}.",

    # OPTIONAL
    # INVARIANTS OPTIONS
    "order": "Number of lower central series and Chen ranks computed. "
             "Default is {}.",
    "field": "Coefficient field of the homology, q for the rationals or p "
             "followed by a prime. Default is {}.",
    "seed": "Seed of the random points of the cross-checks and of the random "
            "triangulations. Default is {}.",
    "max-subset-size": "Largest vertex subset enumerated for the cut "
                       "coefficients. Default is no limit.",
    "assume": "Assume the flag complex is simply connected when this cannot "
              "be decided. A complex known not to be simply connected is "
              "never assumed to be.",
    "threads": "Number of processes used for the subset enumeration. Default "
               "for this system is {}.",
    "points": "Number of random points for each jump loci component, and of "
              "generic points. Default is {}.",

    # GENERATE OPTIONS
    "steps": "Comma separated boundary edges of the build, as u-v pairs of "
             "vertex names, e.g. 2-3,2-4,3-4.",
    "count": "Number of random steps when --steps is missing. Default is {}.",

    # GENERAL
    "log": "Sets the name of the file where to save the logs other than on "
           "screen.",
    "verbosity": "Increase verbosity of logs with INFO too.",
    "out": "File of the output document. Default is the standard output.",
    "output-dir": "Name of directory for the rank and homology tables and the "
                  "rank plots. Nothing is written when missing.",
}

default = {
    "order": 12,
    "field": FieldFactory.default(),
    "seed": 0,
    "threads": psutil.cpu_count(),
    "points": 10,
    "count": 3,
}


def set_graph_args(parser: ArgumentParser):
    group = parser.add_argument_group("input data")
    group.add_argument("input", metavar="input-graph",
                       help=messages["input-graph"])


def set_invariants_args(parser: ArgumentParser):
    group = parser.add_argument_group("invariants")
    group.add_argument("--order", metavar="num", default=default["order"],
                       type=int,
                       help=messages["order"].format(default["order"]))
    group.add_argument("--field", metavar="label", default=default["field"],
                       help=messages["field"].format(default["field"]))
    group.add_argument("--max-subset-size", metavar="num", default=None,
                       type=int, help=messages["max-subset-size"])
    group.add_argument("--assume-simply-connected", action="store_true",
                       help=messages["assume"])
    group.add_argument("--threads", metavar="num", default=default["threads"],
                       type=int,
                       help=messages["threads"].format(default["threads"]))


def set_sampling_args(parser: ArgumentParser):
    group = parser.add_argument_group("sampling")
    group.add_argument("--seed", metavar="num", default=default["seed"],
                       type=int, help=messages["seed"].format(default["seed"]))
    group.add_argument("--points", metavar="num", default=default["points"],
                       type=int,
                       help=messages["points"].format(default["points"]))


def set_generate_args(parser: ArgumentParser):
    group = parser.add_argument_group("triangulation")
    group.add_argument("kind", choices=KINDS,
                       help=messages["kind"].format(", ".join(KINDS)))
    group.add_argument("--steps", metavar="edges", default=None,
                       help=messages["steps"])
    group.add_argument("--seed", metavar="num", default=None, type=int,
                       help=messages["seed"].format(default["seed"]))
    group.add_argument("--count", metavar="num", default=default["count"],
                       type=int,
                       help=messages["count"].format(default["count"]))


def set_logger_args(parser: ArgumentParser):
    group = parser.add_argument_group("log options")
    group.add_argument("-l", "--log", metavar="file",
                       help=messages["log"])
    group.add_argument("-v", "--verbosity", action="store_true",
                       help=messages["verbosity"])


def set_output_args(parser: ArgumentParser, tables: bool = False):
    group = parser.add_argument_group("output files")
    group.add_argument("--out", metavar="file", default=None,
                       help=messages["out"])
    if tables:
        group.add_argument("-d", "--directory", metavar="dir", default=None,
                           help=messages["output-dir"])


def create_parser(script_name: str) -> ArgumentParser:
    parser = ArgumentParser(script_name)
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    report = subparsers.add_parser(
        "report", help="Invariant report of a graph document."
    )
    set_graph_args(report)
    set_invariants_args(report)
    set_sampling_args(report)
    set_output_args(report, tables=True)
    set_logger_args(report)

    generate = subparsers.add_parser(
        "generate", help="Special or extra-special disk triangulation."
    )
    set_generate_args(generate)
    set_output_args(generate)
    set_logger_args(generate)

    distinguish = subparsers.add_parser(
        "distinguish", help="Certificates against Artin and arrangement "
                            "groups."
    )
    set_graph_args(distinguish)
    distinguish.add_argument("--assume-simply-connected",
                             action="store_true", help=messages["assume"])
    set_output_args(distinguish)
    set_logger_args(distinguish)

    crosscheck = subparsers.add_parser(
        "crosscheck", help="Oracle agreement on seeded random points."
    )
    set_graph_args(crosscheck)
    set_invariants_args(crosscheck)
    set_sampling_args(crosscheck)
    set_output_args(crosscheck)
    set_logger_args(crosscheck)
    return parser


def get_logger_args(args, setup: LoggerSetup):
    setup.configure(logging.INFO if args.verbosity else logging.WARNING,
                    args.log)
    if args.log:
        logging.getLogger(__name__).info("log file is {}".format(args.log))


def get_graph_args(args) -> str:
    logger = logging.getLogger(__name__)
    if not os.path.isfile(args.input):
        logger.error("File {} doesn't exist".format(args.input))
        raise ValueError("File {} doesn't exist".format(args.input))
    logger.info("Graph file is {}".format(args.input))
    return args.input


def get_invariants_args(args) -> InvariantsArgs:
    """
    Arguments of the invariant computations. Options a subcommand does not
    set take their default value.
    """
    logger = logging.getLogger(__name__)
    field = getattr(args, "field", default["field"])
    # raises ValueError on an unknown label
    FieldFactory.characteristic(field)

    order = getattr(args, "order", default["order"])
    if order < 1:
        logger.error("Order must be positive")
        raise ValueError("Order must be positive, not {}".format(order))

    points = getattr(args, "points", default["points"])
    if points < 1:
        logger.error("Number of points must be positive")
        raise ValueError("Number of points must be positive, not {}".format(
            points
        ))

    invariants_args = InvariantsArgs(
        order, field, getattr(args, "seed", default["seed"]),
        getattr(args, "max_subset_size", None),
        getattr(args, "assume_simply_connected", False), 1, points
    )
    # checks if the user puts 0 or less. In this case uses the default number
    # in this system
    invariants_args.workers = getattr(args, "threads", 1)
    return invariants_args


def get_steps_args(args) -> Optional[List[Tuple[str, str]]]:
    if args.steps is None:
        return None
    steps = []
    for index, token in enumerate(t for t in args.steps.split(",")
                                  if t.strip() != ""):
        names = token.strip().split("-")
        if len(names) != 2:
            logging.getLogger(__name__).error(
                "Step {} is {}, expected u-v".format(index, token)
            )
            raise TriangulationError(
                "Step {} is {}, expected u-v".format(index, token), index
            )
        steps.append((names[0], names[1]))
    return steps


def get_output_args(args) -> Dict[str, Optional[str]]:
    logger = logging.getLogger(__name__)
    directory = getattr(args, "directory", None)
    if directory is not None and not os.path.isdir(directory):
        os.makedirs(directory)
    logger.info("Output file is {}".format(args.out or "standard output"))
    if directory is not None:
        logger.info("Output directory is {}".format(directory))
    return {"out": args.out, "directory": directory}
