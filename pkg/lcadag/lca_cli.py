"""
The lcadag command line tool. Graphs come in as edge lists or DOT files
("-" reads stdin) and go out the same way, reports go to stdout, log
messages to stderr.

Exit codes: 0 the predicate holds, 1 it fails (a witness is printed),
2 the input or the usage is wrong, 3 an internal invariant broke.
"""

import argparse
import concurrent.futures
import sys
import time
from typing import IO, Callable, Dict, List, Optional, Sequence, Tuple

import lcadag
from lcadag import (
    lca_analysis,
    lca_config,
    lca_holju,
    lca_level1,
    lca_minors,
    lca_setsys,
    lca_transform,
)
from lcadag.lca_constants import (
    EXIT_FAILS,
    EXIT_HOLDS,
    EXIT_INTERNAL,
    EXIT_USAGE,
    GENERATOR_MAX_PARENTS,
    LOP_POLICIES,
    LOP_POLICY_SYNTHETIC_FIRST,
    PREDICATE_GALLED,
    PREDICATE_GLOBAL_LCA,
    PREDICATE_JOIN_SEMILATTICE,
    PREDICATE_LCA_RELEVANT,
    PREDICATE_LEVEL1,
    PREDICATE_MINOR_THEOREM,
    PREDICATE_PCC,
    PREDICATE_REGULAR,
    PREDICATES,
    RANDOM_DAG_EDGE_PROBABILITY,
    ROUTE_ALL,
    SYSTEM_ANCESTORS,
    SYSTEM_CLUSTERS,
    SYSTEM_DESCENDANTS,
    SYSTEM_INTERMEDIARIES,
    SYSTEMS,
    TRANSFORM_HASSE_CLUSTERS,
    TRANSFORM_HASSE_DESCENDANTS,
    TRANSFORM_LOP,
    TRANSFORM_LXT,
    TRANSFORM_REV,
    TRANSFORM_SF,
    TRANSFORMS,
)
from lcadag.lca_dag_core import reverse
from lcadag.lca_helpers import (
    InputError,
    LastVertex,
    LcaDagError,
    LcaDagLogger,
    NotANetwork,
    NotHolju,
    NotTreeLeafChild,
    OStarViolated,
    ParseError,
    RouteDisagreement,
    SizeLimitExceeded,
    format_labels,
    logger,
)
from lcadag.lca_types import Dag, Route, Verdict
from lcadag.lca_utils import lca_report_json
from lcadag.lca_utils.lca_corpus import random_network
from lcadag.lca_utils.lca_dot import emit_dot, load_dot, looks_like_dot
from lcadag.lca_utils.lca_edge_list_parser import emit_edge_list, load_edge_list
from lcadag.lca_utils.lca_trace_txt_parser import load_trace

_SYSTEM_BUILDERS = {
    SYSTEM_CLUSTERS: lca_setsys.clusters,
    SYSTEM_DESCENDANTS: lca_setsys.descendants,
    SYSTEM_ANCESTORS: lca_setsys.ancestors,
    SYSTEM_INTERMEDIARIES: lca_setsys.intermediaries,
}

_VERDICT_CHECKS = {
    PREDICATE_LCA_RELEVANT: lca_analysis.is_lca_relevant,
    PREDICATE_PCC: lca_analysis.satisfies_pcc,
    PREDICATE_REGULAR: lambda g: Verdict(lca_transform.is_regular(g)),
    PREDICATE_LEVEL1: lca_level1.is_level1,
    PREDICATE_GALLED: lca_level1.is_galled_tree,
    PREDICATE_JOIN_SEMILATTICE: lambda g: lca_analysis.is_join_semilattice(g.poset),
    PREDICATE_MINOR_THEOREM: lca_minors.verify_minor_theorem,
}  # type: Dict[str, Callable[[Dag], Verdict]]

# Errors that mean the input does not qualify for the command
_INELIGIBLE = (InputError, LastVertex, NotANetwork, NotTreeLeafChild, SizeLimitExceeded)


def _version() -> str:
    return ".".join(map(str, lcadag.lcadag_info["version"]))


def _make_argparse():
    parser = argparse.ArgumentParser(
        prog="lcadag",
        description="Recognizes DAGs with a unique LCA for every vertex set and works"
        " with the transformations, set systems and certificates around them",
    )
    parser.add_argument("--version", action="version", version=f"lcadag {_version()}")
    parser.add_argument(
        "--debug",
        default=False,
        action="store_true",
        help="Print info and success messages too",
    )
    parser.add_argument("--log", metavar="FILE", help="Also write every log message to FILE")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    check = commands.add_parser("check", help="Decide a predicate for one or more graphs")
    check.add_argument("predicate", choices=PREDICATES)
    check.add_argument("inputs", nargs="+", help="Edge list or DOT files, - for stdin")
    check.add_argument(
        "--route",
        default=ROUTE_ALL,
        choices=[ROUTE_ALL] + [r.value for r in Route],
        help="Route for global-lca, all runs every route and requires agreement",
    )
    check.add_argument("--json", action="store_true", help="Write JSON reports")
    check.add_argument(
        "-j", "--jobs", type=int, default=1, help="Check this many inputs in parallel"
    )

    transform = commands.add_parser("transform", help="Print a transformed graph")
    transform.add_argument("which", choices=TRANSFORMS)
    transform.add_argument("input")
    transform.add_argument("--dot", action="store_true", help="Write DOT instead of an edge list")
    transform.add_argument("--policy", default=LOP_POLICY_SYNTHETIC_FIRST, choices=LOP_POLICIES)

    systems = commands.add_parser("systems", help="Print a set system as JSON")
    systems.add_argument("which", choices=SYSTEMS)
    systems.add_argument("input")
    systems.add_argument("--closed", action="store_true")
    systems.add_argument("--pre-binary", action="store_true")
    systems.add_argument("--pre-k", type=int, metavar="K")

    generate = commands.add_parser("generate", help="Print a seeded random graph")
    kinds = generate.add_subparsers(dest="kind", metavar="kind")
    kinds.required = True
    holju = kinds.add_parser("holju", help="A global lca-network built leaf by leaf")
    holju.add_argument("n", type=int)
    holju.add_argument("seed", type=int)
    holju.add_argument("--max-parents", type=int, default=GENERATOR_MAX_PARENTS)
    holju.add_argument("--trace", metavar="FILE", help="Also write the construction trace")
    level1 = kinds.add_parser("level1", help="A galled tree")
    level1.add_argument("n", type=int)
    level1.add_argument("seed", type=int)
    network = kinds.add_parser("network", help="A plain random network")
    network.add_argument("n", type=int)
    network.add_argument("seed", type=int)
    network.add_argument("--p", type=float, default=RANDOM_DAG_EDGE_PROBABILITY)
    for kind in (holju, level1, network):
        kind.add_argument("--dot", action="store_true")

    replay = commands.add_parser("replay", help="Build the graph a construction trace describes")
    replay.add_argument("trace")
    replay.add_argument("--dot", action="store_true")

    deconstruct = commands.add_parser(
        "deconstruct", help="Print a construction trace of a global lca-network"
    )
    deconstruct.add_argument("input")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def load_graph(path: str) -> Dag:
    try:
        text = _read(path)
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}")
    try:
        return load_dot(text) if looks_like_dot(text) else load_edge_list(text)
    except ParseError as e:
        raise ParseError(f"{path}: {e}", line=e.line, witness=e.witness)


def _emit(g: Dag, dot: bool) -> str:
    return emit_dot(g) if dot else emit_edge_list(g)


def _describe_witness(g: Dag, witness) -> str:
    out = lca_report_json.witness_json(g, witness)
    if out is None:
        return ""
    if "sets" in out:
        return " and ".join(format_labels(s) for s in out["sets"])
    if "roots" in out:
        return f"roots {format_labels(out['roots'])}, sinks {format_labels(out['sinks'])}"
    return format_labels(out.get("vertices", [out.get("value", "")]))


def _check_global_lca(g: Dag, route_name: str, as_json: bool) -> Tuple[int, str]:
    start = time.perf_counter()
    if route_name == ROUTE_ALL:
        reports = lca_analysis.global_lca_reports(g)
    else:
        route = Route.from_name(route_name)
        reports = {route: lca_analysis.has_global_lca(g, route)}
    elapsed = (time.perf_counter() - start) * 1000
    first = next(iter(reports.values()))
    code = EXIT_HOLDS if first.holds else EXIT_FAILS
    if as_json:
        return code, lca_report_json.dumps(lca_report_json.global_lca_json(reports, elapsed))
    if first.holds:
        return code, f"{PREDICATE_GLOBAL_LCA} holds"
    w = first.witness
    text = f"{PREDICATE_GLOBAL_LCA} fails ({first.route.value}): {w.kind} {format_labels(w.query)}"
    if w.lca or w.kind != "multiple-roots":
        text += f" has the LCAs {format_labels(w.lca)}"
    return code, text


def _check_verdict(g: Dag, predicate: str, as_json: bool) -> Tuple[int, str]:
    start = time.perf_counter()
    verdict = _VERDICT_CHECKS[predicate](g)
    elapsed = (time.perf_counter() - start) * 1000
    code = EXIT_HOLDS if verdict.holds else EXIT_FAILS
    if as_json:
        return code, lca_report_json.dumps(
            lca_report_json.verdict_json(g, predicate, verdict, elapsed)
        )
    if verdict.holds:
        return code, f"{predicate} holds"
    return code, f"{predicate} fails at {_describe_witness(g, verdict.witness)}"


def _check_one(job: Tuple[str, str, str, bool]) -> Tuple[int, str, List[str]]:
    """One input of "check": (exit code, report, error messages). Runs in worker processes"""
    path, predicate, route, as_json = job
    try:
        g = load_graph(path)
        if predicate == PREDICATE_GLOBAL_LCA:
            code, text = _check_global_lca(g, route, as_json)
        else:
            code, text = _check_verdict(g, predicate, as_json)
    except RouteDisagreement as e:
        return EXIT_INTERNAL, "", [f"{path}: {e}"]
    except _INELIGIBLE as e:
        return EXIT_USAGE, "", [f"{path}: {e}"]
    return code, text if as_json else f"{path}: {text}", []


def cmd_check(args) -> int:
    jobs = [(path, args.predicate, args.route, args.json) for path in args.inputs]
    if args.jobs > 1 and "-" not in args.inputs:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_one, jobs))
    else:
        results = [_check_one(job) for job in jobs]

    exit_code = EXIT_HOLDS
    for code, text, errors in results:
        for error in errors:
            logger.error(error)
        if text:
            print(text)
        exit_code = max(exit_code, code)
    if exit_code == EXIT_HOLDS:
        logger.success(f"{args.predicate} holds for all {len(results)} inputs")
    return exit_code


def _transformed(g: Dag, which: str, policy: str) -> Dag:
    if which == TRANSFORM_SF:
        return lca_transform.sf(g)
    elif which == TRANSFORM_LXT:
        return lca_transform.lxt(g)
    elif which == TRANSFORM_LOP:
        return lca_transform.lop(g, policy)
    elif which == TRANSFORM_REV:
        return reverse(g)
    elif which == TRANSFORM_HASSE_CLUSTERS:
        return lca_transform.hasse_clusters(g)
    elif which == TRANSFORM_HASSE_DESCENDANTS:
        return lca_transform.hasse_descendants(g)
    raise ValueError(which)


def cmd_transform(args) -> int:
    g = load_graph(args.input)
    sys.stdout.write(_emit(_transformed(g, args.which, args.policy), args.dot))
    return EXIT_HOLDS


def cmd_systems(args) -> int:
    g = load_graph(args.input)
    s = _SYSTEM_BUILDERS[args.which](g)
    checks = []
    if args.closed:
        checks.append(("closed", lca_setsys.is_closed(s)))
    if args.pre_binary:
        checks.append(("pre_binary", lca_setsys.is_pre_binary(s)))
    if args.pre_k is not None:
        try:
            checks.append((f"pre_{args.pre_k}_ary", lca_setsys.is_pre_k_ary(s, args.pre_k)))
        except ValueError as e:
            logger.error(str(e), context=args.input)
            return EXIT_USAGE
    print(lca_report_json.dumps(lca_report_json.set_system_json(s, checks)))
    return EXIT_HOLDS if all(v.holds for _, v in checks) else EXIT_FAILS


def cmd_generate(args) -> int:
    if args.n < 1:
        logger.error(f"n={args.n}, a graph needs at least one vertex")
        return EXIT_USAGE
    if args.kind == "holju":
        g, trace = lca_holju.random_global_lca(args.n, args.seed, max_parents=args.max_parents)
        if args.trace:
            with open(args.trace, "w") as f:
                f.write(trace.to_text())
    elif args.kind == "level1":
        g = lca_level1.random_level1(args.n, args.seed)
    else:
        g = random_network(args.n, args.seed, args.p)
    sys.stdout.write(_emit(g, args.dot))
    return EXIT_HOLDS


def cmd_replay(args) -> int:
    trace = load_trace(_read(args.trace))
    try:
        g = lca_holju.replay(trace)
    except OStarViolated as e:
        logger.error(str(e), context=args.trace)
        return EXIT_FAILS
    sys.stdout.write(_emit(g, args.dot))
    return EXIT_HOLDS


def cmd_deconstruct(args) -> int:
    g = load_graph(args.input)
    try:
        trace = lca_holju.deconstruct(g)
    except NotHolju as e:
        logger.error(f"{e} (prefix of {e.prefix_size} vertices)", context=args.input)
        return EXIT_FAILS
    sys.stdout.write(trace.to_text())
    return EXIT_HOLDS


_COMMANDS = {
    "check": cmd_check,
    "transform": cmd_transform,
    "systems": cmd_systems,
    "generate": cmd_generate,
    "replay": cmd_replay,
    "deconstruct": cmd_deconstruct,
}


def _start_logging(log_path: Optional[str]) -> Optional[IO[str]]:
    levels = ["error", "warning"]
    if lca_config.getDebug():
        levels += ["info", "success"]
    logger.clear()
    logger.addTransport(LcaDagLogger.ConsoleTransport(), levels)

    # the log file gets every message, debug or not
    if log_path is None:
        return None
    try:
        log_file = open(log_path, "w")
    except OSError as e:
        logger.error(f"Cannot open the log file {log_path}: {e.strerror}")
        return None
    logger.addTransport(LcaDagLogger.FileTransport(log_file))
    return log_file


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Return is exit code, 0 for holds, 1 for fails, 2 for bad input or usage
    and 3 for a broken internal invariant
    """
    parser = _make_argparse()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_HOLDS if e.code == 0 else EXIT_USAGE

    lca_config.setDebug(args.debug or lca_config.getDebug())
    log_file = _start_logging(args.log)
    if args.log is not None and log_file is None:
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except RouteDisagreement as e:
        logger.error(str(e))
        return EXIT_INTERNAL
    except (_INELIGIBLE + (LcaDagError,)) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Internal error: {type(e).__name__}: {e}")
        if lca_config.getDebug():
            raise
        return EXIT_INTERNAL
    finally:
        if log_file is not None:
            log_file.close()
