# src/main.py
from __future__ import annotations

import argparse
import logging
import os
import resource
import sys
import time
from typing import Iterable, List, Optional

# Ensure imports work when running: python src/main.py ...
THIS_DIR = os.path.dirname(os.path.abspath(__file__))
if THIS_DIR not in sys.path:
    sys.path.insert(0, THIS_DIR)

from config import Config
from errors import EXIT_NEGATIVE, EXIT_OK, DynmonError, InputError, exit_code_for
from analytics.metrics import SolveMetrics
from analytics.logger import CSVLogger

from graphs.graph import Graph, ThresholdedInstance
from graphs.hull import activation_order, hull, is_dynamic_monopoly
from intervals.decomposition import compute_cut_structure, compute_decomposition
from intervals.representation import normalize
from intervals.render_matplotlib import save_decomposition_png
from solvers.interval_dp import solve
from oracles.brute_force import brute_force_dyn
from generators.random_instances import generate_cubic, generate_interval_instance
from generators.reduction import vc_reduction
from instances.format import InstanceFile, emit_instance, graph_file, interval_file, load_instance

logger = logging.getLogger("dynmon")


# ----------------------------
# Output helpers
# ----------------------------
def _names(graph: Graph, members: Iterable[str]) -> str:
    return " ".join(graph.canonical(members))


def _labelled(label: str, graph: Graph, members: Iterable[str]) -> str:
    body = _names(graph, members)
    return f"{label} {body}" if body else label


def _vertex_list(text: str) -> List[str]:
    return [tok.strip() for tok in text.split(",") if tok.strip()]


def _print_solution(graph: Graph, dyn: int, monopoly: Iterable[str]) -> None:
    print(f"dyn {dyn}")
    print(_labelled("monopoly", graph, monopoly))


def _finish(metrics: SolveMetrics, started: float, instance: ThresholdedInstance, monopoly, csv_path: Optional[str]) -> None:
    metrics.execution_time_ms = (time.perf_counter() - started) * 1000.0
    metrics.peak_memory_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    metrics.n, metrics.m, metrics.t = instance.graph.n, instance.graph.m, instance.t
    metrics.verified = is_dynamic_monopoly(instance, monopoly)
    metrics.finalize()
    logger.info("%s: dyn=%s in %.1f ms", metrics.solver, metrics.dyn, metrics.execution_time_ms)
    if csv_path:
        CSVLogger(csv_path).log(metrics)


def _interval_doc(doc: InstanceFile, command: str) -> None:
    if doc.kind != "interval":
        raise InputError(f"{command} needs an interval instance file")


# ----------------------------
# Commands
# ----------------------------
def cmd_solve(args: argparse.Namespace, cfg: Config) -> int:
    doc = load_instance(args.file)
    instance = doc.instance()
    started = time.perf_counter()

    if doc.kind == "interval":
        metrics = SolveMetrics(instance=args.file, solver="interval-dp")
        result = solve(instance, doc.representation(), metrics)
        dyn, monopoly = result.dyn, result.monopoly
    else:
        metrics = SolveMetrics(instance=args.file, solver="brute-force")
        dyn, monopoly = brute_force_dyn(instance, budget=cfg.oracle_budget, metrics=metrics)

    _finish(metrics, started, instance, monopoly, args.metrics_csv)
    _print_solution(instance.graph, dyn, monopoly)

    if args.plot:
        _interval_doc(doc, "solve --plot")
        rep = normalize(doc.representation())
        decomposition = compute_decomposition(compute_cut_structure(rep), instance.t)
        save_decomposition_png(rep, decomposition, args.plot, monopoly=monopoly, title=f"dyn = {dyn}")
        logger.info("saved plot -> %s", args.plot)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, cfg: Config) -> int:
    doc = load_instance(args.file)
    instance = doc.instance()
    started = time.perf_counter()

    metrics = SolveMetrics(instance=args.file, solver="brute-force")
    dyn, monopoly = brute_force_dyn(instance, budget=cfg.oracle_budget, metrics=metrics)

    _finish(metrics, started, instance, monopoly, args.metrics_csv)
    _print_solution(instance.graph, dyn, monopoly)
    return EXIT_OK


def cmd_hull(args: argparse.Namespace, cfg: Config) -> int:
    instance = load_instance(args.file).instance()
    seed = _vertex_list(args.seed)
    members = hull(instance, seed)

    print(f"hull {len(members)}")
    for u in instance.graph.canonical(members):
        print(u)
    print("cascade")
    for u in activation_order(instance, seed):
        print(u)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    instance = load_instance(args.file).instance()
    ok = is_dynamic_monopoly(instance, _vertex_list(args.set))
    print("yes" if ok else "no")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_decompose(args: argparse.Namespace, cfg: Config) -> int:
    doc = load_instance(args.file)
    _interval_doc(doc, "decompose")
    instance = doc.instance()
    t = instance.t if args.t is None else args.t
    if t < 0:
        raise InputError(f"t must be non-negative, got {t}")

    graph = instance.graph
    rep = normalize(doc.representation())
    cuts = compute_cut_structure(rep)
    decomposition = compute_decomposition(cuts, t)

    print(f"t {t}")
    for u in rep.vertices:
        left, right = rep[u]
        print(f"interval {u} {left} {right}")
    print(" ".join(["counts", *map(str, cuts.counts)]))
    print(" ".join(["layers", *map(str, decomposition.layer_indices)]))
    for layer in decomposition.layers:
        print(f"layer {layer.index}")
        print(_labelled("V", graph, layer.V))
        print(_labelled("B", graph, layer.B))
        print(_labelled("boundary", graph, layer.boundary))

    if args.plot:
        save_decomposition_png(rep, decomposition, args.plot, title=f"t = {t}, k = {decomposition.k}")
        logger.info("saved plot -> %s", args.plot)
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, cfg: Config) -> int:
    if args.kind == "interval":
        t = 2 if args.t is None else args.t
        instance, rep = generate_interval_instance(
            args.n, t, args.seed,
            max_length=cfg.max_interval_length,
            connected=args.connected,
        )
        doc = interval_file(instance, rep)
    else:
        t = cfg.cubic_tau if args.t is None else args.t
        graph = generate_cubic(args.n, args.seed)
        doc = graph_file(ThresholdedInstance(graph, {u: t for u in graph.vertices}, t))

    sys.stdout.write(emit_instance(doc))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace, cfg: Config) -> int:
    source = load_instance(args.file).instance().graph
    out = vc_reduction(source)

    comments = [f"vertex cover reduction of a cubic graph on {source.n} vertices"]
    for (u, v), gadget in out.gadget_map.items():
        comments.append(f"gadget {u} {v}: {_names(out.instance.graph, gadget)}")
    sys.stdout.write(emit_instance(graph_file(out.instance, comments)))
    return EXIT_OK


# ----------------------------
# Argument parsing
# ----------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug (stderr)")

    budgeted = argparse.ArgumentParser(add_help=False)
    budgeted.add_argument("--budget", type=int, default=None, help="max candidate sets for the brute-force oracle")
    budgeted.add_argument("--metrics-csv", type=str, default=None, help="append one metrics row to this CSV")

    p = argparse.ArgumentParser(prog="dynmon", description="Minimum dynamic monopolies on interval graphs")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common, budgeted], help="exact dyn (interval DP, oracle for graph files)")
    s.add_argument("file")
    s.add_argument("--plot", type=str, default=None, help="save a decomposition PNG with the monopoly")
    s.set_defaults(handler=cmd_solve)

    s = sub.add_parser("oracle", parents=[common, budgeted], help="brute-force dyn")
    s.add_argument("file")
    s.set_defaults(handler=cmd_oracle)

    s = sub.add_parser("hull", parents=[common], help="hull of a seed set and its activation order")
    s.add_argument("file")
    s.add_argument("--seed", type=str, default="", help="comma-separated vertex names")
    s.set_defaults(handler=cmd_hull)

    s = sub.add_parser("verify", parents=[common], help="is the set a dynamic monopoly")
    s.add_argument("file")
    s.add_argument("--set", type=str, required=True, help="comma-separated vertex names")
    s.set_defaults(handler=cmd_verify)

    s = sub.add_parser("decompose", parents=[common], help="cut counts and layer decomposition")
    s.add_argument("file")
    s.add_argument("--t", type=int, default=None)
    s.add_argument("--plot", type=str, default=None)
    s.set_defaults(handler=cmd_decompose)

    s = sub.add_parser("generate", parents=[common], help="seeded random instance on stdout")
    s.add_argument("kind", choices=["interval", "cubic"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--t", type=int, default=None)
    s.add_argument("--connected", action="store_true", help="interval: force a connected instance")
    s.set_defaults(handler=cmd_generate)

    s = sub.add_parser("reduce", parents=[common], help="vertex cover reduction of a cubic graph")
    s.add_argument("file")
    s.set_defaults(handler=cmd_reduce)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = Config()

    # Override config if CLI flags provided
    if getattr(args, "budget", None) is not None:
        cfg.oracle_budget = args.budget
    if args.verbose >= 2:
        cfg.log_level = "DEBUG"
    elif args.verbose == 1:
        cfg.log_level = "INFO"

    logging.basicConfig(
        level=getattr(logging, cfg.log_level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger().setLevel(getattr(logging, cfg.log_level))

    try:
        return args.handler(args, cfg)
    except DynmonError as err:
        print(f"error: {err}", file=sys.stderr)
        return exit_code_for(err)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
