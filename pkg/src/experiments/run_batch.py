# src/experiments/run_batch.py
from __future__ import annotations
import argparse
import logging
import os
import sys
import time
from typing import List, Optional, Sequence

THIS_DIR = os.path.dirname(os.path.abspath(__file__))
SRC_DIR = os.path.dirname(THIS_DIR)
if SRC_DIR not in sys.path:
    sys.path.insert(0, SRC_DIR)

from config import Config
from analytics.logger import CSVLogger
from analytics.metrics import SolveMetrics
from generators.random_instances import generate_interval_instance
from graphs.hull import is_dynamic_monopoly
from intervals.decomposition import compute_cut_structure, compute_decomposition
from intervals.render_matplotlib import save_decomposition_png
from intervals.representation import normalize
from oracles.brute_force import brute_force_dyn
from solvers.interval_dp import solve
from utils.paths import instance_tag, plot_path
from utils.seeds import SeedPlan, parse_seeds

logger = logging.getLogger(__name__)

AGREEMENT_SIZES = [4, 6, 8, 10, 12]
AGREEMENT_BOUNDS = [1, 2, 3]
AGREEMENT_PER_CELL = 14  # 5 * 3 * 14 = 210 instances

SCALING_SIZES = [200, 400, 800]
SCALING_T = 2


def run_agreement(cfg: Config, base_seed: int = 0) -> int:
    """DP against brute force on the seeded corpus; returns the number of disagreements."""
    rows: List[SolveMetrics] = []
    bad = 0
    for n, t, seed in SeedPlan(base_seed).grid(AGREEMENT_SIZES, AGREEMENT_BOUNDS, AGREEMENT_PER_CELL):
        instance, rep = generate_interval_instance(n, t, seed, max_length=cfg.max_interval_length)
        tag = instance_tag("interval", n, t, seed)

        dp = SolveMetrics(instance=tag, solver="interval-dp", random_seed=seed)
        started = time.perf_counter()
        result = solve(instance, rep, dp)
        dp.execution_time_ms = (time.perf_counter() - started) * 1000.0
        dp.verified = is_dynamic_monopoly(instance, result.monopoly) and len(result.monopoly) == result.dyn

        oracle = SolveMetrics(instance=tag, solver="brute-force", random_seed=seed, n=n, m=instance.graph.m, t=t)
        started = time.perf_counter()
        dyn, _ = brute_force_dyn(instance, budget=cfg.oracle_budget, metrics=oracle)
        oracle.execution_time_ms = (time.perf_counter() - started) * 1000.0

        if dyn != result.dyn or not dp.verified:
            bad += 1
            dp.notes = f"oracle dyn {dyn}"
            logger.error("%s: dp=%d oracle=%s verified=%s", tag, result.dyn, dyn, dp.verified)

        for m in (dp, oracle):
            m.finalize()
        rows.extend([dp, oracle])

    CSVLogger(cfg.results_csv).log_many(rows)
    print(f"agreement: {len(rows) // 2} instances, {bad} disagreement(s) -> {cfg.results_csv}")
    return bad


def run_scaling(cfg: Config, seeds: Sequence[int] = (0,), plot: bool = False) -> List[float]:
    """Times the DP at t = 2 over SCALING_SIZES; one series per seed, times in ms in run order."""
    times: List[float] = []
    rows: List[SolveMetrics] = []
    for seed in seeds:
        series: List[float] = []
        for n in SCALING_SIZES:
            instance, rep = generate_interval_instance(n, SCALING_T, seed, max_length=cfg.max_interval_length)
            tag = instance_tag("interval", n, SCALING_T, seed)
            metrics = SolveMetrics(instance=tag, solver="interval-dp", random_seed=seed)
            started = time.perf_counter()
            result = solve(instance, rep, metrics)
            metrics.execution_time_ms = (time.perf_counter() - started) * 1000.0
            metrics.finalize()
            rows.append(metrics)
            series.append(metrics.execution_time_ms)
            print(f"seed={seed} n={n:4d} t={SCALING_T} dyn={result.dyn:4d} layers={metrics.layers:4d} time={metrics.execution_time_ms:9.1f} ms")

            if plot:
                norm = normalize(rep)
                decomposition = compute_decomposition(compute_cut_structure(norm), SCALING_T)
                out = plot_path(tag, cfg.paths)
                save_decomposition_png(norm, decomposition, out, monopoly=result.monopoly, title=f"{tag}: dyn = {result.dyn}")
                logger.info("saved plot -> %s", out)

        for small, big, a, b in zip(SCALING_SIZES, SCALING_SIZES[1:], series, series[1:]):
            print(f"ratio {small}->{big}: {b / max(a, 1e-9):.2f}x")
        times.extend(series)

    CSVLogger(cfg.results_csv).log_many(rows)
    return times


def run(argv: Optional[List[str]] = None) -> int:
    p = argparse.ArgumentParser(description="Batch experiments: DP/oracle agreement and scaling")
    p.add_argument("mode", choices=["agreement", "scaling", "all"])
    p.add_argument("--seed", type=int, default=None, help="base seed (default 0)")
    p.add_argument("--seeds", type=int, nargs="+", default=None, help="scaling: one series per seed")
    p.add_argument("--plot", action="store_true", help="scaling: save a decomposition PNG per instance")
    args = p.parse_args(argv)

    cfg = Config()
    cfg.paths.ensure()
    logging.basicConfig(level=getattr(logging, cfg.log_level), format="%(levelname)s %(name)s: %(message)s")

    failures = 0
    if args.mode in ("agreement", "all"):
        failures += run_agreement(cfg, args.seed or 0)
    if args.mode in ("scaling", "all"):
        run_scaling(cfg, parse_seeds(args.seed, args.seeds), plot=args.plot)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(run())
