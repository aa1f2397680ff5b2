# tests/test_analytics.py
from __future__ import annotations

from analytics.logger import CSVLogger
from analytics.metrics import SolveMetrics
from config import Config
from intervals.decomposition import compute_cut_structure, compute_decomposition
from intervals.render_matplotlib import save_decomposition_png
from intervals.representation import normalize
from solvers.interval_dp import solve
from utils.paths import OutputPaths, instance_tag, plot_path
from utils.seeds import SeedPlan, parse_seeds


def test_metrics_layer_bookkeeping():
    m = SolveMetrics(instance="x", solver="interval-dp")
    m.record_layer(1, 4)
    m.record_layer(2, 8)
    m.finalize()
    assert (m.layers, m.max_boundary, m.dp_cells) == (2, 2, 12)
    assert m.cells_per_layer == 6.0
    row = m.to_row()
    assert "_layer_samples" not in row
    assert row["solver"] == "interval-dp"


def test_solve_fills_metrics(p4):
    instance, rep = p4
    m = SolveMetrics(instance="p4", solver="interval-dp")
    solve(instance, rep, m)
    assert m.dyn == 3
    assert (m.n, m.m, m.t) == (4, 3, 2)
    assert m.components == 1 and m.layers == 3
    assert m.hull_calls > 0 and m.transition_triples > 0


def test_csv_header_written_once(tmp_path):
    path = str(tmp_path / "deep" / "runs.csv")
    logger = CSVLogger(path)
    logger.log(SolveMetrics(instance="a", solver="interval-dp", dyn=1))
    logger.log_many([SolveMetrics(instance="b", solver="brute-force"), SolveMetrics(instance="c", solver="brute-force")])
    logger.log_many([])

    with open(path, encoding="utf-8") as f:
        lines = f.read().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("instance,solver,n,m,t")
    assert sum(line.startswith("instance,") for line in lines) == 1


def test_seed_plan_grid_never_repeats_seeds():
    cells = list(SeedPlan(100).grid([4, 6], [1, 2], 3))
    assert len(cells) == 12
    assert cells[:3] == [(4, 1, 100), (4, 1, 101), (4, 1, 102)]
    assert len({s for _, _, s in cells}) == 12


def test_parse_seeds():
    assert parse_seeds(None, [3, 1]) == [3, 1]
    assert parse_seeds(7, None) == [7]
    assert parse_seeds(None, None, k=3) == [0, 1, 2]


def test_paths(tmp_path):
    paths = OutputPaths(
        base_dir=str(tmp_path / "out"),
        results_dir=str(tmp_path / "out" / "results"),
        plots_dir=str(tmp_path / "out" / "plots"),
    )
    paths.ensure()
    assert (tmp_path / "out" / "plots").is_dir()
    assert instance_tag("interval", 8, 2, 5) == "interval_n8_t2_seed5"
    assert plot_path("a b/c", paths).endswith("a_b_c.png")
    assert Config().results_csv == "outputs/results/runs.csv"


def test_render_decomposition(tmp_path, p4):
    instance, rep = p4
    norm = normalize(rep)
    decomposition = compute_decomposition(compute_cut_structure(norm), instance.t)
    target = tmp_path / "p4.png"
    save_decomposition_png(norm, decomposition, str(target), monopoly={"a", "b", "d"}, title="p4", dpi=50)
    assert target.read_bytes()[:4] == b"\x89PNG"


def test_batch_scaling_series_per_seed_with_plots(tmp_path, monkeypatch, capsys):
    from experiments import run_batch

    monkeypatch.setattr(run_batch, "SCALING_SIZES", [6, 12])
    out = tmp_path / "out"
    paths = OutputPaths(
        base_dir=str(out),
        results_dir=str(out / "results"),
        plots_dir=str(out / "plots"),
        results_csv=str(out / "results" / "runs.csv"),
    )
    times = run_batch.run_scaling(Config(paths=paths.ensure()), parse_seeds(None, [3, 4]), plot=True)

    assert len(times) == 4
    for seed in (3, 4):
        for n in (6, 12):
            assert (out / "plots" / f"{instance_tag('interval', n, 2, seed)}.png").exists()
    printed = capsys.readouterr().out
    assert printed.count("ratio 6->12") == 2
    with open(paths.results_csv, encoding="utf-8") as f:
        assert len(f.read().splitlines()) == 5
