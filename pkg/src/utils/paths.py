# src/utils/paths.py
from __future__ import annotations
import os
from dataclasses import dataclass


@dataclass(frozen=True)
class OutputPaths:
    base_dir: str = "outputs"
    results_dir: str = "outputs/results"
    plots_dir: str = "outputs/plots"
    results_csv: str = "outputs/results/runs.csv"

    def ensure(self) -> "OutputPaths":
        os.makedirs(self.base_dir, exist_ok=True)
        os.makedirs(self.results_dir, exist_ok=True)
        os.makedirs(self.plots_dir, exist_ok=True)
        return self


def _safe(name: str) -> str:
    return name.replace("/", "_").replace(" ", "_")


def plot_path(name: str, paths: OutputPaths = OutputPaths()) -> str:
    return os.path.join(paths.plots_dir, f"{_safe(name)}.png")


def instance_tag(kind: str, n: int, t: int, seed: int) -> str:
    """
    Consistent name for a generated instance, used in CSV rows and plot names.
    """
    return f"{_safe(kind)}_n{n}_t{t}_seed{seed}"


def ensure_parent(path: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
