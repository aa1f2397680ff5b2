# src/intervals/render_matplotlib.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.lines import Line2D
from matplotlib.patches import Patch

from utils.paths import ensure_parent
from .decomposition import Decomposition
from .representation import NormalizedRepresentation


@dataclass
class SaveStyle:
    interval_color: str = "#93c5fd"  # light blue
    boundary_color: str = "#fdba74"  # orange
    seed_color: str = "#22c55e"      # green
    cut_color: str = "#64748b"
    bg_color: str = "white"


def save_decomposition_png(
    rep: NormalizedRepresentation,
    decomposition: Decomposition,
    out_path: str,
    monopoly: Optional[Iterable[str]] = None,
    title: Optional[str] = None,
    style: SaveStyle = SaveStyle(),
    dpi: int = 200,
) -> None:
    """
    One horizontal bar per vertex over the normalized axis, dashed markers on
    the elementary segments of the layer boundaries, seeds highlighted.
    """
    seeds = set(monopoly) if monopoly is not None else set()
    boundary_members = set().union(*(layer.B for layer in decomposition.layers)) if decomposition.layers else set()

    n = rep.n
    fig, ax = plt.subplots(figsize=(max(6, n / 3), max(3, n / 4)))
    ax.set_facecolor(style.bg_color)

    for row, u in enumerate(rep.vertices):
        left, right = rep[u]
        y = n - 1 - row
        if u in seeds:
            color = style.seed_color
        elif u in boundary_members:
            color = style.boundary_color
        else:
            color = style.interval_color
        ax.add_patch(plt.Rectangle((left, y + 0.15), right - left, 0.7, facecolor=color, edgecolor="black", linewidth=0.6))
        ax.text(left - 0.2, y + 0.5, u, ha="right", va="center", fontsize=7)

    for layer in decomposition.layers:
        x = layer.j + 0.5
        ax.axvline(x, color=style.cut_color, linestyle="--", linewidth=1.0)
        ax.text(x, n + 0.1, f"B{layer.index}", ha="center", va="bottom", fontsize=7)

    ax.set_xlim(0, 2 * n + 1)
    ax.set_ylim(-0.5, n + 1)
    ax.set_yticks([])
    ax.set_xlabel("normalized endpoint")

    if title:
        ax.set_title(title)

    legend_elements = [
        Patch(facecolor=style.interval_color, label="Interval"),
        Patch(facecolor=style.boundary_color, label="Layer boundary"),
        Patch(facecolor=style.seed_color, label="Monopoly"),
        Line2D([0], [0], color=style.cut_color, linestyle="--", label="Cut segment"),
    ]
    ax.legend(handles=legend_elements, loc="upper right", fontsize=8, frameon=True)

    ensure_parent(out_path)
    fig.savefig(out_path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
