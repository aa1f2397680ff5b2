# src/analytics/metrics.py
from __future__ import annotations
from dataclasses import dataclass, asdict
from typing import Any, Dict, Optional


@dataclass
class SolveMetrics:
    # ---------------------------
    # Run Identifiers
    # ---------------------------
    instance: str
    solver: str
    n: int = 0
    m: int = 0
    t: int = 0
    random_seed: Optional[int] = None

    # ---------------------------
    # Outcome
    # ---------------------------
    dyn: Optional[int] = None
    verified: Optional[bool] = None
    execution_time_ms: float = 0.0
    peak_memory_kb: Optional[int] = None

    # ---------------------------
    # Decomposition / DP Metrics
    # ---------------------------
    components: int = 0
    layers: int = 0
    max_boundary: int = 0
    dp_cells: int = 0
    transition_triples: int = 0
    hull_calls: int = 0
    cells_per_layer: Optional[float] = None

    # ---------------------------
    # Oracle Metrics
    # ---------------------------
    oracle_candidates: int = 0

    notes: Optional[str] = None

    # Internal tracking for averages
    _layer_samples: int = 0

    # ---------------------------
    # Helpers
    # ---------------------------
    def record_layer(self, boundary_size: int, cells: int) -> None:
        self.layers += 1
        self._layer_samples += 1
        self.max_boundary = max(self.max_boundary, boundary_size)
        self.dp_cells += cells

    def finalize(self) -> None:
        if self._layer_samples > 0:
            self.cells_per_layer = self.dp_cells / float(self._layer_samples)

    def to_row(self) -> Dict[str, Any]:
        row = asdict(self)
        row.pop("_layer_samples", None)
        return row
