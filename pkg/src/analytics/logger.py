# src/analytics/logger.py
from __future__ import annotations
import csv
import os
from typing import Iterable, List

from utils.paths import ensure_parent
from .metrics import SolveMetrics


class CSVLogger:
    """
    Appends SolveMetrics rows to a CSV file; the header is written once,
    when the file is new or empty.
    """

    def __init__(self, csv_path: str):
        self.csv_path = csv_path
        ensure_parent(csv_path)

    def _ensure_header(self, fieldnames: List[str]) -> None:
        if os.path.exists(self.csv_path) and os.path.getsize(self.csv_path) > 0:
            return
        with open(self.csv_path, "w", newline="", encoding="utf-8") as f:
            csv.DictWriter(f, fieldnames=fieldnames).writeheader()

    def log(self, metrics: SolveMetrics) -> None:
        self.log_many([metrics])

    def log_many(self, metrics_list: Iterable[SolveMetrics]) -> None:
        rows = [m.to_row() for m in metrics_list]
        if not rows:
            return
        fieldnames = list(rows[0].keys())
        self._ensure_header(fieldnames)
        with open(self.csv_path, "a", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames)
            writer.writerows(rows)
