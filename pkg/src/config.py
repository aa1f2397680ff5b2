# src/config.py
from __future__ import annotations
from dataclasses import dataclass, field
from utils.paths import OutputPaths


@dataclass
class Config:
    """
    Central configuration for the project.

    Controls:
      - enumeration guards of the brute-force oracles and test utilities
      - random instance generation defaults
      - logging verbosity
      - output directories
    """

    # ---------------------------
    # Enumeration guards
    # ---------------------------
    oracle_budget: int = 2_000_000      # candidate seed sets per brute-force call
    cut_enumeration_limit: int = 12     # minimal_vertex_cuts_bruteforce
    connectivity_limit: int = 16        # is_t_connected for t >= 3
    definition_limit: int = 12          # definition_level_dyn_i, |V_i|

    # ---------------------------
    # Generators
    # ---------------------------
    max_interval_length: int = 3
    cubic_tau: int = 2

    # ---------------------------
    # Logging
    # ---------------------------
    log_level: str = "WARNING"

    # ---------------------------
    # Output Paths
    # ---------------------------
    paths: OutputPaths = field(default_factory=OutputPaths)

    @property
    def results_csv(self) -> str:
        return self.paths.results_csv


DEFAULT = Config()
