# src/utils/seeds.py
from __future__ import annotations
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class SeedPlan:
    """
    Repeatable (n, t, seed) grids for generated corpora.
    """
    base_seed: int = 0

    def seeds(self, k: int) -> List[int]:
        return [self.base_seed + i for i in range(k)]

    def grid(self, sizes: Sequence[int], bounds: Sequence[int], per_cell: int) -> Iterator[Tuple[int, int, int]]:
        """per_cell seeds for every (n, t); seeds never repeat across cells."""
        offset = 0
        for n, t in product(sizes, bounds):
            for s in SeedPlan(self.base_seed + offset).seeds(per_cell):
                yield n, t, s
            offset += per_cell


def parse_seeds(seed: Optional[int], seeds: Optional[Iterable[int]], k: int = 1) -> List[int]:
    """
    For the batch CLI:
      - explicit seeds win
      - else a single seed
      - else k seeds starting at 0
    """
    if seeds is not None:
        return list(seeds)
    if seed is not None:
        return [seed]
    return SeedPlan(0).seeds(k)
