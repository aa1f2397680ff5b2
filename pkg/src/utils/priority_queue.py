# src/utils/priority_queue.py
from __future__ import annotations
import heapq
from dataclasses import dataclass, field
from typing import Any, Dict, Generic, Hashable, List, Tuple, TypeVar

T = TypeVar("T", bound=Hashable)


@dataclass(order=True)
class _PQItem(Generic[T]):
    priority: Any
    tie: int
    item: T = field(compare=False)


class PriorityQueue(Generic[T]):
    """
    Min-priority queue over hashable items with:
      - stable tie-breaker (insertion counter)
      - decrease-key by pushing a new entry; stale entries are skipped on pop
      - remove-on-pop, so an item can be pushed again after it was popped

    Priorities only need to be mutually comparable (tuples work).
    """

    def __init__(self):
        self._heap: List[_PQItem[T]] = []
        self._tie = 0
        self._best: Dict[T, Any] = {}

    def push(self, item: T, priority: Any) -> bool:
        """Insert or improve `item`. Returns False when the priority is not an improvement."""
        best = self._best.get(item)
        if best is not None and not priority < best:
            return False
        self._best[item] = priority
        heapq.heappush(self._heap, _PQItem(priority=priority, tie=self._tie, item=item))
        self._tie += 1
        return True

    def pop(self) -> Tuple[T, Any]:
        while self._heap:
            top = heapq.heappop(self._heap)
            if top.item in self._best and self._best[top.item] == top.priority:
                del self._best[top.item]
                return top.item, top.priority
        raise IndexError("pop from empty PriorityQueue")

    def empty(self) -> bool:
        return not self._best

    def __len__(self) -> int:
        return len(self._best)

    def __contains__(self, item: object) -> bool:
        return item in self._best
