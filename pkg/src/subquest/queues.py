"""In-memory queues for the exploration loops.

``MemoryPriorityQueue`` is the unbounded reference max-queue (equal
priorities dequeue in insertion order).  ``FifoQueue`` ignores priority for
ordering and serves as the no-prioritization baseline.
"""

from __future__ import annotations

import heapq
from collections import deque

from .engine import priority_sort_key


class MemoryPriorityQueue:
    """Unbounded max-priority queue with FIFO tie-breaking."""

    def __init__(self):
        self._heap = []
        self._seq = 0
        self._arity = None

    def enqueue(self, item, priority):
        priority = tuple(float(v) for v in priority)
        if self._arity is None:
            self._arity = len(priority)
        elif len(priority) != self._arity:
            raise ValueError(
                f"priority arity mismatch: {len(priority)} vs {self._arity}")
        heapq.heappush(self._heap, (priority_sort_key(priority, self._seq),
                                    priority, item))
        self._seq += 1

    def dequeue_max(self):
        if not self._heap:
            return None
        _, priority, item = heapq.heappop(self._heap)
        return item, priority

    def __len__(self):
        return len(self._heap)


class FifoQueue:
    """First-in first-out queue; priorities are carried but ignored."""

    def __init__(self):
        self._items = deque()
        self._arity = None

    def enqueue(self, item, priority):
        priority = tuple(float(v) for v in priority)
        if self._arity is None:
            self._arity = len(priority)
        elif len(priority) != self._arity:
            raise ValueError(
                f"priority arity mismatch: {len(priority)} vs {self._arity}")
        self._items.append((item, priority))

    def dequeue_max(self):
        if not self._items:
            return None
        return self._items.popleft()

    def __len__(self):
        return len(self._items)
