"""Bounded parallel map with deterministic collation.

Provider calls may run concurrently, but results are always returned in the
order of the input sequence, so pipeline outputs do not depend on worker
completion order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T],
                 max_parallelism: int = 4) -> list[R]:
    items = list(items)
    if not items:
        return []
    workers = max(1, min(max_parallelism, len(items)))
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
