"""Chunked, optionally multi-process sweeps with a deterministic merge."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Any, TypeVar

T = TypeVar("T")

ChunkResult = tuple[list[dict[str, Any]], int, int]


def _chunks(items: Sequence[T], parts: int) -> list[Sequence[T]]:
    size = max(1, -(-len(items) // parts))
    return [items[j : j + size] for j in range(0, len(items), size)]


def run_chunks(
    check: Callable[[Sequence[T]], ChunkResult],
    items: Sequence[T],
    workers: int = 1,
) -> list[ChunkResult]:
    """Apply ``check`` to contiguous chunks of ``items``; results come back in order.

    ``check`` must be picklable (a module-level function or a partial of one)
    when ``workers > 1``.
    """
    if workers <= 1 or len(items) < 2:
        return [check(items)]
    chunks = _chunks(items, workers * 4)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(check, chunks))


def run_tasks(fn: Callable[[Any], T], tasks: Sequence[Any], workers: int = 1) -> list[T]:
    if workers <= 1 or len(tasks) < 2:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))
