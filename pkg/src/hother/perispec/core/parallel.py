"""Ordered parallel map for sweep drivers."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence


def ordered_map[T, R](fn: Callable[[T], R], items: Sequence[T], *, threads: int = 1) -> list[R]:
    """Apply ``fn`` to every item, in parallel when ``threads > 1``.

    Results come back in input order whatever the scheduling, so any reduction
    over them is bitwise reproducible. ``fn`` and the items must be picklable
    when more than one worker is used.

    Args:
        fn: Pure function of one item. Must be defined at module level.
        items: Work items.
        threads: Number of worker processes; 1 runs in the calling process.

    Returns:
        ``[fn(item) for item in items]``.
    """
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    workers = min(threads, len(items))
    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
