"""Ordered fan-out over a process pool."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def ordered_map(func, items, workers: int = 1, chunksize: int = 1) -> list:
    """``list(map(func, items))``, optionally spread over worker processes.

    Results come back in input order whatever the worker count, so
    downstream reductions are deterministic.  ``func`` must be picklable
    (a module-level function or a ``functools.partial`` of one).
    """
    items = list(items)
    workers = int(workers or 1)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1 or len(items) <= 1:
        return [func(it) for it in items]
    workers = min(workers, len(items), os.cpu_count() or 1) or 1
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
