"""Small shared utilities."""

from __future__ import annotations

import os


def worker_count() -> int:
    """Parallelism cap: FOLNERLAB_THREADS if set, else cpu count (max 8)."""
    env = os.environ.get("FOLNERLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"FOLNERLAB_THREADS must be an integer, got {env!r}")
    return max(1, min(8, os.cpu_count() or 1))


def map_ordered(fn, items):
    """Apply fn over items, in parallel when allowed; results in input order."""
    items = list(items)
    workers = min(worker_count(), len(items)) if items else 1
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
