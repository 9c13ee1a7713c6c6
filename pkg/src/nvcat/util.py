"""Small shared helpers."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_cap() -> int:
    """Worker cap from NVCAT_THREADS; 1 (sequential) when unset."""
    raw = os.environ.get("NVCAT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def parallel_map(fn, items):
    """Order-preserving map, threaded when NVCAT_THREADS > 1.

    Tasks must be independent; results are collected in input order so
    output stays deterministic either way.
    """
    items = list(items)
    n = thread_cap()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))
