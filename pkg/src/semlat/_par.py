"""Tiny order-preserving parallel map used by catalog building and profiling."""

from __future__ import annotations

import multiprocessing


def pmap(fn, items, jobs: int = 1) -> list:
    """Map fn over items, preserving order; jobs <= 1 stays in-process."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=chunk)
