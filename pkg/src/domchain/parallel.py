"""Ordered parallel map used by corpus scans and audits."""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor


def default_jobs() -> int:
    return os.cpu_count() or 1


def pmap(fn: Callable, items: Iterable, jobs: int = 1, chunksize: int = 1) -> Iterator:
    """``map(fn, items)`` in input order; a process pool when ``jobs > 1``."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items, chunksize=chunksize)
