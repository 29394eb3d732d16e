"""Optional thread fan-out for independent per-item work.

PARETO_KIT_THREADS caps the worker count (default 1 = sequential).  Results
always come back in input order, so callers stay deterministic regardless
of scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_cap() -> int:
    raw = os.environ.get("PARETO_KIT_THREADS", "1")
    try:
        cap = int(raw)
    except ValueError:
        return 1
    return max(1, cap)


def pmap(fn, items):
    items = list(items)
    cap = thread_cap()
    if cap <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(cap, len(items))) as pool:
        return list(pool.map(fn, items))
