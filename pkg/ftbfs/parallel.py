"""
Process pool helpers with deterministic result ordering.

Jobs are pure-Python graph searches, so they run in worker processes.
Every fn handed to these helpers must pickle: a module-level function,
or a functools.partial over one with picklable arguments.
"""

import math
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Callable, Iterable, Iterator, List, Optional, TypeVar

from .errors import InvalidParameterError

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "FTBFS_THREADS"


def resolve_workers(workers: Optional[int] = None) -> int:
    """
    Resolve the worker count.

    An explicit argument wins, then the FTBFS_THREADS environment
    variable, then a single worker.
    """
    if workers is None:
        raw = os.environ.get(THREADS_ENV)
        if not raw:
            return 1
        try:
            workers = int(raw)
        except ValueError:
            raise InvalidParameterError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    if workers < 1:
        raise InvalidParameterError(f"worker count must be positive, got {workers}")
    return workers


def iter_ordered(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: Optional[int] = None,
) -> Iterator[R]:
    """
    Yield fn(item) for every item, in input order.

    With one worker, or fewer than two items, everything runs in this
    process. Otherwise items are shipped to a process pool in chunks of
    roughly a quarter of each worker's share.
    """
    items = list(items)
    count = resolve_workers(workers)
    if count == 1 or len(items) < 2:
        for item in items:
            yield fn(item)
        return

    count = min(count, len(items))
    chunksize = max(1, math.ceil(len(items) / (count * 4)))
    with ProcessPoolExecutor(max_workers=count) as pool:
        yield from pool.map(fn, items, chunksize=chunksize)


def map_ordered(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: Optional[int] = None,
) -> List[R]:
    """Apply fn to every item; results come back in input order."""
    return list(iter_ordered(fn, items, workers))


def first_hit(
    fn: Callable[[T], Optional[R]],
    items: Iterable[T],
    workers: Optional[int] = None,
    chunksize: int = 1,
) -> Optional[R]:
    """
    First non-None fn(item) in input order.

    Items are consumed lazily, a window of a few chunks per worker at a
    time, so an early hit stops the scan.
    """
    count = resolve_workers(workers)
    iterator = iter(items)
    if count == 1:
        for item in iterator:
            result = fn(item)
            if result is not None:
                return result
        return None

    window = count * chunksize * 4
    with ProcessPoolExecutor(max_workers=count) as pool:
        while True:
            chunk = list(islice(iterator, window))
            if not chunk:
                return None
            for result in pool.map(fn, chunk, chunksize=chunksize):
                if result is not None:
                    return result
