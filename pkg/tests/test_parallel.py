import os
from functools import partial

import pytest

from ftbfs.errors import InvalidParameterError
from ftbfs.parallel import first_hit, iter_ordered, map_ordered, resolve_workers


def _pid(_item):
    return os.getpid()


def _square(x):
    return x * x


def _multiple_of(k, x):
    return x if x and x % k == 0 else None


def test_resolve_workers(monkeypatch):
    monkeypatch.delenv("FTBFS_THREADS", raising=False)
    assert resolve_workers() == 1
    assert resolve_workers(3) == 3
    monkeypatch.setenv("FTBFS_THREADS", "5")
    assert resolve_workers() == 5
    assert resolve_workers(2) == 2
    monkeypatch.setenv("FTBFS_THREADS", "many")
    with pytest.raises(InvalidParameterError):
        resolve_workers()
    with pytest.raises(InvalidParameterError):
        resolve_workers(0)


def test_single_worker_stays_in_process():
    assert set(map_ordered(_pid, range(6), workers=1)) == {os.getpid()}


def test_jobs_run_in_worker_processes():
    pids = map_ordered(_pid, range(8), workers=2)
    assert os.getpid() not in pids


def test_results_keep_input_order():
    items = list(range(50, 0, -1))
    assert map_ordered(_square, items, workers=3) == [x * x for x in items]
    assert list(iter_ordered(_square, items, workers=3)) == [x * x for x in items]


def test_first_hit_returns_earliest_in_input_order():
    items = [1, 2, 35, 7, 14, 3]
    assert first_hit(partial(_multiple_of, 7), items, workers=1) == 35
    assert first_hit(partial(_multiple_of, 7), items, workers=3) == 35
    assert first_hit(partial(_multiple_of, 7), items, workers=3, chunksize=2) == 35
    assert first_hit(partial(_multiple_of, 11), items, workers=3) is None
