from collections import Counter
from functools import lru_cache

import pytest

from regdistinct.partition import enumerate_partitions


@lru_cache(maxsize=None)
def partitions_of(n):
    return tuple(enumerate_partitions(n))


def partition_count_dp(n, allowed=lambda size: True, cap=None):
    """Number of partitions of n with parts passing ``allowed`` and at most ``cap`` copies each.

    Bounded-knapsack DP, independent of both the enumerator and the series code.
    """
    ways = [1] + [0] * n
    for size in range(1, n + 1):
        if not allowed(size):
            continue
        new = [0] * (n + 1)
        for total in range(n + 1):
            if not ways[total]:
                continue
            c = 0
            while total + c * size <= n and (cap is None or c <= cap):
                new[total + c * size] += ways[total]
                c += 1
        ways = new
    return ways


_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    passed = _criteria.get(number, (title, True))[1]
    if rep.failed or (rep.when == "call" and rep.skipped):
        passed = False
    _criteria[number] = (title, passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}")
