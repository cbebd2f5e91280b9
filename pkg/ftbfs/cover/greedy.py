"""Greedy and exhaustive set cover."""

import math
from itertools import combinations
from typing import Any, List

from .models import SetCoverInstance


def harmonic(k: int) -> float:
    """H(k) = 1 + 1/2 + ... + 1/k, with H(0) = 0."""
    return math.fsum(1.0 / i for i in range(1, k + 1))


def greedy_set_cover(inst: SetCoverInstance) -> List[Any]:
    """
    Classical greedy: repeatedly take the set covering the most uncovered
    weight, breaking ties by lowest set index. Returns names in pick order.

    On a merged (weighted) instance the picks equal those on the
    unmerged one, so the H(|U|) guarantee carries over.
    """
    weight = dict(zip(inst.universe, inst.weights))
    uncovered = set(inst.universe)
    chosen: List[Any] = []
    while uncovered:
        best_j = -1
        best_gain = 0
        for j, s in enumerate(inst.sets):
            gain = sum(weight[x] for x in s if x in uncovered)
            if gain > best_gain:
                best_j, best_gain = j, gain
        # Coverability is checked on construction, so some set always gains.
        chosen.append(inst.names[best_j])
        uncovered -= inst.sets[best_j]
    return chosen


def brute_set_cover(inst: SetCoverInstance) -> List[Any]:
    """Minimum cover by enumeration; among minima, the lexicographically first index tuple."""
    index = {x: i for i, x in enumerate(inst.universe)}
    full = (1 << len(inst.universe)) - 1
    masks = []
    for s in inst.sets:
        mask = 0
        for x in s:
            mask |= 1 << index[x]
        masks.append(mask)

    for k in range(len(inst.sets) + 1):
        for combo in combinations(range(len(inst.sets)), k):
            covered = 0
            for j in combo:
                covered |= masks[j]
            if covered == full:
                return [inst.names[j] for j in combo]
    return []  # unreachable for a coverable instance
