"""Canonical path costs and shortest-path trees."""

from dataclasses import dataclass
from enum import IntEnum
from typing import FrozenSet, Iterable, List, NamedTuple, Optional

from ..graph import Distance


class Ordering(IntEnum):
    """Result of a three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class CanonCost(NamedTuple):
    """
    Exact cost of a path under the uniqueness-forcing weights.

    Each edge e_k weighs 2^(m+1) + 2^k, so a path costs
    hops * 2^(m+1) + sum(2^k). Since hops never exceeds n - 1, ordering by
    (hops, tie_key) is the same as ordering by total weight. tie_key is
    the edge set held as a bitmask, bit k set iff edge k is on the path.
    """

    hops: int
    tie_key: int

    @classmethod
    def empty(cls) -> "CanonCost":
        return cls(0, 0)

    @classmethod
    def of(cls, edge_ids: Iterable[int]) -> "CanonCost":
        """Cost of the path with the given edge set."""
        key = 0
        hops = 0
        for e in edge_ids:
            bit = 1 << e
            if key & bit:
                raise ValueError(f"edge {e} repeated in path")
            key |= bit
            hops += 1
        return cls(hops, key)

    def extend(self, edge_id: int) -> "CanonCost":
        """Cost after appending one edge not already on the path."""
        return CanonCost(self.hops + 1, self.tie_key | (1 << edge_id))

    @property
    def edge_ids(self) -> FrozenSet[int]:
        key = self.tie_key
        ids = set()
        while key:
            low = key & -key
            ids.add(low.bit_length() - 1)
            key ^= low
        return frozenset(ids)


@dataclass(frozen=True)
class SpTree:
    """Canonical shortest-path tree of one graph view from one root."""

    root: int
    parent_edge: List[Optional[int]]
    parent: List[Optional[int]]
    dist: List[Distance]
    cost: List[Optional[CanonCost]]

    @property
    def n(self) -> int:
        return len(self.dist)

    def edge_set(self) -> FrozenSet[int]:
        """Edge ids of the tree."""
        return frozenset(e for e in self.parent_edge if e is not None)

    def reachable(self, v: int) -> bool:
        return self.cost[v] is not None
