"""Set-cover instance model."""

from dataclasses import dataclass, field
from typing import Any, FrozenSet, Hashable, List, Optional

from ..errors import InvalidParameterError, UncoverableInstanceError


@dataclass(frozen=True)
class SetCoverInstance:
    """
    A universe and an indexed family of subsets.

    names[j] is the external key of sets[j]: the neighbor vertex for
    per-vertex instances, the set index for standalone ones. weights[i]
    is the multiplicity of universe[i] (1 unless pairs were merged).
    """

    universe: List[Hashable]
    sets: List[FrozenSet[Hashable]]
    names: List[Any] = field(default_factory=list)
    weights: List[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.names:
            object.__setattr__(self, "names", list(range(len(self.sets))))
        if not self.weights:
            object.__setattr__(self, "weights", [1] * len(self.universe))
        if len(self.names) != len(self.sets):
            raise InvalidParameterError(
                f"{len(self.names)} names for {len(self.sets)} sets"
            )
        if len(self.weights) != len(self.universe):
            raise InvalidParameterError(
                f"{len(self.weights)} weights for {len(self.universe)} elements"
            )
        if any(w < 1 for w in self.weights):
            raise InvalidParameterError("element weights must be positive")

        members = set(self.universe)
        if len(members) != len(self.universe):
            raise InvalidParameterError("universe lists an element twice")
        covered = set()
        for j, s in enumerate(self.sets):
            stray = s - members
            if stray:
                raise InvalidParameterError(
                    f"set {self.names[j]} holds elements outside the universe: {sorted(map(str, stray))}"
                )
            covered |= s
        missing = [x for x in self.universe if x not in covered]
        if missing:
            raise UncoverableInstanceError(
                f"element {missing[0]} belongs to no set ({len(missing)} uncovered)"
            )

    @property
    def n_elements(self) -> int:
        return len(self.universe)

    @property
    def n_sets(self) -> int:
        return len(self.sets)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def index_of(self, name: Any) -> Optional[int]:
        try:
            return self.names.index(name)
        except ValueError:
            return None

    def is_cover(self, names: List[Any]) -> bool:
        """Whether the named sets together cover the universe."""
        covered = set()
        for name in names:
            j = self.index_of(name)
            if j is None:
                return False
            covered |= self.sets[j]
        return covered >= set(self.universe)
