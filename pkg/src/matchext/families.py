"""The two extremal families showing the equivalence thresholds are sharp.

Vertex layouts are fixed so witnesses stay human-checkable:

* ``family_G(k)`` = (K_{2k-1} + K_1) join (K_{2k-1} + K_1): side-1 clique
  ``0..2k-2``, side-1 singleton ``2k-1``, side-2 clique ``2k..4k-2``,
  side-2 singleton ``4k-1``.
* ``family_H(k)`` = I_{k+2} join (K_{k+3} + K_{2k}): independent part
  ``0..k+1``, K_{k+3} part ``k+2..2k+4``, K_{2k} part ``2k+5..4k+4``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MAX_ORDER, Graph, complete, edgeless, join, union
from .properties import PARAM_OUT_OF_RANGE, PropertyDomainError

FAMILIES = ("G", "H")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    k: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.k < 2 or self.order > MAX_ORDER:
            raise PropertyDomainError(
                PARAM_OUT_OF_RANGE,
                f"family {self.family} needs 2 <= k with order <= {MAX_ORDER}, got k={self.k}",
            )

    @property
    def order(self) -> int:
        return 4 * self.k if self.family == "G" else 4 * self.k + 5

    def build(self) -> Graph:
        k = self.k
        if self.family == "G":
            side = union(complete(2 * k - 1), complete(1))
            return join(side, side)
        return join(edgeless(k + 2), union(complete(k + 3), complete(2 * k)))


def family_G(k: int) -> Graph:
    return FamilySpec("G", k).build()


def family_H(k: int) -> Graph:
    return FamilySpec("H", k).build()


def tightness_witness(spec: FamilySpec) -> tuple[int, ...]:
    """A vertex set S of the critical size whose deletion leaves no perfect matching.

    For G it is the whole first side (2k vertices). For H it is the
    independent part, the first k-2 vertices of the K_{k+3} part and the
    first vertex of the K_{2k} part (2k+1 vertices).
    """
    k = spec.k
    if spec.family == "G":
        return tuple(range(2 * k))
    independent = range(k + 2)
    big_clique = range(k + 2, k + 2 + (k - 2))
    return (*independent, *big_clique, 2 * k + 5)
