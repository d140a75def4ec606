# k3census/engine/wps.py
import logging
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import List, Sequence, Tuple

from .errors import NotWellFormed, UnsupportedInput
from .exactgeom import count_monomials

logger = logging.getLogger("engine.wps")

WeightVector = Tuple[int, ...]

_KINDS = {1: "vertex", 2: "edge", 3: "face"}


def normalize_weights(weights: Sequence[int]) -> WeightVector:
    try:
        ws = tuple(sorted(int(w) for w in weights))
    except (TypeError, ValueError) as e:
        raise UnsupportedInput(f"weights must be integers: {e}")
    if not ws:
        raise UnsupportedInput("empty weight vector")
    if any(w < 1 for w in ws):
        raise UnsupportedInput(f"weights must be positive, got {ws}")
    return ws


def is_well_formed(weights: Sequence[int]) -> bool:
    """gcd of the weights with any single one left out is 1."""
    ws = tuple(weights)
    return all(gcd(*(ws[:i] + ws[i + 1:])) == 1 for i in range(len(ws)))


def h0(weights: Sequence[int], degree: int) -> int:
    """Dimension of the degree-l graded piece of C[x_0..x_n] with these weights."""
    return count_monomials(tuple(int(w) for w in weights), int(degree))


@dataclass(frozen=True)
class Stratum:
    indices: Tuple[int, ...]
    stabilizer: int

    @property
    def dimension(self) -> int:
        return len(self.indices) - 1

    @property
    def kind(self) -> str:
        return _KINDS.get(len(self.indices), "stratum")

    def weights_of(self, weights: Sequence[int]) -> WeightVector:
        return tuple(weights[i] for i in self.indices)


def singular_strata(weights: Sequence[int]) -> List[Stratum]:
    """
    Coordinate strata with non-trivial stabilizer, ordered by size then by
    index tuple. The full index set is excluded; it has gcd 1 when well-formed.
    """
    ws = tuple(weights)
    if not is_well_formed(ws):
        raise NotWellFormed(f"P{ws} is not well-formed")
    strata = []
    for size in range(1, len(ws)):
        for subset in combinations(range(len(ws)), size):
            h = gcd(*(ws[i] for i in subset))
            if h >= 2:
                strata.append(Stratum(indices=subset, stabilizer=h))
    return strata
