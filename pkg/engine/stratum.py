# k3census/engine/stratum.py
import logging
import re
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    AnalysisError,
    ContainedSingularStratum,
    NonDuValPoint,
    NonIsolatedSingularLocus,
    NotSurfaceCodimension,
    NotWellFormed,
    QuasismoothnessFailureAtVertex,
    RankBoundViolation,
    UnsupportedInput,
)
from .exactgeom import (
    hull_and_area,
    is_representable,
    mixed_volume2,
    monomials_of_degree,
    null_lattice_basis,
    project_to_null_lattice,
    segment_length,
)
from .wps import Stratum, is_well_formed, normalize_weights, singular_strata

logger = logging.getLogger("engine.stratum")

# Néron–Severi rank of a K3 is at most 20; one class is the polarization.
MAX_EXCEPTIONAL_RANK = 19


@dataclass(frozen=True)
class WeightSystem:
    weights: Tuple[int, ...]
    degrees: Tuple[int, ...]

    @classmethod
    def of(cls, weights: Sequence[int], degrees: Sequence[int]) -> "WeightSystem":
        ws = normalize_weights(weights)
        try:
            ds = tuple(sorted(int(d) for d in degrees))
        except (TypeError, ValueError) as e:
            raise UnsupportedInput(f"degrees must be integers: {e}")
        if not ds or any(d < 1 for d in ds):
            raise UnsupportedInput(f"degrees must be positive, got {tuple(degrees)}")
        return cls(weights=ws, degrees=ds)

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def is_k3(self) -> bool:
        return sum(self.degrees) == sum(self.weights)

    @property
    def label(self) -> str:
        ds = ",".join(str(d) for d in self.degrees)
        ws = ",".join(str(w) for w in self.weights)
        return f"X_{ds} in P({ws})"

    def weights_str(self) -> str:
        return " ".join(str(w) for w in self.weights)

    def degrees_str(self) -> str:
        return " ".join(str(d) for d in self.degrees)


@dataclass(frozen=True)
class BasketEntry:
    n: int
    multiplicity: int
    source: Tuple[int, ...] = ()


class BasketSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


_ENTRY = re.compile(r"(?:(\d+)x)?A(\d+)")


@dataclass(frozen=True)
class Basket:
    entries: Tuple[BasketEntry, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "Basket":
        """
        Parse the catalog grammar ``entry ("+" entry)*`` with
        ``entry := [m "x"] "A" n``; the literal ``-`` is the empty basket.
        """
        text = text.strip()
        if text == "-":
            return cls()
        if not text:
            raise BasketSyntaxError("empty basket field (use '-')", 0)
        entries = []
        pos = 0
        for part in text.split("+"):
            m = _ENTRY.fullmatch(part)
            if not m:
                raise BasketSyntaxError(f"malformed basket entry {part!r}", pos)
            mult = int(m.group(1)) if m.group(1) else 1
            n = int(m.group(2))
            if mult < 1 or n < 1:
                raise BasketSyntaxError(f"basket entry {part!r} must be positive", pos)
            entries.append(BasketEntry(n=n, multiplicity=mult))
            pos += len(part) + 1
        return cls(entries=tuple(entries))

    def counts(self) -> Dict[int, int]:
        c: Counter = Counter()
        for e in self.entries:
            c[e.n] += e.multiplicity
        return dict(sorted(c.items()))

    def total(self) -> int:
        return sum(e.n * e.multiplicity for e in self.entries)

    def expanded(self) -> List[int]:
        return [n for n, m in self.counts().items() for _ in range(m)]

    def canonical(self) -> str:
        parts = [f"{m}xA{n}" if m > 1 else f"A{n}" for n, m in self.counts().items()]
        return "+".join(parts) or "-"

    def same_as(self, other: "Basket") -> bool:
        return self.counts() == other.counts()

    def __str__(self) -> str:
        return self.canonical()


def _check_du_val(ws: WeightSystem, stratum: Stratum, transverse: Sequence[int]):
    """The two transverse weights (a, b) must give 1/h(a, b) with a + b = 0 mod h."""
    h = stratum.stabilizer
    if len(transverse) != 2:
        raise NonDuValPoint(
            f"{ws.label}: stratum {stratum.indices} leaves {len(transverse)} transverse directions",
            stratum.indices,
        )
    alpha, beta = (ws.weights[k] for k in transverse)
    if (alpha + beta) % h or gcd(alpha, h) != 1:
        raise NonDuValPoint(
            f"{ws.label}: transverse weights ({alpha},{beta}) at {stratum.indices} are not of type A_{h - 1}",
            stratum.indices,
        )


def _entry(stratum: Stratum, multiplicity: int) -> BasketEntry:
    entry = BasketEntry(n=stratum.stabilizer - 1, multiplicity=multiplicity, source=stratum.indices)
    assert entry.n == stratum.stabilizer - 1 and entry.multiplicity >= 1
    return entry


def eliminated_directions(ws: WeightSystem, i: int) -> Optional[Tuple[int, ...]]:
    """
    Pairwise distinct j_a != i with x_i^m x_{j_a} of degree d_a for every
    degree, smallest indices first; None when no assignment exists.
    """
    w = ws.weights[i]
    outside = [j for j in range(len(ws.weights)) if j != i]
    for choice in permutations(outside, ws.codim):
        if all(
            ws.weights[j] <= d and (d - ws.weights[j]) % w == 0
            for j, d in zip(choice, ws.degrees)
        ):
            return choice
    return None


def vertex_analysis(ws: WeightSystem, i: int) -> Optional[BasketEntry]:
    w = ws.weights[i]
    if w == 1 or any(d % w == 0 for d in ws.degrees):
        return None
    stratum = Stratum(indices=(i,), stabilizer=w)
    eliminated = eliminated_directions(ws, i)
    if eliminated is None:
        raise QuasismoothnessFailureAtVertex(
            f"{ws.label}: vertex {i} (weight {w}) lies on X and no coordinate can be eliminated there",
            (i,),
        )
    transverse = [k for k in range(len(ws.weights)) if k != i and k not in eliminated]
    _check_du_val(ws, stratum, transverse)
    return _entry(stratum, 1)


def _edge_transverse(ws: WeightSystem, stratum: Stratum, vanishing: Sequence[int]) -> List[int]:
    """Drop one outside direction per degree that vanishes identically on the edge."""
    edge_weights = stratum.weights_of(ws.weights)
    outside = [k for k in range(len(ws.weights)) if k not in stratum.indices]
    used: List[int] = []
    for a in vanishing:
        d = ws.degrees[a]
        k = next(
            (k for k in outside if k not in used and is_representable(edge_weights, d - ws.weights[k])),
            None,
        )
        if k is None:
            raise NonDuValPoint(
                f"{ws.label}: degree {d} vanishes on edge {stratum.indices} with no linear term transverse to it",
                stratum.indices,
            )
        used.append(k)
    return [k for k in outside if k not in used]


def edge_analysis(ws: WeightSystem, stratum: Stratum) -> Optional[BasketEntry]:
    if len(stratum.indices) != 2:
        raise ValueError(f"edge analysis needs a 2-index stratum, got {stratum.indices}")
    edge_weights = stratum.weights_of(ws.weights)
    lattice = null_lattice_basis(edge_weights)
    supports = [monomials_of_degree(edge_weights, d) for d in ws.degrees]
    nonempty = [a for a, s in enumerate(supports) if s]
    vanishing = [a for a, s in enumerate(supports) if not s]

    if not nonempty:
        raise ContainedSingularStratum(
            f"{ws.label}: every equation vanishes on the edge {stratum.indices}, X contains it",
            stratum.indices,
        )
    if len(nonempty) > 1:
        # two general forms on a weighted line share no torus zeros
        return None

    multiplicity = segment_length(project_to_null_lattice(supports[nonempty[0]], lattice))
    if multiplicity == 0:
        return None
    _check_du_val(ws, stratum, _edge_transverse(ws, stratum, vanishing))
    logger.debug("%s: edge %s contributes %d x A%d", ws.label, stratum.indices, multiplicity, stratum.stabilizer - 1)
    return _entry(stratum, multiplicity)


def face_analysis(ws: WeightSystem, stratum: Stratum) -> Optional[BasketEntry]:
    if len(stratum.indices) != 3 or ws.codim != 2:
        raise ValueError(f"face analysis needs a 3-index stratum of a codim-2 system, got {stratum.indices}")
    face_weights = stratum.weights_of(ws.weights)
    supports = [monomials_of_degree(face_weights, d) for d in ws.degrees]
    if not all(supports):
        raise NonIsolatedSingularLocus(
            f"{ws.label}: an equation vanishes on the face {stratum.indices}, X meets it in a curve",
            stratum.indices,
        )
    lattice = null_lattice_basis(face_weights)
    p, q = (hull_and_area(project_to_null_lattice(s, lattice)) for s in supports)
    multiplicity = mixed_volume2(p, q)
    if multiplicity == 0:
        return None
    transverse = [k for k in range(len(ws.weights)) if k not in stratum.indices]
    _check_du_val(ws, stratum, transverse)
    logger.debug("%s: face %s contributes %d x A%d", ws.label, stratum.indices, multiplicity, stratum.stabilizer - 1)
    return _entry(stratum, multiplicity)


def validate(ws: WeightSystem):
    """Raise the matching AnalysisError when ws is not a well-formed K3 surface system."""
    if len(ws.weights) - len(ws.degrees) != 3 or ws.codim not in (1, 2):
        raise NotSurfaceCodimension(
            f"{ws.label}: expected a codimension 1 or 2 surface, got {len(ws.weights)} weights and {ws.codim} degrees"
        )
    if not ws.is_k3:
        raise UnsupportedInput(f"{ws.label}: fails the K3 condition sum(d) = sum(w)")
    if not is_well_formed(ws.weights):
        raise NotWellFormed(f"{ws.label}: weights are not well-formed")


def analyze(ws: WeightSystem) -> Basket:
    """
    Du Val basket of the general member: union of the vertex, edge and
    (codimension 2) face contributions over every singular stratum.
    """
    validate(ws)
    entries: List[BasketEntry] = []
    for stratum in singular_strata(ws.weights):
        if len(stratum.indices) == 1:
            entry = vertex_analysis(ws, stratum.indices[0])
        elif len(stratum.indices) == 2:
            entry = edge_analysis(ws, stratum)
        else:
            entry = face_analysis(ws, stratum)
        if entry is not None:
            entries.append(entry)

    basket = Basket(entries=tuple(entries))
    total = basket.total()
    if total > MAX_EXCEPTIONAL_RANK:
        raise RankBoundViolation(f"{ws.label}: exceptional rank {total} exceeds {MAX_EXCEPTIONAL_RANK}")
    if total == MAX_EXCEPTIONAL_RANK:
        raise RankBoundViolation(f"{ws.label}: exceptional rank 19 would give b2 = 3, which no K3 surface has")
    logger.debug("%s: basket %s", ws.label, basket.canonical())
    return basket


def try_analyze(ws: WeightSystem) -> Tuple[Optional[Basket], Optional[AnalysisError]]:
    try:
        return analyze(ws), None
    except AnalysisError as e:
        return None, e
