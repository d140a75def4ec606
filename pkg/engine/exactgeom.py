# k3census/engine/exactgeom.py
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp

logger = logging.getLogger("engine.exactgeom")

ExponentVector = Tuple[int, ...]
Point = Tuple[int, int]


def _as_weights(weights: Sequence[int]) -> Tuple[int, ...]:
    ws = tuple(int(w) for w in weights)
    if not ws or any(w < 1 for w in ws):
        raise ValueError(f"weights must be positive integers, got {tuple(weights)}")
    return ws


@lru_cache(maxsize=None)
def count_monomials(weights: Tuple[int, ...], degree: int) -> int:
    """Number of exponent vectors e >= 0 with sum(e_i * w_i) == degree."""
    if degree < 0:
        return 0
    if not weights:
        return 1 if degree == 0 else 0
    rest, last = weights[:-1], weights[-1]
    return sum(count_monomials(rest, degree - e * last) for e in range(degree // last + 1))


def is_representable(weights: Sequence[int], degree: int) -> bool:
    """True when some monomial in the given weights has exactly this degree."""
    if degree < 0:
        return False
    if degree == 0:
        return True
    if not weights:
        return False
    first, rest = weights[0], weights[1:]
    if not rest:
        return degree % first == 0
    return any(is_representable(rest, degree - a * first) for a in range(degree // first + 1))


def monomials_of_degree(weights: Sequence[int], degree: int) -> List[ExponentVector]:
    """
    All exponent vectors of the given weighted degree, in descending
    lexicographic order. Branches that cannot be completed are pruned with
    the memoized counts, so the cost is linear in the output.
    """
    ws = _as_weights(weights)
    out: List[ExponentVector] = []
    if degree < 0:
        return out

    def walk(i: int, remaining: int, prefix: ExponentVector):
        w = ws[i]
        if i == len(ws) - 1:
            if remaining % w == 0:
                out.append(prefix + (remaining // w,))
            return
        tail = ws[i + 1:]
        for a in range(remaining // w, -1, -1):
            rest = remaining - a * w
            if count_monomials(tail, rest):
                walk(i + 1, rest, prefix + (a,))

    walk(0, degree, ())
    return out


@dataclass(frozen=True)
class NullLatticeBasis:
    """Z-basis of {v in Z^n : v . w = 0} for the weights of a stratum."""
    weights: Tuple[int, ...]
    basis: Tuple[ExponentVector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Exact integer coordinates of a null-lattice vector in this basis."""
        v = tuple(int(x) for x in vector)
        if len(v) != len(self.weights):
            raise ValueError(f"vector {v} has wrong length for weights {self.weights}")
        if sum(a * b for a, b in zip(v, self.weights)) != 0:
            raise ValueError(f"vector {v} is not orthogonal to {self.weights}")
        if self.rank == 1:
            coords = self._coordinates_rank1(v)
        else:
            coords = self._coordinates_rank2(v)
        rebuilt = tuple(sum(c * b[k] for c, b in zip(coords, self.basis)) for k in range(len(v)))
        if rebuilt != v:
            raise ArithmeticError(f"vector {v} is not in the lattice spanned by {self.basis}")
        return coords

    def _coordinates_rank1(self, v: ExponentVector) -> Tuple[int]:
        b = self.basis[0]
        p = next(k for k, x in enumerate(b) if x != 0)
        if v[p] % b[p]:
            raise ArithmeticError(f"vector {v} is not an integer multiple of {b}")
        return (v[p] // b[p],)

    def _coordinates_rank2(self, v: ExponentVector) -> Tuple[int, int]:
        b1, b2 = self.basis
        n = len(v)
        # Cramer's rule on the first non-vanishing 2x2 minor
        for p in range(n):
            for q in range(p + 1, n):
                det = b1[p] * b2[q] - b1[q] * b2[p]
                if det == 0:
                    continue
                num1 = v[p] * b2[q] - v[q] * b2[p]
                num2 = b1[p] * v[q] - b1[q] * v[p]
                if num1 % det or num2 % det:
                    raise ArithmeticError(f"vector {v} is not in the lattice spanned by {self.basis}")
                return (num1 // det, num2 // det)
        raise ArithmeticError(f"degenerate null-lattice basis {self.basis}")


def _first_nonzero_positive(vector: ExponentVector) -> ExponentVector:
    for x in vector:
        if x != 0:
            return vector if x > 0 else tuple(-y for y in vector)
    return vector


def null_lattice_basis(weights_I: Sequence[int]) -> NullLatticeBasis:
    """
    Basis of the weight-orthogonal lattice of a 2- or 3-coordinate stratum,
    read off the unimodular column transform of the Smith decomposition of
    the 1 x n weight row.
    """
    ws = _as_weights(weights_I)
    if len(ws) not in (2, 3):
        raise ValueError(f"null lattice needs 2 or 3 weights, got {ws}")
    n = len(ws)
    _, _, t = smith_normal_decomp(DM([list(ws)], ZZ))
    cols = t.to_Matrix()
    basis = tuple(
        _first_nonzero_positive(tuple(int(cols[r, c]) for r in range(n)))
        for c in range(1, n)
    )

    for b in basis:
        if sum(x * w for x, w in zip(b, ws)) != 0:
            raise ArithmeticError(f"basis vector {b} is not orthogonal to {ws}")
    factors = invariant_factors(DM([list(b) for b in basis], ZZ))
    if len(factors) != n - 1 or any(int(f) != 1 for f in factors):
        raise ArithmeticError(f"basis {basis} does not span the full null lattice of {ws}")
    return NullLatticeBasis(weights=ws, basis=basis)


def project_to_null_lattice(exponents: Sequence[ExponentVector], lattice: NullLatticeBasis) -> List[Tuple[int, ...]]:
    """Coordinates of e - e_min for every exponent vector, e_min the lexicographic minimum."""
    if not exponents:
        return []
    base = min(tuple(e) for e in exponents)
    return [lattice.coordinates(tuple(a - b for a, b in zip(e, base))) for e in exponents]


def segment_length(coords: Iterable[Union[int, Sequence[int]]]) -> int:
    values = [c if isinstance(c, int) else int(c[0]) for c in coords]
    if not values:
        raise ValueError("segment length of an empty point set")
    return max(values) - min(values)


@dataclass(frozen=True)
class LatticePolygon:
    points: Tuple[Point, ...]
    hull: Tuple[Point, ...]
    doubled_area: int


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> List[Point]:
    """Monotone chain; counter-clockwise from the lowest-left vertex, collinear points dropped."""
    pts = sorted(set((int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 1:
        return pts
    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_and_area(points: Iterable[Point]) -> LatticePolygon:
    pts = tuple(sorted(set((int(p[0]), int(p[1])) for p in points)))
    if not pts:
        raise ValueError("hull of an empty point set")
    hull = convex_hull(pts)
    area = 0
    if len(hull) >= 3:
        for k, (x1, y1) in enumerate(hull):
            x2, y2 = hull[(k + 1) % len(hull)]
            area += x1 * y2 - x2 * y1
    return LatticePolygon(points=pts, hull=tuple(hull), doubled_area=abs(area))


def minkowski_sum(p: LatticePolygon, q: LatticePolygon) -> LatticePolygon:
    return hull_and_area((a[0] + b[0], a[1] + b[1]) for a in p.hull for b in q.hull)


def mixed_volume2(p: LatticePolygon, q: LatticePolygon) -> int:
    """2-D mixed volume MV(P,Q) = Area(P+Q) - Area(P) - Area(Q), from doubled areas."""
    doubled = minkowski_sum(p, q).doubled_area - p.doubled_area - q.doubled_area
    if doubled % 2:
        raise ArithmeticError(f"odd doubled mixed area {doubled} for hulls {p.hull} and {q.hull}")
    if doubled < 0:
        raise ArithmeticError(f"negative mixed area {doubled} for hulls {p.hull} and {q.hull}")
    logger.debug("mixed volume of %s and %s is %d", p.hull, q.hull, doubled // 2)
    return doubled // 2
