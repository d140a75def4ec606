# k3census/engine/quadlattice.py
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

logger = logging.getLogger("engine.quadlattice")

Matrix = Tuple[Tuple[int, ...], ...]
Signature = Tuple[int, int, int]

# Dynkin diagram of E8: a chain 0-1-2-3-4-5-6 with node 7 attached to node 4
_E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class GramLattice:
    gram: Matrix

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "GramLattice":
        gram = tuple(tuple(int(x) for x in row) for row in rows)
        if any(len(row) != len(gram) for row in gram):
            raise LatticeError(f"Gram matrix must be square, got {len(gram)} rows of lengths {[len(r) for r in gram]}")
        return cls(gram=gram)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def is_symmetric(self) -> bool:
        n = self.rank
        return all(self.gram[i][j] == self.gram[j][i] for i in range(n) for j in range(i + 1, n))

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def determinant(self) -> int:
        if self.rank == 0:
            return 1
        return int(DM([list(r) for r in self.gram], ZZ).det())

    @property
    def is_unimodular(self) -> bool:
        return abs(self.determinant) == 1

    def scaled(self, c: int) -> "GramLattice":
        return GramLattice.of([[c * x for x in row] for row in self.gram])

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))


def direct_sum(*lattices: GramLattice) -> GramLattice:
    n = sum(L.rank for L in lattices)
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                rows[offset + i][offset + j] = L.gram[i][j]
        offset += L.rank
    return GramLattice.of(rows)


def gram_E8() -> GramLattice:
    rows = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        rows[i][j] = rows[j][i] = -1
    return GramLattice.of(rows)


def gram_H(m: int = 1) -> GramLattice:
    if m < 1:
        raise LatticeError(f"H(m) needs m >= 1, got {m}")
    return GramLattice.of([[0, m], [m, 0]])


def k3_gram() -> GramLattice:
    """-E8 + -E8 + H(1)^3: even, unimodular, signature (3, 19)."""
    minus_e8 = gram_E8().scaled(-1)
    return direct_sum(minus_e8, minus_e8, gram_H(1), gram_H(1), gram_H(1))


def cartan_A(n: int) -> GramLattice:
    """Positive-definite A_n root lattice (2 on the diagonal, -1 on the chain)."""
    if n < 1:
        raise LatticeError(f"A_n needs n >= 1, got {n}")
    return GramLattice.of([[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)])


def exceptional_gram(ns: Sequence[int]) -> GramLattice:
    """Lattice spanned by the (-2)-curves resolving A_n points: sum of -A_n."""
    return direct_sum(*(cartan_A(n).scaled(-1) for n in ns))


def _eliminate(rows: List[List], pivots: int, coeffs: Dict[int, List]) -> List[List]:
    """
    Apply the symmetric row/column operation row_k -= sum(c * row_p) for the
    leading ``pivots`` rows, then drop them.
    """
    n = len(rows)
    for k in range(pivots, n):
        c = coeffs[k]
        for j in range(n):
            rows[k][j] -= sum(c[p] * rows[p][j] for p in range(pivots))
    for k in range(pivots, n):
        c = coeffs[k]
        for i in range(n):
            rows[i][k] -= sum(c[p] * rows[i][p] for p in range(pivots))
    return [row[pivots:] for row in rows[pivots:]]


def _swap(rows: List[List], a: int, b: int):
    rows[a], rows[b] = rows[b], rows[a]
    for row in rows:
        row[a], row[b] = row[b], row[a]


def signature(lattice: GramLattice) -> Signature:
    """
    Inertia (positive, negative, zero) by exact congruence diagonalization
    over QQ. A non-zero diagonal entry is used as a pivot; when the diagonal
    is zero but an off-diagonal entry is not, the 2x2 hyperbolic block is
    split off and counted as (1, 1).
    """
    if not lattice.is_symmetric:
        raise LatticeError("signature needs a symmetric Gram matrix")
    rows = [[QQ(x) for x in row] for row in lattice.gram]
    pos = neg = zero = 0
    while rows:
        n = len(rows)
        i = next((i for i in range(n) if rows[i][i] != 0), None)
        if i is not None:
            _swap(rows, 0, i)
            a = rows[0][0]
            if a > 0:
                pos += 1
            else:
                neg += 1
            rows = _eliminate(rows, 1, {k: [rows[k][0] / a] for k in range(1, n)})
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if rows[i][j] != 0), None)
        if pair is None:
            zero += n
            break
        _swap(rows, 0, pair[0])
        _swap(rows, 1, pair[1])
        b = rows[0][1]
        pos += 1
        neg += 1
        rows = _eliminate(rows, 2, {k: [rows[k][1] / b, rows[k][0] / b] for k in range(2, n)})
    return pos, neg, zero


def is_primitive(generators: Sequence[Sequence[int]]) -> bool:
    """
    True when the sublattice spanned by ``generators`` (vectors in the
    ambient coordinates) has torsion-free quotient.
    """
    vectors = [[int(x) for x in v] for v in generators]
    if not vectors:
        return True
    if len({len(v) for v in vectors}) != 1:
        raise LatticeError("generators must share the ambient dimension")
    columns = DM([list(col) for col in zip(*vectors)], ZZ)
    if columns.convert_to(QQ).rank() != len(vectors):
        raise LatticeError(f"generators {vectors} are linearly dependent over QQ")
    return all(int(f) == 1 for f in invariant_factors(columns))


@dataclass(frozen=True)
class HyperbolicEmbedding:
    source: GramLattice
    images: Tuple[Tuple[int, int, int, int], Tuple[int, int, int, int]]
    induced: GramLattice
    off_diagonal_identity: bool
    unit_pairing_certificate: bool
    primitive: bool

    @property
    def diagonal_matches_source(self) -> bool:
        return all(self.induced.gram[i][i] == self.source.gram[i][i] for i in range(2))

    @property
    def diagonal_matches_doubled_source(self) -> bool:
        return all(self.induced.gram[i][i] == 2 * self.source.gram[i][i] for i in range(2))


def hyperbolic_embedding(source: GramLattice) -> HyperbolicEmbedding:
    """
    Embed an even positive-definite rank-2 lattice <l1, l2> into H(1) + H(1)
    with basis (v1, w1, v2, w2), (v_i, w_j) = delta_ij:
    f(l1) = v1 + (l1,l1)/2 w1 and f(l2) = v2 + (l2,l2)/2 w2 + 2(l1,l2) w1.
    """
    if source.rank != 2 or not source.is_symmetric:
        raise LatticeError("embedding needs a symmetric rank-2 Gram matrix")
    if not source.is_even:
        raise LatticeError(f"Gram matrix {source.gram} is odd")
    (a, b), (_, c) = source.gram
    if a <= 0 or a * c - b * b <= 0:
        raise LatticeError(f"Gram matrix {source.gram} is not positive definite")

    f1 = (1, a // 2, 0, 0)
    f2 = (0, 2 * b, 1, c // 2)
    target = direct_sum(gram_H(1), gram_H(1))
    induced = GramLattice.of([[target.pairing(x, y) for y in (f1, f2)] for x in (f1, f2)])
    w = ((0, 1, 0, 0), (0, 0, 0, 1))
    certificate = all(target.pairing(f, wj) == (1 if i == j else 0) for i, f in enumerate((f1, f2)) for j, wj in enumerate(w))
    off_diagonal = induced.gram[0][1] == 2 * b
    if not off_diagonal or not certificate:
        raise ArithmeticError(f"embedding of {source.gram} broke its defining pairings: {induced.gram}")
    return HyperbolicEmbedding(
        source=source,
        images=(f1, f2),
        induced=induced,
        off_diagonal_identity=off_diagonal,
        unit_pairing_certificate=certificate,
        primitive=is_primitive([f1, f2]),
    )


@dataclass(frozen=True)
class EmbeddingScan:
    inputs: int
    off_diagonal_identity: int
    primitive: int
    diagonal_equals_source: int
    diagonal_equals_doubled_source: int


def scan_hyperbolic_embeddings(max_entry: int = 20) -> EmbeddingScan:
    """Run the embedding over every even positive-definite [[a,b],[b,c]] with entries up to max_entry."""
    inputs = off = prim = diag = doubled = 0
    for a in range(2, max_entry + 1, 2):
        for c in range(2, max_entry + 1, 2):
            for b in range(-max_entry, max_entry + 1):
                if a * c - b * b <= 0:
                    continue
                e = hyperbolic_embedding(GramLattice.of([[a, b], [b, c]]))
                inputs += 1
                off += e.off_diagonal_identity
                prim += e.primitive
                diag += e.diagonal_matches_source
                doubled += e.diagonal_matches_doubled_source
    logger.info("embedding scan: %d inputs, diagonal equals (l,l) on %d", inputs, diag)
    return EmbeddingScan(inputs, off, prim, diag, doubled)
