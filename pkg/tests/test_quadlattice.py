import random

import pytest

from engine.quadlattice import (
    GramLattice,
    LatticeError,
    cartan_A,
    direct_sum,
    exceptional_gram,
    gram_E8,
    gram_H,
    is_primitive,
    k3_gram,
    hyperbolic_embedding,
    scan_hyperbolic_embeddings,
    signature,
)


def test_e8():
    e8 = gram_E8()
    assert e8.rank == 8
    assert e8.determinant == 1
    assert signature(e8) == (8, 0, 0)
    assert e8.is_even
    assert e8.is_symmetric


def test_hyperbolic_plane():
    assert gram_H(1).determinant == -1
    assert signature(gram_H(1)) == (1, 1, 0)
    assert gram_H(2).is_even
    assert signature(gram_H(2)) == (1, 1, 0)
    with pytest.raises(LatticeError):
        gram_H(0)


def test_k3_lattice():
    k3 = k3_gram()
    assert k3.rank == 22
    assert signature(k3) == (3, 19, 0)
    assert k3.is_even
    assert k3.is_unimodular


def test_signature_small_cases():
    assert signature(GramLattice.of([[0] * 4 for _ in range(4)])) == (0, 0, 4)
    assert signature(GramLattice.of([[2, 0, 0], [0, -2, 0], [0, 0, 0]])) == (1, 1, 1)
    assert signature(GramLattice.of([[0, 1, 0], [1, 0, 0], [0, 0, 0]])) == (1, 1, 1)
    assert signature(GramLattice.of([])) == (0, 0, 0)
    with pytest.raises(LatticeError):
        signature(GramLattice.of([[1, 2], [0, 1]]))


def test_cartan_and_exceptional():
    assert cartan_A(4).determinant == 5
    assert signature(exceptional_gram([1, 2, 4])) == (0, 7, 0)


def _random_symmetric(rng, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-3, 3)
    return GramLattice.of(rows)


def _random_unimodular(rng, n):
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for row in u:
            row[j] += c * row[i]
    return u


def _congruent(gram, u):
    n = len(u)
    return GramLattice.of([
        [sum(u[k][i] * gram[k][l] * u[l][j] for k in range(n) for l in range(n)) for j in range(n)]
        for i in range(n)
    ])


def test_signature_additive_over_direct_sums():
    rng = random.Random(19)
    for _ in range(50):
        a = _random_symmetric(rng, rng.randint(1, 4))
        b = _random_symmetric(rng, rng.randint(1, 4))
        sa, sb = signature(a), signature(b)
        assert signature(direct_sum(a, b)) == tuple(x + y for x, y in zip(sa, sb))


def test_signature_invariant_under_unimodular_congruence():
    rng = random.Random(23)
    for _ in range(50):
        n = rng.randint(2, 5)
        a = _random_symmetric(rng, n)
        u = _random_unimodular(rng, n)
        assert signature(_congruent(a.gram, u)) == signature(a)


def test_is_primitive():
    assert is_primitive([[1, 0, 0], [0, 1, 0]])
    assert not is_primitive([[2, 0]])
    assert not is_primitive([[1, 1, 0], [1, -1, 0]])
    with pytest.raises(LatticeError):
        is_primitive([[1, 2], [2, 4]])


def test_hyperbolic_embedding_examples():
    e = hyperbolic_embedding(GramLattice.of([[2, 0], [0, 2]]))
    assert e.induced.gram == ((2, 0), (0, 2))
    assert e.off_diagonal_identity
    assert e.primitive
    assert e.unit_pairing_certificate

    e = hyperbolic_embedding(GramLattice.of([[2, 1], [1, 2]]))
    assert e.images == ((1, 1, 0, 0), (0, 2, 1, 1))
    assert e.induced.gram[0][1] == 2
    assert (e.induced.gram[0][0], e.induced.gram[1][1]) == (2, 2)
    assert e.primitive
    assert e.diagonal_matches_source
    assert not e.diagonal_matches_doubled_source


def test_hyperbolic_embedding_rejects_bad_input():
    with pytest.raises(LatticeError):
        hyperbolic_embedding(GramLattice.of([[3, 0], [0, 2]]))
    with pytest.raises(LatticeError):
        hyperbolic_embedding(GramLattice.of([[2, 3], [3, 2]]))
    with pytest.raises(LatticeError):
        hyperbolic_embedding(GramLattice.of([[2]]))


def test_hyperbolic_embedding_exhaustive_scan():
    scan = scan_hyperbolic_embeddings(20)
    assert scan.inputs > 0
    assert scan.off_diagonal_identity == scan.inputs
    assert scan.primitive == scan.inputs
    assert scan.diagonal_equals_source == scan.inputs
    assert scan.diagonal_equals_doubled_source == 0
