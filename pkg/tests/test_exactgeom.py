import random

import pytest

from engine.exactgeom import (
    NullLatticeBasis,
    count_monomials,
    hull_and_area,
    is_representable,
    minkowski_sum,
    mixed_volume2,
    monomials_of_degree,
    null_lattice_basis,
    project_to_null_lattice,
    segment_length,
)


def test_monomials_of_degree():
    assert monomials_of_degree((2, 4), 6) == [(3, 0), (1, 1)]
    assert len(monomials_of_degree((1, 1, 1, 2), 5)) == 34
    assert monomials_of_degree((3, 5, 7), 0) == [(0, 0, 0)]
    assert monomials_of_degree((2, 4), 5) == []
    assert monomials_of_degree((2, 4), -1) == []

    for e in monomials_of_degree((1, 2, 3, 5), 11):
        assert e[0] + 2 * e[1] + 3 * e[2] + 5 * e[3] == 11


def test_monomials_descending_lexicographic():
    ms = monomials_of_degree((1, 1, 2, 3), 9)
    assert ms == sorted(ms, reverse=True)
    assert len(set(ms)) == len(ms)


def test_monomials_reject_bad_weights():
    with pytest.raises(ValueError):
        monomials_of_degree((0, 2), 4)
    with pytest.raises(ValueError):
        monomials_of_degree((), 4)


def test_count_additive_over_last_variable():
    rng = random.Random(7)
    for _ in range(200):
        ws = tuple(rng.randint(1, 9) for _ in range(rng.randint(2, 5)))
        l = rng.randint(0, 40)
        rest, last = ws[:-1], ws[-1]
        expected = sum(count_monomials(rest, l - e * last) for e in range(l // last + 1))
        assert count_monomials(ws, l) == expected
        assert count_monomials(ws, l) == len(monomials_of_degree(ws, l))


def test_is_representable():
    assert is_representable((2, 4), 6)
    assert not is_representable((2, 4), 5)
    assert is_representable((5,), 0)
    assert not is_representable((5,), -5)
    assert not is_representable((7, 9), 10)
    assert is_representable((7, 9), 16)


def test_null_lattice_basis_rank1():
    assert null_lattice_basis((2, 4)).basis == ((2, -1),)
    assert null_lattice_basis((2, 2)).basis == ((1, -1),)
    assert null_lattice_basis((6, 10)).basis == ((5, -3),)


def test_null_lattice_basis_rank2():
    lattice = null_lattice_basis((2, 2, 2))
    assert lattice.rank == 2
    for b in lattice.basis:
        assert sum(b) == 0
    reference = NullLatticeBasis(weights=(2, 2, 2), basis=((1, -1, 0), (1, 0, -1)))
    for b in lattice.basis:
        reference.coordinates(b)
    for b in reference.basis:
        lattice.coordinates(b)


def test_null_lattice_basis_bad_input():
    with pytest.raises(ValueError):
        null_lattice_basis((2,))
    with pytest.raises(ValueError):
        null_lattice_basis((2, 4, 6, 8))


def test_null_lattice_fullness():
    rng = random.Random(11)
    for _ in range(100):
        ws = tuple(rng.randint(1, 12) for _ in range(rng.choice((2, 3))))
        lattice = null_lattice_basis(ws)
        l = rng.randint(1, 30)
        ms = monomials_of_degree(ws, l)
        for a in ms:
            for b in ms:
                lattice.coordinates(tuple(x - y for x, y in zip(a, b)))


def test_coordinates_reject_vectors_outside_lattice():
    lattice = null_lattice_basis((2, 4))
    assert lattice.coordinates((4, -2)) == (2,)
    with pytest.raises(ValueError):
        lattice.coordinates((1, 1))
    with pytest.raises(ValueError):
        lattice.coordinates((1, 0, 0))


def test_project_to_null_lattice():
    lattice = null_lattice_basis((2, 2))
    coords = project_to_null_lattice(monomials_of_degree((2, 2), 6), lattice)
    assert sorted(c[0] for c in coords) == [0, 1, 2, 3]
    assert project_to_null_lattice([], lattice) == []


def test_segment_length():
    lattice = null_lattice_basis((2, 2))
    assert segment_length(project_to_null_lattice(monomials_of_degree((2, 2), 6), lattice)) == 3
    lattice = null_lattice_basis((2, 4))
    assert segment_length(project_to_null_lattice(monomials_of_degree((2, 4), 10), lattice)) == 2
    assert segment_length([(5,)]) == 0
    assert segment_length([4, -1, 2]) == 5
    with pytest.raises(ValueError):
        segment_length([])


def test_hull_and_area():
    assert hull_and_area([(0, 0), (1, 0), (0, 1)]).doubled_area == 1
    square = hull_and_area([(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1)])
    assert square.hull == ((0, 0), (3, 0), (1, 1), (0, 1))
    assert square.doubled_area == 4
    assert hull_and_area([(0, 0)]).doubled_area == 0


def test_hull_degenerate_inputs():
    line = hull_and_area([(0, 0), (1, 1), (2, 2), (3, 3)])
    assert line.doubled_area == 0
    assert line.hull == ((0, 0), (3, 3))
    assert hull_and_area([(2, 5), (2, 5)]).hull == ((2, 5),)
    with pytest.raises(ValueError):
        hull_and_area([])


def test_minkowski_sum():
    triangle = hull_and_area([(0, 0), (1, 0), (0, 1)])
    assert minkowski_sum(triangle, triangle).doubled_area == 4
    point = hull_and_area([(3, 4)])
    assert minkowski_sum(triangle, point).hull == ((3, 4), (4, 4), (3, 5))


def test_mixed_volume_examples():
    triangle = hull_and_area([(0, 0), (1, 0), (0, 1)])
    assert mixed_volume2(triangle, triangle) == 1
    assert mixed_volume2(hull_and_area([(2, 3)]), triangle) == 0
    # degree 10 and 12 forms on the weight (2, 4, 6) face of X_{10,12} in P(2,4,5,5,6)
    lattice = null_lattice_basis((2, 4, 6))
    p, q = (hull_and_area(project_to_null_lattice(monomials_of_degree((2, 4, 6), d), lattice)) for d in (10, 12))
    assert mixed_volume2(p, q) == 5


def _random_polygon(rng):
    return hull_and_area([(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(1, 6))])


def test_mixed_volume_properties():
    rng = random.Random(20240517)
    for _ in range(1000):
        p, q = _random_polygon(rng), _random_polygon(rng)
        mv = mixed_volume2(p, q)
        assert mv >= 0
        assert mv == mixed_volume2(q, p)
        assert mixed_volume2(p, p) == p.doubled_area

        bigger = hull_and_area(list(p.points) + [(rng.randint(-5, 5), rng.randint(-5, 5))])
        assert mixed_volume2(bigger, q) >= mv
