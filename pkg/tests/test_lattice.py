"""Exact arithmetic and lattice linear algebra."""

import random
from fractions import Fraction as F

import pytest

from toricstab.lattice import (
    cone_coordinates,
    det,
    det_int,
    matrix_inverse,
    matrix_rank,
    primitivize,
    solve_linear,
)


def test_primitivize_examples():
    assert primitivize((-2, -4)) == (-1, -2)
    assert primitivize((1, 0)) == (1, 0)
    assert primitivize((-2, -3)) == (-2, -3)  # the weighted-plane ray is primitive


def test_primitivize_zero_vector():
    with pytest.raises(ValueError, match="zero vector has no direction"):
        primitivize((0, 0, 0))


def test_primitivize_idempotent():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        v = tuple(rng.randint(-40, 40) for _ in range(n))
        if all(x == 0 for x in v):
            continue
        once = primitivize(v)
        assert primitivize(once) == once


def test_solve_linear_examples():
    assert solve_linear([[1, 0], [0, 1]], [5, 7]) == (F(5), F(7))
    # expresses w=(-1,0) in the cone spanned by (0,1), (-2,-3)
    assert solve_linear([[0, -2], [1, -3]], [-1, 0]) == (F(3, 2), F(1, 2))
    assert solve_linear([[2, 0], [0, 2]], [2, 2]) == (F(1), F(1))


def test_solve_linear_singular():
    with pytest.raises(ValueError, match="singular system"):
        solve_linear([[1, 2], [2, 4]], [1, 1])


def test_cone_coordinates_examples():
    assert cone_coordinates((-1, 0), [(0, 1), (-2, -3)]) == (F(3, 2), F(1, 2))
    # sum of coordinates is the log discrepancy 2 of that valuation
    assert sum(cone_coordinates((-1, 0), [(0, 1), (-2, -3)])) == 2
    assert cone_coordinates((0, 1), [(0, 1), (-2, -3)]) == (F(1), F(0))
    assert cone_coordinates((1, 1), [(1, 0), (0, 1)]) == (F(1), F(1))


def test_cone_coordinates_outside():
    assert cone_coordinates((-1, -1), [(1, 0), (0, 1)]) is None


def test_cone_coordinates_dependent_generators():
    with pytest.raises(ValueError, match="non-simplicial cone"):
        cone_coordinates((1, 1), [(1, 0), (2, 0)])


def test_cone_coordinates_lower_dimensional_cone():
    # 1-dim cone inside Z^2: on-span vs off-span
    assert cone_coordinates((2, 4), [(1, 2)]) == (F(2),)
    assert cone_coordinates((1, 0), [(1, 2)]) is None
    assert cone_coordinates((-1, -2), [(1, 2)]) is None


def test_cone_coordinates_random_reconstruction():
    """1000 random (w, simplicial cone) pairs in dims 2..5 reconstruct exactly."""
    rng = random.Random(20240817)
    done = 0
    while done < 1000:
        n = rng.randint(2, 5)
        gens = [tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(n)]
        if det([list(g) for g in gens]) == 0:
            continue
        w = tuple(rng.randint(-30, 30) for _ in range(n))
        coords = cone_coordinates(w, gens)
        if coords is None:
            # verify the verdict: solve without the sign filter
            raw = solve_linear(
                [[g[i] for g in gens] for i in range(n)], list(w)
            )
            assert any(c < 0 for c in raw)
        else:
            rebuilt = tuple(
                sum(c * g[i] for c, g in zip(coords, gens)) for i in range(n)
            )
            assert rebuilt == w
        done += 1


def test_rational_arithmetic_is_exact():
    """(a+b)-b == a with no drift; comparison is a total order."""
    rng = random.Random(3)
    values = [
        F(rng.randint(-10**9, 10**9), rng.randint(1, 10**9)) for _ in range(300)
    ]
    for a, b in zip(values, values[1:]):
        assert (a + b) - b == a
        assert (a < b) + (a == b) + (a > b) == 1
    assert sorted(values) == sorted(sorted(values))


def test_rat_invariants_lowest_terms():
    x = F(6, -4)
    assert x.denominator > 0 and abs(x.numerator) == 3 and x.denominator == 2


def test_det_int_matches_fraction_det():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det_int(m) == det(m)


def test_matrix_inverse_round_trip():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        inv = matrix_inverse(m)
        if det(m) == 0:
            assert inv is None
            continue
        for i in range(n):
            for j in range(n):
                entry = sum(F(m[i][k]) * inv[k][j] for k in range(n))
                assert entry == (1 if i == j else 0)


def test_matrix_rank():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0], [0, 1]]) == 2
    assert matrix_rank([[0, 0], [0, 0]]) == 0
