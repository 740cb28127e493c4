"""Exact rational arithmetic and small-scale lattice linear algebra.

Rational scalars are ``fractions.Fraction`` throughout (always in lowest
terms, positive denominator, exact arithmetic).  Lattice vectors are plain
tuples of ints, dual/rational vectors are tuples of Fractions.  Everything
here is a pure function; no floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

Rat = Fraction
LatticeVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def dot(u: Sequence, v: Sequence):
    """Exact inner product of two equal-length vectors (int or Fraction)."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def gcd_vec(v: Sequence[int]) -> int:
    g = 0
    for a in v:
        g = math.gcd(g, abs(a))
    return g


def primitivize(v: LatticeVec) -> LatticeVec:
    """Divide an integer vector by the gcd of its coordinates.

    The result spans the same ray and has coordinate gcd 1.
    """
    g = gcd_vec(v)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(a // g for a in v)


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> RatVec:
    """Solve the square system (rows)x = rhs exactly by Gaussian elimination.

    Raises ValueError("singular system") when the matrix has no inverse.
    """
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise ValueError("solve_linear expects a square system")
    # augmented matrix in Fractions
    m = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(rows)
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant via fraction Gaussian elimination."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        result *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return result


def matrix_inverse(rows: Sequence[Sequence]) -> Optional[tuple[RatVec, ...]]:
    """Exact inverse of a square matrix, or None when singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(tuple(m[i][n:]) for i in range(n))


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Exact rank (row space dimension)."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def cone_coordinates(w: Sequence, generators: Sequence[Sequence]) -> Optional[RatVec]:
    """Coordinates of w in the simplicial cone spanned by `generators`.

    Solves w = sum a_i v_i for the linearly independent generator set and
    returns the coefficient tuple when all a_i >= 0, or None when w lies
    outside the cone (some coefficient negative, or w not in the span for
    lower-dimensional cones).

    Raises ValueError("non-simplicial cone") when the generators are
    linearly dependent.
    """
    k = len(generators)
    if k == 0:
        raise ValueError("non-simplicial cone")
    n = len(generators[0])
    if len(w) != n:
        raise ValueError(f"dimension mismatch: {len(w)} vs {n}")
    if matrix_rank(generators) != k:
        raise ValueError("non-simplicial cone")
    if k == n:
        cols = [[generators[j][i] for j in range(n)] for i in range(n)]
        sol = solve_linear(cols, w)  # full rank checked above
    else:
        # lower-dimensional cone: least-structure solve via augmented elimination
        sol = _solve_in_span(w, generators)
        if sol is None:
            return None  # w not in the linear span
    return sol if all(a >= 0 for a in sol) else None


def _solve_in_span(w: Sequence, generators: Sequence[Sequence]) -> Optional[RatVec]:
    """Express w in the span of independent generators, None if impossible."""
    k = len(generators)
    n = len(generators[0])
    # solve the n x k overdetermined system column-major by elimination
    m = [[Fraction(generators[j][i]) for j in range(k)] + [Fraction(w[i])]
         for i in range(n)]
    pivots = []
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, n) if m[r][col] != 0), None)
        if piv is None:
            return None  # dependent, caller already checked rank
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    # consistency: remaining rows must be all zero
    for r in range(row, n):
        if any(x != 0 for x in m[r]):
            return None
    return tuple(m[i][k] for i in range(k))
