"""Exact univariate polynomials and continuous piecewise polynomials.

Polynomials are tuples of Fraction coefficients in ascending degree order,
trimmed of trailing zeros.  A PiecewisePolynomial is a list of pieces over a
strictly increasing breakpoint grid; adjacent pieces with identical
polynomials are merged at construction and exact continuity at interior
breakpoints is enforced.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Poly = tuple[Fraction, ...]


def poly_trim(coeffs: Sequence[Fraction]) -> Poly:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs) if cs else (Fraction(0),)


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def poly_derivative(coeffs: Sequence[Fraction]) -> Poly:
    return poly_trim([k * c for k, c in enumerate(coeffs)][1:] or [Fraction(0)])


def poly_antiderivative(coeffs: Sequence[Fraction]) -> Poly:
    return poly_trim([Fraction(0)] + [c / (k + 1) for k, c in enumerate(coeffs)])


def poly_scale(coeffs: Sequence[Fraction], factor: Fraction) -> Poly:
    return poly_trim([factor * c for c in coeffs])


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Exact interpolating polynomial through distinct rational points."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        # basis polynomial prod_{j!=i} (x - xj)/(xi - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] += -xj * c
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        w = yi / denom
        for k, c in enumerate(basis):
            coeffs[k] += w * c
    return poly_trim(coeffs)


def poly_linear_power(coeffs: Poly, m: int) -> tuple[Fraction, Fraction] | None:
    """Decompose a polynomial as c*(x + r)^m with rational c != 0 and r.

    Returns (c, r) when the decomposition exists, else None.  Such a piece
    has an affine m-th root wherever it is nonnegative (for even m the sign
    of c must be positive; odd m allows decreasing roots with c < 0), which
    is the exact-equality branch of root-concavity comparisons.
    """
    cs = poly_trim(coeffs)
    if len(cs) != m + 1:
        return None
    c = cs[m]
    if c == 0 or (c < 0 and m % 2 == 0):
        return None
    r = cs[m - 1] / (m * c)
    # verify the full binomial expansion: coefficient of x^i is C(m,i) r^(m-i)
    expect = tuple(c * math.comb(m, i) * r ** (m - i) for i in range(m + 1))
    return (c, r) if expect == cs else None





@dataclass(frozen=True)
class PiecewisePolynomial:
    """A continuous piecewise polynomial on [breakpoints[0], breakpoints[-1]]."""

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.breakpoints) != len(self.pieces) + 1:
            raise ValueError("breakpoint/piece count mismatch")
        if any(a >= b for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        # merge adjacent identical pieces into canonical form
        bps = [self.breakpoints[0]]
        ps: list[Poly] = []
        for right, piece in zip(self.breakpoints[1:], self.pieces):
            piece = poly_trim(piece)
            if ps and ps[-1] == piece:
                bps[-1] = right
            else:
                ps.append(piece)
                bps.append(right)
        object.__setattr__(self, "breakpoints", tuple(bps))
        object.__setattr__(self, "pieces", tuple(ps))
        for i in range(1, len(self.breakpoints) - 1):
            x = self.breakpoints[i]
            left = poly_eval(self.pieces[i - 1], x)
            right = poly_eval(self.pieces[i], x)
            if left != right:
                raise ValueError(f"discontinuity at breakpoint {x}: {left} != {right}")

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.breakpoints[0], self.breakpoints[-1]

    def piece_index(self, x: Fraction) -> int:
        lo, hi = self.domain
        if not lo <= x <= hi:
            raise ValueError(f"{x} outside domain [{lo}, {hi}]")
        return min(bisect_right(self.breakpoints, x) - 1, len(self.pieces) - 1) if x > lo else 0

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        return poly_eval(self.pieces[self.piece_index(x)], x)

    def derivative(self) -> "PiecewisePolynomial":
        """Piecewise derivative (continuous whenever the function is C^1)."""
        return PiecewisePolynomial(
            self.breakpoints, tuple(poly_derivative(p) for p in self.pieces)
        )

    def scale(self, factor) -> "PiecewisePolynomial":
        factor = Fraction(factor)
        return PiecewisePolynomial(
            self.breakpoints, tuple(poly_scale(p, factor) for p in self.pieces)
        )

    def integral(self, a=None, b=None) -> Fraction:
        """Exact definite integral over [a, b] (default: the full domain)."""
        lo, hi = self.domain
        a = lo if a is None else Fraction(a)
        b = hi if b is None else Fraction(b)
        if not (lo <= a <= b <= hi):
            raise ValueError("integration bounds outside domain")
        total = Fraction(0)
        for i, piece in enumerate(self.pieces):
            left = max(a, self.breakpoints[i])
            right = min(b, self.breakpoints[i + 1])
            if left >= right:
                continue
            anti = poly_antiderivative(piece)
            total += poly_eval(anti, right) - poly_eval(anti, left)
        return total

    def one_sided_derivatives(self, x: Fraction) -> tuple[Fraction, Fraction]:
        """(left, right) derivative values at an interior breakpoint."""
        i = self.breakpoints.index(x)
        if i == 0 or i == len(self.breakpoints) - 1:
            raise ValueError("one-sided derivatives only at interior breakpoints")
        return (
            poly_eval(poly_derivative(self.pieces[i - 1]), x),
            poly_eval(poly_derivative(self.pieces[i]), x),
        )

    def is_c1(self) -> bool:
        """Exact one-sided derivative agreement at every interior breakpoint."""
        return all(
            lhs == rhs
            for lhs, rhs in (
                self.one_sided_derivatives(x) for x in self.breakpoints[1:-1]
            )
        )

    def pieces_covering(self, a: Fraction, b: Fraction) -> list[Poly]:
        """Distinct piece polynomials meeting the closed interval [a, b]."""
        out: list[Poly] = []
        for i, piece in enumerate(self.pieces):
            if self.breakpoints[i] < b and self.breakpoints[i + 1] > a:
                if piece not in out:
                    out.append(piece)
        return out

    def max_degree(self) -> int:
        return max(len(p) - 1 for p in self.pieces)


# -- exact m-th root comparison -------------------------------------------------


def int_nth_root(value: int, m: int) -> int:
    """Largest r with r^m <= value, by integer Newton iteration."""
    if value < 0:
        raise ValueError("negative radicand")
    if value == 0 or m == 1:
        return value
    r = 1 << (value.bit_length() // m + 1)
    while True:
        nxt = ((m - 1) * r + value // r ** (m - 1)) // m
        if nxt >= r:
            break
        r = nxt
    while r ** m > value:
        r -= 1
    return r


def nth_root_bounds(f: Fraction, m: int, scale: int) -> tuple[Fraction, Fraction]:
    """Rational bracket lo <= f^(1/m) <= hi of width 1/scale, exactly verified."""
    if f < 0:
        raise ValueError("negative radicand")
    if m == 1 or f == 0:
        return f, f
    big = f.numerator * scale**m // f.denominator
    r = int_nth_root(big, m)
    return Fraction(r, scale), Fraction(r + 1, scale)


def midpoint_root_concave(fn: PiecewisePolynomial, m: int, x: Fraction, y: Fraction) -> bool:
    """Exact test of fn(mid)^(1/m) >= (fn(x)^(1/m) + fn(y)^(1/m)) / 2.

    Roots are compared through rational brackets refined until separated;
    the genuine equality case (fn a perfect m-th power of a linear
    polynomial over [x, y]) is recognized algebraically, so no comparison is
    ever decided by tolerance alone.
    """
    mid = (x + y) / 2
    qa, qm, qb = fn(x), fn(mid), fn(y)
    if min(qa, qm, qb) < 0:
        raise ValueError("root concavity needs nonnegative values")
    if m == 1:
        return 2 * qm >= qa + qb
    if qa == qm == qb:
        return True
    covering = fn.pieces_covering(x, y)
    if len(covering) == 1 and poly_linear_power(covering[0], m) is not None:
        return True  # the root function is affine here: exact equality
    for exponent in (12, 24, 48, 96):
        scale = 10**exponent
        lo_a, hi_a = nth_root_bounds(qa, m, scale)
        lo_b, hi_b = nth_root_bounds(qb, m, scale)
        lo_m, hi_m = nth_root_bounds(qm, m, scale)
        if 2 * lo_m >= hi_a + hi_b:
            return True
        if 2 * hi_m < lo_a + lo_b:
            return False
    raise ArithmeticError(
        f"m-th roots of {qa}, {qm}, {qb} not separable at width 1e-96"
    )
