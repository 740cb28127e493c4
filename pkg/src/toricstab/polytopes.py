"""Exact rational polytopes: vertex enumeration, triangulation, volume.

Polytopes are handled in H-representation (a list of half-spaces
``<u, normal> >= offset`` with integer normals and rational offsets) and
V-representation (rational vertex tuples).  Vertex enumeration is the
exhaustive n-subset intersection of facet hyperplanes with feasibility
filtering: exact and perfectly adequate at the facet counts this package
sees (< 20).

Volume and centroid come from a fan-out triangulation anchored at a chosen
interior point; facets are triangulated recursively by projecting out one
coordinate, which keeps every determinant rational.
"""

from __future__ import annotations

import math
import os
import warnings
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceeded, InvariantViolation
from .lattice import RatVec, det_int, dot, gcd_vec, matrix_rank, vec_sub

HalfSpace = tuple[tuple[int, ...], Fraction]  # (normal a, offset b): <u, a> >= b


def enumerate_vertices(halfspaces: Sequence[HalfSpace], dim: int) -> list[RatVec]:
    """All vertices of the intersection of half-spaces, lexicographically sorted.

    A vertex is the unique solution of some dim-subset of the boundary
    hyperplanes that satisfies every remaining constraint.
    """
    seen: dict[RatVec, None] = {}
    for subset in combinations(range(len(halfspaces)), dim):
        rows = [halfspaces[i][0] for i in subset]
        rhs = [halfspaces[i][1] for i in subset]
        point = _solve_integer_rows(rows, rhs, dim)
        if point is None:
            continue
        if all(dot(point, a) >= b for a, b in halfspaces):
            seen.setdefault(point)
    return sorted(seen)


def _solve_integer_rows(
    rows: Sequence[Sequence[int]], rhs: Sequence[Fraction], dim: int
) -> Optional[RatVec]:
    """Cramer solve of an integer-row system with rational right-hand side."""
    d = det_int(rows)
    if d == 0:
        return None
    mult = math.lcm(*(Fraction(b).denominator for b in rhs))
    b_int = [int(b * mult) for b in rhs]
    out = []
    for col in range(dim):
        replaced = [
            [b_int[r] if c == col else rows[r][c] for c in range(dim)]
            for r in range(dim)
        ]
        out.append(Fraction(det_int(replaced), d * mult))
    return tuple(out)


def recession_direction(normals: Sequence[Sequence[int]], dim: int) -> Optional[tuple]:
    """A nonzero direction in {u : <u, a_i> >= 0 for all i}, or None.

    None means the recession cone is trivial, i.e. the polyhedron with these
    normals is bounded.
    """
    if dim == 0:
        return None
    if not normals or matrix_rank(normals) < dim:
        # the constraints fix fewer than dim directions: a full line remains
        return _kernel_vector(normals, dim)
    if dim == 1:
        for cand in ((1,), (-1,)):
            if all(dot(cand, a) >= 0 for a in normals):
                return cand
        return None
    # pointed cone: any nonzero element lies on a face, so scanning the
    # candidate extreme rays (intersections of dim-1 active constraints)
    # finds a direction whenever one exists
    for subset in combinations(range(len(normals)), dim - 1):
        rows = [normals[i] for i in subset]
        if matrix_rank(rows) != dim - 1:
            continue
        direction = _kernel_vector(rows, dim)
        if direction is None:
            continue
        for cand in (direction, tuple(-x for x in direction)):
            if all(dot(cand, a) >= 0 for a in normals):
                return cand
    return None


def _kernel_vector(rows: Sequence[Sequence], dim: int) -> Optional[tuple]:
    """Any nonzero rational vector orthogonal to all rows, None if full rank."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: dict[int, int] = {}  # column -> row index in reduced form
    row = 0
    for col in range(dim):
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
        pivots[col] = row
        row += 1
    free = next((c for c in range(dim) if c not in pivots), None)
    if free is None:
        return None
    vec = [Fraction(0)] * dim
    vec[free] = Fraction(1)
    for col, r in pivots.items():
        vec[col] = -m[r][free]
    return tuple(vec)


def hull_facets(points: Sequence[RatVec], dim: int) -> list[HalfSpace]:
    """Facet half-spaces of the convex hull of full-dimensional `points`.

    Brute force: every dim-subset spanning a hyperplane with all points on
    one side contributes its (primitive-integer-normal) half-space, oriented
    so the hull satisfies <u, a> >= b.
    """
    facets: dict[HalfSpace, None] = {}
    for subset in combinations(points, dim):
        plane = _hyperplane_through(subset, dim)
        if plane is None:
            continue
        a, b = plane
        side = [dot(p, a) - b for p in points]
        if all(s >= 0 for s in side):
            facets.setdefault((a, b))
        elif all(s <= 0 for s in side):
            facets.setdefault((tuple(-x for x in a), -b))
    return sorted(facets)


def _hyperplane_through(points: Sequence[RatVec], dim: int) -> Optional[HalfSpace]:
    """The unique hyperplane through dim affinely independent points.

    Returns (primitive integer normal, rational offset) or None when the
    points do not span a hyperplane.
    """
    base = points[0]
    rows = [vec_sub(p, base) for p in points[1:]]
    if matrix_rank(rows) != dim - 1:
        return None
    normal = _kernel_vector(rows, dim)
    if normal is None:
        return None
    # scale to a primitive integer vector
    denom_lcm = math.lcm(*(x.denominator for x in normal))
    ints = [int(x * denom_lcm) for x in normal]
    g = gcd_vec(ints)
    ints = tuple(v // g for v in ints)
    return ints, dot(base, ints)


def _affine_rank(points: Sequence[RatVec]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    return matrix_rank([vec_sub(p, base) for p in points[1:]])


def _det_cols(vectors: Sequence[RatVec]) -> Fraction:
    """Determinant with the given columns: denominators cleared column-wise,
    then fraction-free integer elimination."""
    scale = 1
    cols = []
    for v in vectors:
        mult = math.lcm(*(Fraction(x).denominator for x in v))
        cols.append([int(x * mult) for x in v])
        scale *= mult
    n = len(vectors)
    return Fraction(det_int([[cols[j][i] for j in range(n)] for i in range(n)]), scale)


def triangulate(
    halfspaces: Sequence[HalfSpace],
    vertices: Sequence[RatVec],
    dim: int,
    apex: Optional[RatVec] = None,
) -> list[tuple[RatVec, ...]]:
    """Triangulate a full-dimensional polytope into rational simplices.

    The triangulation fans out from `apex` (default: the vertex average,
    which lies in the interior) over a recursive triangulation of each
    facet.  Every returned simplex is a (dim+1)-tuple of points.
    """
    if not vertices:
        return []
    if dim == 1:
        lo, hi = min(vertices), max(vertices)
        return [(lo, hi)] if lo != hi else []
    if apex is None:
        apex = _average(vertices)
    simplices = []
    for boundary in _boundary_triangulation(halfspaces, vertices, dim):
        simplex = (apex,) + boundary
        edges = [vec_sub(p, apex) for p in boundary]
        if _det_cols(edges) != 0:
            simplices.append(simplex)
    return simplices


def _boundary_triangulation(
    halfspaces: Sequence[HalfSpace], vertices: Sequence[RatVec], dim: int
) -> Iterable[tuple[RatVec, ...]]:
    """(dim-1)-simplices covering the boundary of the polytope."""
    canonical = _dedupe(halfspaces)
    for a, b in canonical:
        on_facet = [v for v in vertices if dot(v, a) == b]
        if _affine_rank(on_facet) != dim - 1:
            continue
        j = next(i for i, x in enumerate(a) if x != 0)
        proj = {_drop(v, j): v for v in on_facet}
        if dim - 1 == 1:
            keys = sorted(proj)
            yield (proj[keys[0]], proj[keys[-1]])
            continue
        sub_hs = _project_constraints(canonical, (a, b), j)
        sub_verts = list(proj)
        for sub in triangulate(sub_hs, sub_verts, dim - 1, apex=sub_verts[0]):
            yield tuple(proj[p] for p in sub)


def _project_constraints(
    halfspaces: Sequence[HalfSpace], facet: HalfSpace, j: int
) -> list[HalfSpace]:
    """Restrict remaining constraints to a facet hyperplane, eliminating u_j.

    On the facet, u_j = (b - sum_{k!=j} a_k u_k)/a_j; substituting into
    <u, c> >= d produces a constraint on the remaining coordinates, which we
    rescale back to an integer normal.
    """
    a, b = facet
    out = []
    for c, d in halfspaces:
        if (c, d) == facet:
            continue
        # coefficient vector after substitution (over the dropped-j coords)
        cj = Fraction(c[j], a[j])
        new = [Fraction(c[k]) - cj * a[k] for k in range(len(c)) if k != j]
        rhs = Fraction(d) - cj * b
        if all(x == 0 for x in new):
            continue  # constraint has no content on this facet
        denom_lcm = math.lcm(*(x.denominator for x in new))
        ints = [int(x * denom_lcm) for x in new]
        g = gcd_vec(ints)
        out.append((tuple(v // g for v in ints), rhs * denom_lcm / g))
    return out


def _dedupe(halfspaces: Sequence[HalfSpace]) -> list[HalfSpace]:
    """Canonical constraint list: primitive integer normals, one (binding) copy each.

    Two half-spaces with parallel normals reduce to the larger offset; this
    keeps boundary triangulations from visiting one geometric facet twice.
    """
    binding: dict[tuple[int, ...], Fraction] = {}
    for a, b in halfspaces:
        g = gcd_vec(a)
        if g == 0:
            continue
        prim = tuple(x // g for x in a)
        off = Fraction(b, g)
        if prim not in binding or off > binding[prim]:
            binding[prim] = off
    return [(a, b) for a, b in binding.items()]


def _drop(v: RatVec, j: int) -> RatVec:
    return v[:j] + v[j + 1 :]


def _average(points: Sequence[RatVec]) -> RatVec:
    n = len(points)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*points))


class RationalPolytope:
    """A bounded rational polytope carrying both H- and V-representations.

    Constructed from half-spaces; vertices are enumerated exactly on
    construction.  Instances are immutable in use (nothing mutates after
    construction) and cache their volume data.
    """

    def __init__(
        self,
        halfspaces: Sequence[HalfSpace],
        dim: int,
        *,
        assume_bounded: bool = False,
    ):
        self.dim = dim
        self.halfspaces: tuple[HalfSpace, ...] = tuple(
            (tuple(a), Fraction(b)) for a, b in _dedupe(halfspaces)
        )
        self.vertices: tuple[RatVec, ...] = tuple(
            enumerate_vertices(self.halfspaces, dim)
        )
        if not self.vertices:
            raise InvariantViolation("empty polytope")
        if not assume_bounded and recession_direction(
            [a for a, _ in self.halfspaces], dim
        ) is not None:
            raise InvariantViolation("unbounded polyhedron")
        self._vol_cache: dict = {}

    # -- basic queries ----------------------------------------------------

    def contains(self, point: Sequence, strict: bool = False) -> bool:
        if strict:
            return all(dot(point, a) > b for a, b in self.halfspaces)
        return all(dot(point, a) >= b for a, b in self.halfspaces)

    def is_full_dimensional(self) -> bool:
        return _affine_rank(self.vertices) == self.dim

    def max_linear_functional(self, w: Sequence) -> Fraction:
        """Exact maximum of <., w> over the polytope (attained at a vertex)."""
        return max(dot(v, w) for v in self.vertices)

    def min_linear_functional(self, w: Sequence) -> Fraction:
        return min(dot(v, w) for v in self.vertices)

    # -- volume and centroid ----------------------------------------------

    def _volume_data(self, base_point: Optional[RatVec] = None) -> tuple[Fraction, RatVec]:
        if not self.is_full_dimensional():
            warnings.warn("lower-dimensional polytope: volume 0", stacklevel=3)
            return Fraction(0), _average(self.vertices)
        key = base_point if base_point is not None else ("default",)
        if key not in self._vol_cache:
            simplices = triangulate(self.halfspaces, self.vertices, self.dim, apex=base_point)
            total = Fraction(0)
            weighted = [Fraction(0)] * self.dim
            fact = math.factorial(self.dim)
            for simplex in simplices:
                edges = [vec_sub(p, simplex[0]) for p in simplex[1:]]
                vol = abs(_det_cols(edges)) / fact
                if vol == 0:
                    continue
                total += vol
                centroid = _average(simplex)
                for i in range(self.dim):
                    weighted[i] += vol * centroid[i]
            centroid = tuple(
                w / total if total else c for w, c in zip(weighted, _average(self.vertices))
            )
            self._vol_cache[key] = (total, centroid)
        return self._vol_cache[key]

    def volume(self, base_point: Optional[RatVec] = None) -> Fraction:
        """Exact Euclidean volume via fan-out triangulation from an interior point."""
        return self._volume_data(base_point)[0]

    def barycenter(self) -> RatVec:
        """Exact centroid: volume-weighted average of triangulation simplex centroids."""
        if not self.is_full_dimensional():
            raise InvariantViolation("barycenter of a degenerate polytope")
        return self._volume_data()[1]

    # -- derived structure -------------------------------------------------

    def facets_from_vertices(self) -> list[HalfSpace]:
        """Recompute the irredundant facet list from the vertex set alone."""
        return hull_facets(self.vertices, self.dim)

    def sliced(self, normal: Sequence[int], offset: Fraction) -> "RationalPolytope":
        """The sub-polytope {u : <u, normal> >= offset} (bounded by construction)."""
        return RationalPolytope(
            list(self.halfspaces) + [(tuple(normal), Fraction(offset))],
            self.dim,
            assume_bounded=True,
        )

    def lattice_points(self, scale: int = 1, budget: Optional[int] = None) -> list[tuple[int, ...]]:
        """Integer points of `scale * P`, by bounding-box enumeration.

        Raises BudgetExceeded when the box holds more than `budget` points
        (default from the oracle budget, see workbench).
        """
        if budget is None:
            budget = default_oracle_budget()
        lo, hi = [], []
        box = 1
        for i in range(self.dim):
            values = [scale * v[i] for v in self.vertices]
            a = math.floor(min(values))
            b = math.ceil(max(values))
            lo.append(a)
            hi.append(b)
            box *= b - a + 1
        if box > budget:
            raise BudgetExceeded("oracle budget exceeded")
        points = []
        for pt in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            if all(dot(pt, a) >= scale * b for a, b in self.halfspaces):
                points.append(pt)
        return points

    def __repr__(self) -> str:
        return (
            f"RationalPolytope(dim={self.dim}, facets={len(self.halfspaces)}, "
            f"vertices={len(self.vertices)})"
        )


def default_oracle_budget() -> int:
    """Lattice enumeration budget; TKS_ORACLE_BUDGET overrides the default 10^7."""
    raw = os.environ.get("TKS_ORACLE_BUDGET")
    if raw is None:
        return 10_000_000
    try:
        return int(raw)
    except ValueError as exc:
        raise InvariantViolation(f"bad TKS_ORACLE_BUDGET value: {raw!r}") from exc
