"""Complete simplicial fans and their anticanonical polytopes.

A fan is given by primitive integer ray generators and maximal cones listed
as ray index sets.  Validation enforces, eagerly and exactly:

  * primitive, nonzero, pairwise distinct rays, each used by some cone;
  * every maximal cone simplicial and full-dimensional;
  * completeness, via the wall condition (every facet of a maximal cone is
    shared by exactly two) plus a seeded battery of point-location probes
    that also catches overlapping cones.

The anticanonical polytope is { u : <u, v_i> >= -1 for all rays v_i };
its lattice points at dilation k index the degree-k anticanonical sections.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import InvariantViolation
from .lattice import LatticeVec, RatVec, det, matrix_inverse, primitivize
from .polytopes import RationalPolytope

PROBE_SEED = 271828
PROBE_COUNT = 1000
PROBE_BOX = 10**6


@dataclass(frozen=True)
class Cone:
    """A maximal cone of a fan, as indices into the host fan's ray table."""

    ray_indices: tuple[int, ...]


class Fan:
    """A complete simplicial fan in Z^n defining a projective toric variety."""

    def __init__(
        self,
        dimension: int,
        rays: Sequence[Sequence[int]],
        max_cones: Sequence[Sequence[int]],
        name: str = "",
        *,
        trusted: bool = False,
    ):
        self.dimension = int(dimension)
        self.name = name
        self.rays: tuple[LatticeVec, ...] = tuple(tuple(int(x) for x in r) for r in rays)
        self.max_cones: tuple[Cone, ...] = tuple(
            Cone(tuple(sorted(int(i) for i in c))) for c in max_cones
        )
        # per-cone integer adjugates: adj = det * inverse of the ray-column
        # matrix, so sign tests on adj . w (times sign det) decide membership
        # without any rational arithmetic
        self._cone_adjugates: list[tuple[tuple[int, ...], ...]] = []
        self._cone_dets: list[int] = []
        self._ray_lookup = {ray: i for i, ray in enumerate(self.rays)}
        self._polytope: Optional[RationalPolytope] = None
        self._validate(probe=not trusted)

    # -- validation ---------------------------------------------------------

    def _validate(self, probe: bool) -> None:
        n = self.dimension
        if n < 1:
            raise InvariantViolation("dimension must be at least 1")
        seen: dict[LatticeVec, int] = {}
        for i, ray in enumerate(self.rays):
            if len(ray) != n:
                raise InvariantViolation(f"ray {i} has length {len(ray)}, expected {n}")
            if all(x == 0 for x in ray):
                raise InvariantViolation(f"ray {i} is the zero vector")
            if primitivize(ray) != ray:
                raise InvariantViolation(f"ray {i} = {ray} is not primitive")
            if ray in seen:
                raise InvariantViolation(f"duplicate ray {ray} at indices {seen[ray]}, {i}")
            seen[ray] = i
        used = set()
        for ci, cone in enumerate(self.max_cones):
            if len(cone.ray_indices) != n:
                raise InvariantViolation(
                    f"maximal cone {ci} has {len(cone.ray_indices)} rays, expected {n} "
                    "(non-simplicial or lower-dimensional cones are rejected)"
                )
            if any(i < 0 or i >= len(self.rays) for i in cone.ray_indices):
                raise InvariantViolation(f"maximal cone {ci} references a missing ray")
            mat = [self.rays[i] for i in cone.ray_indices]
            cols = [[mat[j][i] for j in range(n)] for i in range(n)]
            inv = matrix_inverse(cols)
            if inv is None:
                raise InvariantViolation(f"maximal cone {ci} is not simplicial")
            d = int(det(cols))
            self._cone_dets.append(d)
            self._cone_adjugates.append(
                tuple(tuple(int(x * d) for x in row) for row in inv)
            )
            used.update(cone.ray_indices)
        if used != set(range(len(self.rays))):
            unused = sorted(set(range(len(self.rays))) - used)
            raise InvariantViolation(f"rays {unused} appear in no maximal cone")
        self._check_walls()
        if probe:
            self._probe_coverage()

    def _check_walls(self) -> None:
        n = self.dimension
        if n == 1:
            if sorted(self.rays) != [(-1,), (1,)] or len(self.max_cones) != 2:
                raise InvariantViolation("fan not complete")
            return
        wall_count: dict[frozenset, int] = {}
        for cone in self.max_cones:
            for facet in combinations(cone.ray_indices, n - 1):
                key = frozenset(facet)
                wall_count[key] = wall_count.get(key, 0) + 1
        bad = {k: v for k, v in wall_count.items() if v != 2}
        if bad:
            raise InvariantViolation("fan not complete")

    def _probe_coverage(self) -> None:
        rng = random.Random(PROBE_SEED)
        n = self.dimension
        for _ in range(PROBE_COUNT):
            point = tuple(rng.randint(-PROBE_BOX, PROBE_BOX) for _ in range(n))
            if all(x == 0 for x in point):
                continue
            interior_hits = 0
            any_hit = False
            for ci in range(len(self.max_cones)):
                signs = self._coord_signs(ci, point)
                if all(s >= 0 for s in signs):
                    any_hit = True
                    if all(s > 0 for s in signs):
                        interior_hits += 1
            if not any_hit:
                raise InvariantViolation("fan not complete")
            if interior_hits > 1:
                raise InvariantViolation("overlapping maximal cones")

    # -- cone queries ---------------------------------------------------------

    def _coord_signs(self, cone_index: int, w: Sequence[int]) -> tuple[int, ...]:
        """Integer vector with the signs of w's cone coordinates (fast path)."""
        adj = self._cone_adjugates[cone_index]
        sign = 1 if self._cone_dets[cone_index] > 0 else -1
        return tuple(sign * sum(a * x for a, x in zip(row, w)) for row in adj)

    def _coords_in_cone(self, cone_index: int, w: Sequence) -> RatVec:
        adj = self._cone_adjugates[cone_index]
        d = self._cone_dets[cone_index]
        return tuple(Fraction(sum(a * x for a, x in zip(row, w)), d) for row in adj)

    def containing_cone(self, w: Sequence[int]) -> int:
        """Index of a maximal cone containing w (complete fans always have one)."""
        for ci in range(len(self.max_cones)):
            if all(s >= 0 for s in self._coord_signs(ci, w)):
                return ci
        raise AssertionError(f"complete fan has no cone containing {tuple(w)}")

    def cone_coordinates(self, w: Sequence[int]) -> tuple[int, RatVec]:
        """(cone index, nonnegative coordinates of w in that cone)."""
        ci = self.containing_cone(w)
        return ci, self._coords_in_cone(ci, w)

    def minimal_cone_dimension(self, w: Sequence[int]) -> int:
        """Dimension of the smallest fan cone containing w."""
        ci = self.containing_cone(w)
        return sum(1 for s in self._coord_signs(ci, w) if s > 0)

    def ray_index(self, v: Sequence[int]) -> Optional[int]:
        return self._ray_lookup.get(tuple(int(x) for x in v))

    def is_smooth(self) -> bool:
        """True iff every maximal cone's rays form a lattice basis (|det| = 1)."""
        return all(abs(d) == 1 for d in self._cone_dets)

    # -- derived geometry -------------------------------------------------------

    def anticanonical_polytope(self) -> RationalPolytope:
        """The polytope { u : <u, v_i> >= -1 }, computed once and cached."""
        if self._polytope is None:
            halfspaces = [(ray, Fraction(-1)) for ray in self.rays]
            try:
                poly = RationalPolytope(halfspaces, self.dimension)
            except InvariantViolation as exc:
                raise InvariantViolation("fan not complete / not Fano") from exc
            if not poly.contains((0,) * self.dimension, strict=True):
                raise InvariantViolation("not Q-Fano")
            if not poly.is_full_dimensional():
                raise InvariantViolation("not Q-Fano")
            self._polytope = poly
        return self._polytope

    def degree(self) -> Fraction:
        """The anticanonical self-intersection number n! * vol(P)."""
        return math.factorial(self.dimension) * self.anticanonical_polytope().volume()

    def walls(self) -> list[tuple[frozenset, int, int]]:
        """All walls as (shared ray index set, cone index, adjacent cone index)."""
        n = self.dimension
        if n == 1:
            return [(frozenset(), 0, 1)]
        by_facet: dict[frozenset, list[int]] = {}
        for ci, cone in enumerate(self.max_cones):
            for facet in combinations(cone.ray_indices, n - 1):
                by_facet.setdefault(frozenset(facet), []).append(ci)
        return [(key, pair[0], pair[1]) for key, pair in sorted(
            ((k, v) for k, v in by_facet.items()), key=lambda kv: sorted(kv[0])
        )]

    def star_subdivision(self, w: Sequence[int]) -> "Fan":
        """The stellar refinement inserting the primitive ray w.

        Every maximal cone containing w is replaced by the cones obtained by
        swapping w for each generator it has positive coordinate on; cones
        not containing w survive unchanged.
        """
        w = tuple(int(x) for x in w)
        if primitivize(w) != w:
            raise InvariantViolation("star subdivision requires a primitive vector")
        if self.ray_index(w) is not None:
            raise InvariantViolation(f"{w} is already a ray of the fan")
        new_rays = list(self.rays) + [w]
        w_index = len(self.rays)
        new_cones: list[tuple[int, ...]] = []
        for ci, cone in enumerate(self.max_cones):
            coords = self._coords_in_cone(ci, w)
            if any(c < 0 for c in coords):
                new_cones.append(cone.ray_indices)
                continue
            for pos, coeff in enumerate(coords):
                if coeff > 0:
                    replaced = list(cone.ray_indices)
                    replaced[pos] = w_index
                    new_cones.append(tuple(sorted(replaced)))
        return Fan(
            self.dimension,
            new_rays,
            new_cones,
            name=f"{self.name}*{w}" if self.name else f"star{w}",
            trusted=True,
        )

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return (
            f"Fan(dim={self.dimension}{label}, rays={len(self.rays)}, "
            f"cones={len(self.max_cones)})"
        )
