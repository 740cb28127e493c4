"""Alpha invariant of a toric Fano variety via the torus-invariant reduction.

For toric X the infimum over effective anticanonical Q-divisors is attained
at a torus-invariant one, D = sum d_i D_i with d_i = 1 + <m, v_i> for some
rational m, and (X, c D) is log canonical exactly when every c * d_i <= 1.
The feasible m form the anticanonical polytope itself, so

    alpha(X) = 1 / max_j (1 + max over P of <u, v_j>) = 1 / max_j tau(v_j),

computed by exact vertex evaluation, with an explicit extremal witness
divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvariantViolation
from .fans import Fan
from .lattice import RatVec, dot


@dataclass(frozen=True)
class AlphaResult:
    """alpha(X) together with the divisor realizing the extremal coefficient."""

    alpha: Fraction
    witness_ray_index: int
    witness_divisor: tuple[Fraction, ...]
    witness_m: RatVec
    ray_thresholds: tuple[Fraction, ...]  # per-ray tau(v_j), auditably 1/alpha at max

    def __post_init__(self):
        if self.alpha <= 0:
            raise AssertionError("alpha must be positive")
        if any(d < 0 for d in self.witness_divisor):
            raise AssertionError("witness divisor must be effective")
        if max(self.witness_divisor) * self.alpha != 1:
            raise AssertionError("witness extremal coefficient must equal 1/alpha")


def alpha_invariant(fan: Fan) -> AlphaResult:
    """Exact alpha invariant with witness divisor and per-ray thresholds."""
    poly = fan.anticanonical_polytope()
    thresholds = []
    argmax_vertices = []
    for ray in fan.rays:
        values = [(dot(v, ray), v) for v in poly.vertices]
        best, vertex = max(values)
        thresholds.append(1 + best)
        argmax_vertices.append(vertex)
    worst = max(range(len(fan.rays)), key=lambda j: (thresholds[j], -j))
    m = argmax_vertices[worst]
    divisor = tuple(1 + dot(m, ray) for ray in fan.rays)
    return AlphaResult(
        alpha=1 / thresholds[worst],
        witness_ray_index=worst,
        witness_divisor=divisor,
        witness_m=m,
        ray_thresholds=tuple(thresholds),
    )


def is_lc_torus_pair(fan: Fan, coeffs: Sequence[Fraction]) -> bool:
    """Log canonicity of (X, sum coeffs_i D_i): true iff every coefficient <= 1.

    For an effective torus-invariant boundary the discrepancy along w = sum
    a_j v_j is sum a_j (1 - d_j), which is nonnegative for all w exactly
    when each d_j <= 1.
    """
    if len(coeffs) != len(fan.rays):
        raise InvariantViolation(
            f"expected {len(fan.rays)} coefficients, got {len(coeffs)}"
        )
    coeffs = [Fraction(c) for c in coeffs]
    if any(c < 0 for c in coeffs):
        raise InvariantViolation("not effective")
    return max(coeffs) <= 1


@dataclass(frozen=True)
class AlphaGateResult:
    """Whether alpha(X) clears the stability threshold n/(n+1)."""

    verdict: str  # "hypothesis met" | "hypothesis not met" | "theorem inapplicable (...)"
    alpha: Fraction | None
    threshold: Fraction | None


def alpha_stability_gate(fan: Fan) -> AlphaGateResult:
    """Report whether alpha(X) >= n/(n+1), the smooth-case stability threshold.

    The bound is only meaningful for smooth X of dimension at least 2; other
    inputs get an explicit inapplicability verdict.  Toric Fano manifolds
    always come out below the threshold (they have positive-dimensional
    automorphism groups), so the expected verdict is "hypothesis not met".
    """
    n = fan.dimension
    if not fan.is_smooth():
        return AlphaGateResult("theorem inapplicable (singular)", None, None)
    result = alpha_invariant(fan)
    threshold = Fraction(n, n + 1)
    if n < 2:
        return AlphaGateResult("theorem inapplicable (n=1)", result.alpha, threshold)
    verdict = "hypothesis met" if result.alpha >= threshold else "hypothesis not met"
    return AlphaGateResult(verdict, result.alpha, threshold)
