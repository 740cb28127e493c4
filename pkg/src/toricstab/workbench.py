"""Orchestration: fan documents, valuation batteries, reports, screening, CSV.

FanSpec documents are JSON objects with fields `name` (string), `dim`
(integer), `rays` (array of integer arrays) and `cones` (array of ray-index
arrays); unknown fields are ignored with a warning.  All rational values in
emitted reports are serialized as exact "p/q" strings; reports are
byte-deterministic for a fixed input.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence, TextIO

from .alpha import AlphaResult, alpha_invariant
from .corpus import builtin_fan_specs
from .errors import InvariantViolation, ParseError
from .fans import Fan
from .lattice import RatVec, gcd_vec
from .valuations import (
    ToricValuation,
    ValuationProfile,
    beta_invariant,
    log_discrepancy,
    pseff_threshold,
    restricted_volume,
    valuation_profile,
    volume_function,
)

KNOWN_FANSPEC_FIELDS = ("name", "dim", "rays", "cones", "metadata")

ASSUMPTION_LEDGER = (
    "dreaminess: torus-invariant valuations on toric varieties are always dreamy "
    "(finitely generated section rings); assumed, not computed",
    "alpha reduction: the alpha invariant infimum is computed over torus-invariant "
    "anticanonical divisors only, which suffices for toric varieties",
    "semistability verdict: quantifies over torus-invariant divisorial valuations; "
    "for toric varieties this is equivalent to the full valuative criterion",
    "verdict provenance: the semistability verdict rests on the exact barycenter "
    "identity beta(w) = -degree * <barycenter, w> (a global statement); the finite "
    "battery is an independent cross-check, not the source of the claim",
)


# -- fan documents -------------------------------------------------------------


def parse_fan_spec(document: dict, name_fallback: str = "") -> Fan:
    """Validate a FanSpec dict and build the fan (all invariants enforced)."""
    if not isinstance(document, dict):
        raise ParseError("fan spec must be a JSON object")
    unknown = [k for k in document if k not in KNOWN_FANSPEC_FIELDS]
    if unknown:
        warnings.warn(f"ignoring unknown fan spec fields: {sorted(unknown)}", stacklevel=2)
    try:
        name = document.get("name", name_fallback)
        dim = document["dim"]
        rays = document["rays"]
        cones = document["cones"]
    except KeyError as exc:
        raise ParseError(f"fan spec is missing required field {exc.args[0]!r}") from exc
    if not isinstance(dim, int):
        raise ParseError("field 'dim' must be an integer")
    if not isinstance(rays, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rays
    ):
        raise ParseError("field 'rays' must be a list of integer vectors")
    if not isinstance(cones, list) or not all(
        isinstance(c, list) and all(isinstance(i, int) for i in c) for c in cones
    ):
        raise ParseError("field 'cones' must be a list of ray index lists")
    return Fan(dim, rays, cones, name=str(name))


def load_fan(path: str) -> Fan:
    """Load and validate a fan from a FanSpec JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read fan spec {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path!r}: {exc}") from exc
    return parse_fan_spec(document, name_fallback=path)


@lru_cache(maxsize=None)
def load_builtin_fan(name: str) -> Fan:
    """Validated fan from the built-in corpus (cached: fans are immutable)."""
    specs = builtin_fan_specs()
    if name not in specs:
        raise ParseError(f"unknown builtin fan {name!r}; options: {sorted(specs)}")
    return parse_fan_spec(specs[name])


# -- valuation battery ---------------------------------------------------------


def valuation_battery(fan: Fan, radius: int) -> list[ToricValuation]:
    """All primitive integer vectors of max-norm <= radius, in shell-lex order."""
    if radius < 1:
        raise InvariantViolation("battery radius must be at least 1")
    vectors = []
    for w in product(range(-radius, radius + 1), repeat=fan.dimension):
        if any(w) and gcd_vec(w) == 1:
            vectors.append(w)
    vectors.sort(key=lambda w: (max(abs(x) for x in w), w))
    return [ToricValuation(fan, w) for w in vectors]


# -- projective-space screening --------------------------------------------------


@dataclass(frozen=True)
class ScreenWitness:
    w: tuple[int, ...]
    log_discrepancy: Fraction
    pseff_threshold: Fraction
    beta: Fraction


@dataclass(frozen=True)
class ScreenResult:
    """Search for valuations with A >= (n/(n+1)) tau and beta <= 0.

    On a smooth fan such a witness forces the variety to be projective
    space, so the screen asserts the recognition; a singular fan can carry a
    witness without the conclusion, and is flagged instead.
    """

    fan_name: str
    dimension: int
    radius: int
    smooth: bool
    witnesses: tuple[ScreenWitness, ...]
    recognized_projective_space: Optional[bool]
    verdict: str


def recognize_projective_space(fan: Fan) -> bool:
    """Smooth + complete + exactly n+1 rays recognizes the P^n fan."""
    return fan.is_smooth() and len(fan.rays) == fan.dimension + 1


def screen_projective_space(fan: Fan, radius: int = 4) -> ScreenResult:
    n = fan.dimension
    bound = Fraction(n, n + 1)
    witnesses = []
    for val in valuation_battery(fan, radius):
        a_disc = log_discrepancy(val)
        tau = pseff_threshold(val)
        if a_disc < bound * tau:
            continue
        beta = beta_invariant(val)
        if beta <= 0:
            witnesses.append(ScreenWitness(val.w, a_disc, tau, beta))
    smooth = fan.is_smooth()
    recognized: Optional[bool] = None
    if not witnesses:
        verdict = "no witnesses" if smooth else "no witnesses (singular fan)"
    elif smooth:
        recognized = recognize_projective_space(fan)
        verdict = (
            "witnesses on projective space (equality case)"
            if recognized
            else "VIOLATION: equality-case witness on a smooth fan that is not projective space"
        )
    else:
        verdict = (
            "singular counterexample: equality-case witness on a singular fan; "
            "the projective-space conclusion is not asserted"
        )
    return ScreenResult(
        fan_name=fan.name,
        dimension=n,
        radius=radius,
        smooth=smooth,
        witnesses=tuple(witnesses),
        recognized_projective_space=recognized,
        verdict=verdict,
    )


# -- stability report ------------------------------------------------------------


@dataclass(frozen=True)
class StabilityReport:
    fan_name: str
    dimension: int
    degree: Fraction
    alpha: AlphaResult
    barycenter: RatVec
    battery_radius: int
    profiles: tuple[ValuationProfile, ...]
    toric_divisorial_semistable: bool
    min_beta: Fraction
    min_beta_witness: tuple[int, ...]
    instability_witness: Optional[ScreenWitness]
    strictly_stable_over_toric: bool
    strict_stability_reason: str
    projective_space_screen: ScreenResult
    assumptions: tuple[str, ...]


def analyze(fan: Fan, radius: int = 4) -> StabilityReport:
    """Full stability report over the primitive valuation battery.

    The semistability verdict comes from the exact barycenter identity and
    is cross-checked against the minimum battery beta; disagreement would be
    an internal error and raises.
    """
    poly = fan.anticanonical_polytope()
    barycenter = poly.barycenter()
    battery = valuation_battery(fan, radius)
    profiles = tuple(valuation_profile(val) for val in battery)
    min_profile = min(profiles, key=lambda p: (p.beta, p.w))
    semistable = all(x == 0 for x in barycenter)
    if semistable != (min_profile.beta >= 0) or semistable != all(
        p.beta >= 0 for p in profiles
    ):
        raise AssertionError("barycenter identity and battery betas disagree")
    witness = None
    if not semistable:
        negatives = [p for p in profiles if p.beta < 0]
        cited = min(
            negatives,
            key=lambda p: (max(abs(x) for x in p.w), sum(abs(x) for x in p.w), p.w),
        )
        witness = ScreenWitness(
            cited.w, cited.log_discrepancy, cited.pseff_threshold, cited.beta
        )
    reason = (
        "beta(-w) = -beta(w) exactly for every valuation, so the minimum battery "
        "beta is never positive; toric Fano varieties are at best semistable over "
        "torus-invariant valuations"
    )
    return StabilityReport(
        fan_name=fan.name,
        dimension=fan.dimension,
        degree=fan.degree(),
        alpha=alpha_invariant(fan),
        barycenter=barycenter,
        battery_radius=radius,
        profiles=profiles,
        toric_divisorial_semistable=semistable,
        min_beta=min_profile.beta,
        min_beta_witness=min_profile.w,
        instability_witness=witness,
        strictly_stable_over_toric=False,
        strict_stability_reason=reason,
        projective_space_screen=screen_projective_space(fan, radius),
        assumptions=ASSUMPTION_LEDGER,
    )


# -- serialization -----------------------------------------------------------------


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _piecewise_dict(fn) -> dict:
    return {
        "breakpoints": [rat_str(b) for b in fn.breakpoints],
        "pieces": [[rat_str(c) for c in piece] for piece in fn.pieces],
    }


def _profile_dict(p: ValuationProfile) -> dict:
    return {
        "w": list(p.w),
        "log_discrepancy": rat_str(p.log_discrepancy),
        "pseff_threshold": rat_str(p.pseff_threshold),
        "nef_threshold": rat_str(p.nef_threshold),
        "integrated_volume": rat_str(p.integrated_volume),
        "beta": rat_str(p.beta),
        "center_codim": p.center_codim,
        "primitive": p.is_primitive,
        "volume_fn": _piecewise_dict(p.volume_fn),
        "restricted_volume_fn": _piecewise_dict(p.restricted_volume_fn),
    }


def _witness_dict(w: Optional[ScreenWitness]) -> Optional[dict]:
    if w is None:
        return None
    return {
        "w": list(w.w),
        "log_discrepancy": rat_str(w.log_discrepancy),
        "pseff_threshold": rat_str(w.pseff_threshold),
        "beta": rat_str(w.beta),
    }


def screen_result_dict(s: ScreenResult) -> dict:
    return {
        "fan": s.fan_name,
        "dimension": s.dimension,
        "radius": s.radius,
        "smooth": s.smooth,
        "witnesses": [_witness_dict(w) for w in s.witnesses],
        "recognized_projective_space": s.recognized_projective_space,
        "verdict": s.verdict,
    }


def report_dict(r: StabilityReport) -> dict:
    return {
        "fan": r.fan_name,
        "dimension": r.dimension,
        "degree": rat_str(r.degree),
        "alpha": {
            "alpha": rat_str(r.alpha.alpha),
            "witness_ray_index": r.alpha.witness_ray_index,
            "witness_divisor": [rat_str(d) for d in r.alpha.witness_divisor],
            "witness_m": [rat_str(x) for x in r.alpha.witness_m],
            "ray_thresholds": [rat_str(t) for t in r.alpha.ray_thresholds],
        },
        "barycenter": [rat_str(x) for x in r.barycenter],
        "battery_radius": r.battery_radius,
        "valuations": [_profile_dict(p) for p in r.profiles],
        "verdicts": {
            "toric_divisorial_semistable": r.toric_divisorial_semistable,
            "min_beta": rat_str(r.min_beta),
            "min_beta_witness": list(r.min_beta_witness),
            "instability_witness": _witness_dict(r.instability_witness),
            "strictly_stable_over_toric": r.strictly_stable_over_toric,
            "strict_stability_reason": r.strict_stability_reason,
            "projective_space_screen": screen_result_dict(r.projective_space_screen),
        },
        "assumptions": list(r.assumptions),
    }


def report_json(r: StabilityReport) -> str:
    return json.dumps(report_dict(r), indent=2) + "\n"


# -- CSV export ----------------------------------------------------------------------


def _decimal_12(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 12
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def export_volume_csv(
    fan: Fan, w: Sequence[int], samples: int, stream: TextIO
) -> None:
    """Write `x,vol,Q` rows at evenly spaced rationals on [0, tau].

    Decimal columns carry 12 significant digits for plotting; the trailing
    exact-fraction columns are authoritative.
    """
    if samples < 2:
        raise InvariantViolation("samples must be at least 2")
    val = ToricValuation(fan, tuple(w))
    vol = volume_function(val)
    q_fn = restricted_volume(val)
    tau = vol.breakpoints[-1]
    stream.write("x,vol,Q,x_exact,vol_exact,Q_exact\n")
    for i in range(samples):
        x = tau * Fraction(i, samples - 1)
        vx, qx = vol(x), q_fn(x)
        stream.write(
            f"{_decimal_12(x)},{_decimal_12(vx)},{_decimal_12(qx)},"
            f"{rat_str(x)},{rat_str(vx)},{rat_str(qx)}\n"
        )
