"""Alpha invariant: values, witnesses, the ray-threshold identity, the gate."""

from fractions import Fraction as F

import pytest

from toricstab.alpha import alpha_invariant, alpha_stability_gate, is_lc_torus_pair
from toricstab.errors import InvariantViolation
from toricstab.lattice import dot
from toricstab.valuations import ToricValuation, beta_invariant, pseff_threshold
from toricstab.workbench import (
    load_builtin_fan,
    parse_fan_spec,
    valuation_battery,
)
from toricstab.corpus import projective_space_spec


def test_alpha_weighted_plane(p123):
    result = alpha_invariant(p123)
    assert result.alpha == F(1, 6)
    assert result.witness_ray_index == 2  # the ray (-2, -3)
    assert result.witness_m == (-1, -1)
    assert result.witness_divisor == (0, 0, 6)
    assert result.ray_thresholds == (3, 2, 6)


def test_alpha_known_values():
    expected = {
        "P1": F(1, 2),
        "P2": F(1, 3),
        "P1xP1": F(1, 2),
        "P(1,2,3)": F(1, 6),
        "dP6": F(1, 2),
    }
    for name, alpha in expected.items():
        assert alpha_invariant(load_builtin_fan(name)).alpha == alpha, name


def test_alpha_projective_spaces_monotone():
    values = []
    for n in range(1, 7):
        fan = parse_fan_spec(projective_space_spec(n))
        result = alpha_invariant(fan)
        assert result.alpha == F(1, n + 1)
        values.append(result.alpha)
    assert values == sorted(values, reverse=True)


def test_alpha_equals_inverse_max_ray_threshold(corpus_fans):
    for fan in corpus_fans:
        result = alpha_invariant(fan)
        thresholds = [
            pseff_threshold(ToricValuation(fan, ray)) for ray in fan.rays
        ]
        assert tuple(thresholds) == result.ray_thresholds
        assert result.alpha == 1 / max(thresholds), fan.name


def test_alpha_witness_validity(corpus_fans):
    for fan in corpus_fans:
        result = alpha_invariant(fan)
        divisor = result.witness_divisor
        assert all(d >= 0 for d in divisor)
        # linear equivalence with the anticanonical class: d_i = 1 + <m, v_i>
        assert divisor == tuple(1 + dot(result.witness_m, ray) for ray in fan.rays)
        assert max(divisor) * result.alpha == 1


def test_is_lc_torus_pair(p123):
    assert is_lc_torus_pair(p123, [0, 0, 0])
    # the extremal divisor 6 D_{(-2,-3)} scaled by alpha: lc exactly at alpha <= 1/6
    assert is_lc_torus_pair(p123, [0, 0, F(6) * F(1, 6)])
    assert not is_lc_torus_pair(p123, [0, 0, F(6) * (F(1, 6) + F(1, 1000))])
    assert not is_lc_torus_pair(p123, [1, 1, F(1001, 1000)])


def test_is_lc_torus_pair_errors(p123):
    with pytest.raises(InvariantViolation, match="not effective"):
        is_lc_torus_pair(p123, [0, 0, F(-1, 2)])
    with pytest.raises(InvariantViolation, match="coefficients"):
        is_lc_torus_pair(p123, [0, 0])


def test_alpha_gate(p2, square, p123, p1):
    assert alpha_stability_gate(p2).verdict == "hypothesis not met"
    assert alpha_stability_gate(square).verdict == "hypothesis not met"
    assert alpha_stability_gate(p123).verdict == "theorem inapplicable (singular)"
    assert alpha_stability_gate(p1).verdict == "theorem inapplicable (n=1)"
    gate = alpha_stability_gate(p2)
    assert gate.alpha == F(1, 3) and gate.threshold == F(2, 3)


def test_high_alpha_forces_nonnegative_beta(corpus_fans):
    """No corpus fan with alpha >= n/(n+1) and n >= 2 carries a negative beta.

    For toric fans with n >= 2 the hypothesis never holds (alpha is at most
    1/2 there), so the check is vacuous but guards the consistency claim.
    """
    for fan in corpus_fans:
        n = fan.dimension
        if n < 2:
            continue
        if alpha_invariant(fan).alpha >= F(n, n + 1):
            radius = 2 if n <= 2 else 1
            assert all(
                beta_invariant(v) >= 0 for v in valuation_battery(fan, radius)
            ), fan.name
