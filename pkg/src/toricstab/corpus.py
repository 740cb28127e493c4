"""Built-in fan corpus: the standard low-dimensional toric Fano test set.

Each entry is a FanSpec-shaped dict (name, dim, rays, cones).  The set
covers projective spaces P^1..P^5, products, the five smooth toric del
Pezzo surfaces, two singular weighted planes, and the weighted-plane
blowup on which the singular equality-case witness lives.
"""

from __future__ import annotations


def projective_space_spec(n: int) -> dict:
    rays = [[1 if i == j else 0 for i in range(n)] for j in range(n)] + [[-1] * n]
    cones = [[j for j in range(n + 1) if j != omit] for omit in range(n + 1)]
    return {"name": f"P{n}", "dim": n, "rays": rays, "cones": cones}


def _square_fan() -> dict:
    return {
        "name": "P1xP1",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]],
        "cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
    }


def _cube_fan() -> dict:
    rays = [
        [1, 0, 0], [0, 1, 0], [0, 0, 1],
        [-1, 0, 0], [0, -1, 0], [0, 0, -1],
    ]
    cones = []
    for sx in (0, 3):
        for sy in (1, 4):
            for sz in (2, 5):
                cones.append([sx, sy, sz])
    return {"name": "P1xP1xP1", "dim": 3, "rays": rays, "cones": cones}


def _del_pezzo_fans() -> list[dict]:
    dp8 = {
        "name": "dP8",  # P^2 blown up in one torus-fixed point
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, -1], [1, 1]],
        "cones": [[0, 3], [3, 1], [1, 2], [2, 0]],
    }
    dp7 = {
        "name": "dP7",  # two points
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, -1], [1, 1], [-1, 0]],
        "cones": [[0, 3], [3, 1], [1, 4], [4, 2], [2, 0]],
    }
    dp6 = {
        "name": "dP6",  # three points: the hexagon
        "dim": 2,
        "rays": [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]],
        "cones": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]],
    }
    return [dp8, dp7, dp6]


def _weighted_planes() -> list[dict]:
    p123 = {
        "name": "P(1,2,3)",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-2, -3]],
        "cones": [[0, 1], [1, 2], [2, 0]],
    }
    p112 = {
        "name": "P(1,1,2)",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, -2]],
        "cones": [[0, 1], [1, 2], [2, 0]],
    }
    blowup = {
        # the smooth-point blowup of P(1,2,3) extracting the ray (-1, 0)
        "name": "Y(1,2,3)",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, 0], [-2, -3]],
        "cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
    }
    return [p123, p112, blowup]


def builtin_fan_specs() -> dict[str, dict]:
    """All built-in fans, keyed by name, in deterministic order."""
    specs = [projective_space_spec(n) for n in range(1, 6)]
    specs.append(_square_fan())
    specs.append(_cube_fan())
    specs.extend(_del_pezzo_fans())
    specs.extend(_weighted_planes())
    return {spec["name"]: spec for spec in specs}


SMOOTH_TORIC_DEL_PEZZO_NAMES = ("P2", "P1xP1", "dP8", "dP7", "dP6")

# the ten fans used by the battery-wide oracle-equivalence suite
ORACLE_BATTERY_NAMES = (
    "P1", "P2", "P3", "P1xP1", "dP8", "dP7", "dP6", "P(1,2,3)", "P(1,1,2)", "Y(1,2,3)",
)
