"""Gravity-to-wrist kinematics.

The wrist is tilted so that the effective gravity vector, expressed in the
hand frame H, points along a chosen planar direction with a chosen scale:

    theta_x = arcsin(alpha) * (-g_hat_y)
    theta_y = arcsin(alpha) * ( g_hat_x)

alpha in [0, 1] scales the gravity magnitude; (g_hat_x, g_hat_y) are the
planar components of the unit effective gravity vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EPS = 1e-9


@dataclass(frozen=True)
class GravitySpec:
    """Desired effective gravity: planar direction components and scale."""

    g_hat_x: float
    g_hat_y: float
    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.g_hat_x**2 + self.g_hat_y**2 > 1.0 + EPS:
            raise ValueError(
                f"planar components exceed unit norm: ({self.g_hat_x}, {self.g_hat_y})"
            )


@dataclass(frozen=True)
class WristTilt:
    """Wrist orientation about the x- and y-axis of the hand frame, radians."""

    theta_x: float
    theta_y: float

    def __post_init__(self):
        limit = math.pi / 2 + EPS
        if abs(self.theta_x) > limit or abs(self.theta_y) > limit:
            raise ValueError(f"tilt angles must lie in [-pi/2, pi/2]: {self}")


@dataclass(frozen=True)
class WiggleSpec:
    """Small wrist oscillation used to break static friction."""

    amplitude_deg: float = 5.0
    frequency_hz: float = 5.0
    duration_s: float = 1.0

    def __post_init__(self):
        if self.amplitude_deg <= 0 or self.frequency_hz <= 0 or self.duration_s <= 0:
            raise ValueError(f"wiggle parameters must be positive: {self}")


def tilt_from_gravity(g: GravitySpec) -> WristTilt:
    s = math.asin(g.alpha)
    return WristTilt(theta_x=s * (-g.g_hat_y), theta_y=s * g.g_hat_x)


def gravity_from_tilt(t: WristTilt) -> GravitySpec:
    """Invert tilt_from_gravity, returning the canonical representative.

    The map is many-to-one: any (alpha, g_hat) with the same arcsin(alpha)
    scaled planar direction gives the same tilt. We return the solution with
    unit planar norm; zero tilt canonically maps to alpha = 0, g_hat = (0, 0).
    """
    s = math.hypot(t.theta_x, t.theta_y)
    if s == 0.0:
        return GravitySpec(0.0, 0.0, 0.0)
    if s > math.pi / 2 + EPS:
        raise ValueError(f"tilt magnitude {s} exceeds pi/2; no alpha in [0, 1] produces it")
    s_clamped = min(s, math.pi / 2)
    return GravitySpec(
        g_hat_x=t.theta_y / s,
        g_hat_y=-t.theta_x / s,
        alpha=math.sin(s_clamped),
    )
