"""Twist dynamics on coordinate charts.

On the Euler class 0 components, normalize the special pair quantity to 1
and use (b, c) as a chart; the two switches fixing the special axis act by

    b -> (1 - c)^2 / b,      c -> (1 - b)^2 / c,

and their composite (the twist along the special-axis curve) preserves the
conics (b + c - 1)^2 = (k + 2) b c.  The composite conjugated by the
special-axis switch preserves the quartics (b + c)^2 (b + c - 1)^2 =
(k + 2) b c.

On the Euler class +-1 components, the four chambers with one negative
triangle embed into a single signed chart by attaching signs to (y/x, z/x);
in those signed coordinates the twist along the x-colored curve is

    b -> (c^2 - 1) / b,      c -> (b'^2 - 1) / c,

and preserves b^2 + c^2 - 1 = k b c.  A mirror chart does the same for the
y-colored twist.  On each invariant conic the twist acts as a rigid
rotation after an affine normalization; the rotation number is estimated in
floating point with exact-rational period detection first.

Finally, (s, t) -> [sinh|s|, sinh|t|, sinh|s+t|] is a two-fold covering of
the anti-triangular chambers intertwining the linear action of the mod-2
congruence subgroup with the twist transports, and the invariant volume of
the twist action has density 1/(uv) in the chart (u, v) = (b/a, c/a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._rat import QQ, to_float
from .coords import LengthsCoord, SimplexPoint, eps_from_negatives
from .errors import DegenerateOrbit, NotAdmissible, OffDomain
from .switches import simultaneous_switch

_E0_AXES = ("x", "y", "z")


@dataclass(frozen=True)
class ChartPointE0:
    """Point (1, b, c) of the Euler class 0 chart; b + c != 1 on the
    type-preserving locus."""

    b: object
    c: object

    def __post_init__(self):
        if self.b <= 0 or self.c <= 0:
            raise ValueError("chart coordinates must be positive")
        if self.b + self.c == 1:
            raise ValueError("b + c = 1 is not type-preserving")


@dataclass(frozen=True)
class ChartPointE1:
    """Signed chart point for the Euler class +-1 components; the sign
    pattern of (b, c) records which one-negative-triangle chamber the
    underlying triple (1, |b|, |c|) occupies: (+,+), (-,-), (-,+), (+,-)
    for the chamber with negative triangle t1, t2, t3, t4 respectively."""

    b: object
    c: object

    def __post_init__(self):
        if self.b == 0 or self.c == 0:
            raise ValueError("signed chart coordinates must be nonzero")


_SHEET_BY_SIGNS = {(1, 1): 1, (-1, -1): 2, (-1, 1): 3, (1, -1): 4}
_SIGNS_BY_SHEET = {v: k for k, v in _SHEET_BY_SIGNS.items()}


# -- Euler class 0 -------------------------------------------------------

def chart_switch_e0(p: ChartPointE0, axis: str) -> ChartPointE0:
    """One simultaneous switch in the chart with the special axis first:
    the special-axis switch rescales, the other two act on one coordinate."""
    b, c = p.b, p.c
    if axis == "x":
        s = (b + c) ** 2
        return ChartPointE0(b / s, c / s)
    if axis == "y":
        if c == 1:
            raise DegenerateOrbit("b-step hit the parabolic locus")
        return ChartPointE0((1 - c) ** 2 / b, c)
    if b == 1:
        raise DegenerateOrbit("c-step hit the parabolic locus")
    return ChartPointE0(b, (1 - b) ** 2 / c)


def dx_map_e0(p: ChartPointE0) -> ChartPointE0:
    """Twist along the special-axis curve: the b-step then the c-step."""
    return chart_switch_e0(chart_switch_e0(p, "y"), "z")


def dydz_map_e0(p: ChartPointE0) -> ChartPointE0:
    """The composite preserving the quartic family: conjugate the twist by
    the special-axis switch."""
    for axis in ("x", "y", "z", "x"):
        p = chart_switch_e0(p, axis)
    return p


def conic_k_e0(p: ChartPointE0):
    return (p.b + p.c - 1) ** 2 / (p.b * p.c) - 2


def quartic_k_e0(p: ChartPointE0):
    return (p.b + p.c) ** 2 * (p.b + p.c - 1) ** 2 / (p.b * p.c) - 2


# -- Euler class +-1 -----------------------------------------------------

def dx_map_e1(p: ChartPointE1) -> ChartPointE1:
    """Signed form of the x-colored twist on the one-negative chambers."""
    b1_num = p.c * p.c - 1
    if b1_num == 0:
        raise DegenerateOrbit("b-step hit the parabolic locus")
    b1 = b1_num / p.b
    c1_num = b1 * b1 - 1
    if c1_num == 0:
        raise DegenerateOrbit("c-step hit the parabolic locus")
    return ChartPointE1(b1, c1_num / p.c)


def conic_k_e1(p: ChartPointE1):
    return (p.b * p.b + p.c * p.c - 1) / (p.b * p.c)


def dy_map_e1(p: ChartPointE1) -> ChartPointE1:
    """Mirror twist in the chart normalizing the y pair quantity; same
    algebra with the roles of the axes exchanged."""
    return dx_map_e1(p)


def conic_k_y_e1(p: ChartPointE1):
    return conic_k_e1(p)


def sheet_of(p: ChartPointE1) -> int:
    return _SHEET_BY_SIGNS[(1 if p.b > 0 else -1, 1 if p.c > 0 else -1)]


def chart_point_from_signs(b_abs, c_abs, sheet: int) -> ChartPointE1:
    sb, sc = _SIGNS_BY_SHEET[sheet]
    return ChartPointE1(sb * b_abs, sc * c_abs)


def dx_map_e1_via_switches(p: ChartPointE1) -> ChartPointE1:
    """Transport the underlying coordinate with the switch engine (the
    y-axis switch then the z-axis switch) and re-read the signed chart.
    Agrees with dx_map_e1 exactly; DegenerateOrbit on the parabolic locus."""
    sheet = sheet_of(p)
    coord = LengthsCoord.from_pair_triple(
        QQ(1), abs(p.b), abs(p.c), eps_from_negatives({sheet})
    )
    try:
        coord = simultaneous_switch(coord, "y")
        coord = simultaneous_switch(coord, "z")
    except NotAdmissible as exc:
        raise DegenerateOrbit("switch transport hit the parabolic locus") from exc
    x, y, z = coord.pair_quantities()
    neg = [i for i, s in zip((1, 2, 3, 4), coord.eps) if s < 0]
    if len(neg) != 1:
        raise DegenerateOrbit("transport left the one-negative chambers")
    return chart_point_from_signs(y / x, z / x, neg[0])


# -- rotation numbers -----------------------------------------------------

def _circle_angle_e1(p: ChartPointE1, k) -> float:
    scale = max(abs(p.b), abs(p.c))
    b = to_float(p.b / scale)
    c = to_float(p.c / scale)
    kf = to_float(k)
    u = b - kf * c / 2.0
    v = c * math.sqrt(1.0 - kf * kf / 4.0)
    return math.atan2(v, u)


def _circle_angle_e0(p: ChartPointE0, k) -> float:
    kf = to_float(k)
    b0 = 2.0 / (2.0 - kf)
    b = to_float(p.b) - b0
    c = to_float(p.c) - b0
    u = b - kf * c / 2.0
    v = c * math.sqrt(1.0 - kf * kf / 4.0)
    return math.atan2(v, u)


def rotation_profile(family: str, k, start, n_iters: int):
    """Iterate the twist map on its invariant conic, tracking the angular
    increments of the affinely normalized orbit.  Returns (rotation number,
    increments, exact period or None).  Exact rational periodicity is
    detected first and yields an exact m/p rotation number."""
    if family == "e0":
        step, angle, conic = dx_map_e0, _circle_angle_e0, conic_k_e0
    elif family == "e1":
        step, angle, conic = dx_map_e1, _circle_angle_e1, conic_k_e1
    else:
        raise ValueError("family must be 'e0' or 'e1'")
    if not -2 < k < 2:
        raise ValueError("rotation numbers need k strictly between -2 and 2")
    if conic(start) != k:
        raise ValueError("start point is not on the requested conic")
    two_pi = 2.0 * math.pi
    increments = []
    prev_angle = angle(start, k)
    total = 0.0
    p = start
    for n in range(1, n_iters + 1):
        p = step(p)
        a = angle(p, k)
        inc = (a - prev_angle) % two_pi
        increments.append(inc)
        total += inc
        prev_angle = a
        if p == start:
            m = round(total / two_pi)
            return m / n, increments, n
    return (total / len(increments)) / two_pi, increments, None


def rotation_number(family: str, k, start, n_iters: int, tol: float = 1e-9) -> float:
    """Rotation number of the twist on its conic; asserts the angular
    increments are constant within ``tol`` (they are a single rigid
    rotation angle after the affine normalization)."""
    rot, increments, period = rotation_profile(family, k, start, n_iters)
    if increments:
        lo, hi = min(increments), max(increments)
        if hi - lo > tol:
            raise AssertionError(
                f"angular increments varied by {hi - lo:.3e} (> {tol:.1e})"
            )
    return rot


# -- covering map and invariant density ------------------------------------

def psi_cover(s: float, t: float):
    """Two-fold covering of the anti-triangular chambers: the normalized
    triple of (sinh|s|, sinh|t|, sinh|s+t|).  Undefined when s, t or s + t
    vanishes."""
    if s == 0.0 or t == 0.0 or s + t == 0.0:
        raise OffDomain("need s != 0, t != 0, s + t != 0")
    a = math.sinh(abs(s))
    b = math.sinh(abs(t))
    c = math.sinh(abs(s + t))
    total = a + b + c
    return (a / total, b / total, c / total)


# Congruence-subgroup generators and the switch words transporting the
# simplex triple so that the covering map intertwines the two actions.
GAMMA2_GENERATORS = {
    "DX": ((1, 0), (2, 1)),
    "DY": ((1, 2), (0, 1)),
}

TWIST_TRIPLE_TRANSPORT = {
    "DX": ("y", "z"),
    "DY": ("x", "z"),
}


def _switch_triple_e1_float(triple, axis: str):
    a, b, c = triple
    if axis == "x":
        out = (abs(b * b - c * c) / a, b, c)
    elif axis == "y":
        out = (a, abs(c * c - a * a) / b, c)
    else:
        out = (a, b, abs(a * a - b * b) / c)
    total = sum(out)
    return tuple(v / total for v in out)


def twist_triple_transport(triple, gen: str):
    """Transport of a positive simplex triple under the twist named by a
    congruence-subgroup generator, in floating point."""
    for axis in TWIST_TRIPLE_TRANSPORT[gen]:
        triple = _switch_triple_e1_float(triple, axis)
    return triple


def psi_equivariance_residual(s: float, t: float, gen: str) -> float:
    """Max componentwise gap between covering-then-transport and
    acting-linearly-then-covering, for one generator."""
    (a11, a12), (a21, a22) = GAMMA2_GENERATORS[gen]
    s2 = a11 * s + a12 * t
    t2 = a21 * s + a22 * t
    lhs = psi_cover(s2, t2)
    rhs = twist_triple_transport(psi_cover(s, t), gen)
    return max(abs(u - v) for u, v in zip(lhs, rhs))


def wp_density(p: SimplexPoint):
    """Density of the invariant symplectic volume against Lebesgue measure
    in the chart (u, v) = (b/a, c/a): equals 1/(uv)."""
    a, b, c = p
    if a <= 0 or b <= 0 or c <= 0:
        raise ValueError("need an interior simplex point")
    return (a * a) / (b * c)
