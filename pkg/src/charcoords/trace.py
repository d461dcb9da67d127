"""Exact traces of closed curves from lengths coordinates.

A closed normal curve crosses a cyclic sequence of edges and triangles.
For each crossed triangle, with entering edge e1, exiting edge e2 and
remaining edge e3, attach

    left turn:  [[l(e1), eps(t) l(e3)], [0, l(e2)]]
    right turn: [[l(e2), 0], [eps(t) l(e3), l(e1)]]

Then |trace of the holonomy| equals |trace of the matrix product| divided
by the product of the crossed edge lengths -- an exact rational.

The floating-point holonomy oracle rebuilds the actual holonomy matrix
(up to conjugation and overall sign) from shear-type diagonal factors and
unipotent turn factors; it exists for cross-validation only.

The crossing sequences of the three distinguished curves and of the four
peripheral loops are fixed data, read off the labeled triangulation once;
their turn pattern is alternating for the distinguished curves and all-left
for the peripheral loops (traversed counterclockwise, which makes the
peripheral entry around v1 positive when every triangle sign is +1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ._rat import QQ, TWO
from .coords import LengthsCoord, PairTriple
from .errors import InvalidStep, NotAdmissible, NotClosed
from .surface import (
    AXES,
    PUNCTURES,
    TRIANGLE_EDGES,
    TRIANGLE_EDGE_CYCLES,
    Slope,
    BASE_TRIANGULATION,
    edge,
    edge_triangles,
    farey_path,
)


class TurnStep(NamedTuple):
    enter: tuple
    triangle: int
    exit: tuple
    turn: str  # "L" or "R"
    third: tuple


def make_step(enter, triangle, exit, turn) -> TurnStep:
    enter = edge(*enter)
    exit = edge(*exit)
    tri_edges = TRIANGLE_EDGES[triangle]
    if enter == exit or enter not in tri_edges or exit not in tri_edges:
        raise InvalidStep(f"edges {enter}/{exit} do not cross triangle t{triangle}")
    if turn not in ("L", "R"):
        raise InvalidStep(f"turn must be L or R, got {turn!r}")
    (third,) = [e for e in tri_edges if e != enter and e != exit]
    return TurnStep(enter, triangle, exit, turn, third)


def _cycle_steps(edges, triangles, turns):
    m = len(edges)
    return tuple(
        make_step(edges[i], triangles[i], edges[(i + 1) % m], turns[i])
        for i in range(m)
    )


# Distinguished curve of each color: disjoint from its own pair, crossing
# the other four edges once with alternating turns.
DISTINGUISHED_STEPS = {
    "x": _cycle_steps(
        ((1, 3), (1, 4), (2, 4), (2, 3)), (2, 3, 1, 4), "LRLR"
    ),
    "y": _cycle_steps(
        ((1, 2), (1, 4), (3, 4), (2, 3)), (3, 2, 1, 4), "RLRL"
    ),
    "z": _cycle_steps(
        ((1, 2), (1, 3), (3, 4), (2, 4)), (4, 2, 1, 3), "LRLR"
    ),
}

# Counterclockwise loop around each puncture: all-left through the three
# incident triangles, each left turn stepping one place along the
# triangle's oriented edge cycle.
PERIPHERAL_STEPS = {
    1: _cycle_steps(((1, 2), (1, 3), (1, 4)), (4, 2, 3), "LLL"),
    2: _cycle_steps(((1, 2), (2, 4), (2, 3)), (3, 1, 4), "LLL"),
    3: _cycle_steps(((3, 4), (1, 3), (2, 3)), (2, 4, 1), "LLL"),
    4: _cycle_steps(((2, 4), (1, 4), (3, 4)), (3, 2, 1), "LLL"),
}


@dataclass(frozen=True)
class TraceResult:
    abs_trace: object

    @property
    def klass(self) -> str:
        if self.abs_trace > 2:
            return "Hyperbolic"
        if self.abs_trace == 2:
            return "Parabolic"
        return "Elliptic"

    @property
    def is_hyperbolic(self) -> bool:
        return self.abs_trace > 2


@dataclass(frozen=True)
class Witness:
    """A non-peripheral simple closed curve sent to a non-hyperbolic
    element: its slope (when known), color, and exact |trace|."""

    kind: str  # "Elliptic" or "Parabolic"
    abs_trace: object
    color: str | None = None
    slope: Slope | None = None

    def __post_init__(self):
        expected = "Parabolic" if self.abs_trace == 2 else "Elliptic"
        if self.abs_trace > 2 or self.kind != expected:
            raise ValueError("witness kind inconsistent with its trace")


def turn_matrix(step: TurnStep, c: LengthsCoord):
    """2x2 contribution of one crossed triangle, exact."""
    l1 = c.lam_of(step.enter)
    l2 = c.lam_of(step.exit)
    l3 = c.eps_of(step.triangle) * c.lam_of(step.third)
    if step.turn == "L":
        return (l1, l3, 0, l2)
    return (l2, 0, l3, l1)


def _mat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _check_closed(seq):
    if not seq:
        raise NotClosed("empty crossing sequence")
    m = len(seq)
    for i, step in enumerate(seq):
        if step.exit != seq[(i + 1) % m].enter:
            raise NotClosed(f"step {i} exits {step.exit} but the next enters elsewhere")


def curve_trace(c: LengthsCoord, seq) -> TraceResult:
    """Exact |trace| of the holonomy along a closed crossing sequence."""
    _check_closed(seq)
    prod = (QQ(1), QQ(0), QQ(0), QQ(1))
    denom = QQ(1)
    for step in seq:
        prod = _mat_mul(prod, turn_matrix(step, c))
        denom *= c.lam_of(step.enter)
    tr = prod[0] + prod[3]
    return TraceResult(abs(tr) / denom)


def distinguished_trace(c: LengthsCoord, color: str) -> TraceResult:
    return curve_trace(c, DISTINGUISHED_STEPS[color])


def peripheral_matrix(c: LengthsCoord, v: int):
    """Exact normalized peripheral holonomy around v: always of the form
    ((1, u), (0, 1)); u has the sign of the canonical peripheral entry."""
    seq = PERIPHERAL_STEPS[v]
    prod = (QQ(1), QQ(0), QQ(0), QQ(1))
    denom = QQ(1)
    for step in seq:
        prod = _mat_mul(prod, turn_matrix(step, c))
        denom *= c.lam_of(step.enter)
    return tuple(x / denom for x in prod)


def peripheral_trace(c: LengthsCoord, v: int) -> TraceResult:
    return curve_trace(c, PERIPHERAL_STEPS[v])


# -- closed forms -------------------------------------------------------

def _special_axis(eps) -> str:
    """For a sign assignment with two minus triangles: the axis whose pair
    edges each see two equal-signed triangles."""
    neg = [i for i, s in zip(PUNCTURES, eps) if s < 0]
    if len(neg) != 2:
        raise ValueError("special axis needs exactly two negative triangles")
    from .surface import AXIS_OF_EDGE

    return AXIS_OF_EDGE[edge(*neg)]


def closed_form_distinguished(t: PairTriple, eps, color: str):
    """Closed-form |trace| of a distinguished curve for Euler class +-1 or 0
    sign patterns, as a function of the pair quantities alone.  Serves as an
    independent oracle for the matrix-product engine."""
    x, y, z = t
    k = sum(eps) // 2
    if k in (1, -1):
        by_color = {
            "x": abs(y * y + z * z - x * x) / (y * z),
            "y": abs(x * x + z * z - y * y) / (x * z),
            "z": abs(x * x + y * y - z * z) / (x * y),
        }
        return by_color[color]
    if k == 0:
        s = _special_axis(eps)
        u = t.axis(s)
        others = [a for a in AXES if a != s]
        v, w = (t.axis(a) for a in others)
        sq = x * x + y * y + z * z
        if color == s:
            return abs(sq - 2 * u * (v + w)) / (v * w)
        other = others[0] if color == others[1] else others[1]
        return (sq + 2 * v * w - 2 * u * t.axis(color)) / (u * t.axis(other))
    raise ValueError("closed forms cover Euler class 0 and +-1 only")


# -- slope traces -------------------------------------------------------

def slope_trace(c: LengthsCoord, s: Slope):
    """Trace of the curve of slope s: transport the coordinate along the
    Farey path, then evaluate the distinguished trace of the slope's color.
    An inadmissible switch on the way yields a parabolic witness (the new
    distinguished curve at the failing step has |trace| exactly 2)."""
    from .switches import apply_word

    word = farey_path(s)
    try:
        cur, _ = apply_word(c, word)
    except NotAdmissible as exc:
        tri = BASE_TRIANGULATION
        for axis in word[: exc.step]:
            tri = tri.neighbor(axis)
        bad = tri.neighbor(exc.axis).slope(exc.axis)
        return Witness("Parabolic", TWO, color=exc.axis, slope=bad)
    return distinguished_trace(cur, s.color)


def all_slope_traces(c: LengthsCoord, depth: int):
    """Traces of every slope of Farey depth <= depth, sharing transports
    along the dual tree.  Returns {slope: TraceResult | Witness}."""
    from .switches import simultaneous_switch

    out = {}
    tri = c.tri
    for axis in AXES:
        out[tri.slope(axis)] = distinguished_trace(c, axis)
    frontier = [(c, None)]
    for _ in range(depth):
        nxt = []
        for cur, banned in frontier:
            for axis in AXES:
                if axis == banned:
                    continue
                s = cur.tri.neighbor(axis).slope(axis)
                try:
                    child = simultaneous_switch(cur, axis)
                except NotAdmissible:
                    out.setdefault(s, Witness("Parabolic", TWO, color=axis, slope=s))
                    continue
                if s not in out:
                    out[s] = distinguished_trace(child, axis)
                nxt.append((child, axis))
        frontier = nxt
    return out


# -- floating-point holonomy oracle --------------------------------------

def _shear(c: LengthsCoord, e):
    """Cross-ratio shear at an edge: product of the far side lengths over
    the product of the near side lengths, per the fixed orientation."""
    ta, tb = edge_triangles(e)
    cyc_a = TRIANGLE_EDGE_CYCLES[ta]
    cyc_b = TRIANGLE_EDGE_CYCLES[tb]
    ia = cyc_a.index(e)
    ib = cyc_b.index(e)
    e1 = cyc_a[(ia + 1) % 3]
    e2 = cyc_a[(ia + 2) % 3]
    e3 = cyc_b[(ib + 1) % 3]
    e4 = cyc_b[(ib + 2) % 3]
    return (c.lam_of(e2) * c.lam_of(e4)) / (c.lam_of(e1) * c.lam_of(e3))


def _fmat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def holonomy_oracle(c: LengthsCoord, seq, precision: int | None = None):
    """Floating-point holonomy along a closed crossing sequence, up to
    conjugation and an overall sign: alternating diagonal square-root shear
    factors and unipotent turn factors.

    The square roots are numerical, so this is an independent route to the
    trace; the cancellations between the shear factors can span many orders
    of magnitude, so the working precision adapts to the operand sizes
    unless fixed explicitly.
    """
    import mpmath

    _check_closed(seq)
    shears = [_shear(c, step.enter) for step in seq]
    if precision is None:
        bits = max(
            max(int(s.numerator).bit_length(), int(s.denominator).bit_length())
            for s in shears
        )
        precision = 128 + 2 * bits * len(seq)
    with mpmath.workprec(precision):
        prod = (mpmath.mpf(1), mpmath.mpf(0), mpmath.mpf(0), mpmath.mpf(1))
        for step, shear in zip(seq, shears):
            r = mpmath.sqrt(
                mpmath.mpf(int(shear.numerator)) / mpmath.mpf(int(shear.denominator))
            )
            prod = _fmat_mul(prod, (r, mpmath.mpf(0), mpmath.mpf(0), 1 / r))
            eps = mpmath.mpf(c.eps_of(step.triangle))
            if step.turn == "L":
                prod = _fmat_mul(prod, (mpmath.mpf(1), eps, mpmath.mpf(0), mpmath.mpf(1)))
            else:
                prod = _fmat_mul(prod, (mpmath.mpf(1), mpmath.mpf(0), eps, mpmath.mpf(1)))
        return prod


def parabolic_entry_sign(mat) -> int:
    """Conjugacy-class sign of a (numerically) parabolic matrix: the sign of
    the off-diagonal entry once conjugated to upper-triangular trace-2 form."""
    a, b, c, d = mat
    if a + d < 0:
        a, b, c, d = -a, -b, -c, -d
    if abs(b) >= abs(c):
        return 1 if b > 0 else -1
    return 1 if -c > 0 else -1


# -- dominance -----------------------------------------------------------

@dataclass(frozen=True)
class DominanceRow:
    slope: Slope
    abs_trace: object
    fuchsian_abs_trace: object

    @property
    def holds(self) -> bool:
        return self.abs_trace <= self.fuchsian_abs_trace

    @property
    def strict(self) -> bool:
        return self.abs_trace < self.fuchsian_abs_trace


@dataclass(frozen=True)
class DominanceReport:
    rows: tuple

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.rows)

    @property
    def all_strict(self) -> bool:
        return all(r.strict for r in self.rows)


def dominance_check(c: LengthsCoord, slopes) -> DominanceReport:
    """Compare |trace| slope by slope against the coordinate with the same
    lambda-lengths and all triangle signs +1.  For a non-extremal sign
    pattern every listed curve crosses a negative triangle, so the
    domination must be strict."""
    if abs(c.euler_class()) == 2:
        raise ValueError("dominance comparison needs a non-extremal coordinate")
    plus = LengthsCoord(c.lam, (1, 1, 1, 1), c.tri)
    rows = []
    for s in slopes:
        r = slope_trace(c, s)
        r_plus = slope_trace(plus, s)
        assert isinstance(r_plus, TraceResult), "all-plus transport is always admissible"
        rows.append(DominanceRow(s, r.abs_trace, r_plus.abs_trace))
    return DominanceReport(tuple(rows))
