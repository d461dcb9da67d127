"""Certification and reduction algorithms.

Three pipelines, all exact:

* For Euler class 0, the trace reduction loop: switch at the axis carrying
  the unique maximal pair quantity until either the square-root triangle
  inequalities hold (the special-axis curve is then elliptic or parabolic)
  or a switch is inadmissible (the incoming curve is parabolic).  The
  monotone quantity k_n = max(sqrt a - sqrt b - sqrt c, ...) of the
  normalized triple strictly decreases, which forces termination; the audit
  re-verifies this decrease, and the gap bound for special-axis steps, in
  exact arithmetic via dyadic square-root enclosures.

* For Euler class +-1, breadth-first certification over the dual tree to a
  given radius: the anti-triangular inequality is checked at every vertex
  (it propagates through admissible switches), every switch must be
  admissible, and all distinguished traces must exceed 2.  A certificate
  means every simple closed curve within that Farey depth is hyperbolic.

* A Markov-type identity: the signed closed-form traces of the three
  distinguished curves (u, v, w) at Euler class +-1 satisfy
  u^2 + v^2 + w^2 + uvw = 4 identically.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from ._rat import QQ, TWO, to_float
from .coords import (
    LengthsCoord,
    PairTriple,
    SimplexPoint,
    eps_from_negatives,
    simplex_point,
)
from .errors import (
    MaxStepsExceeded,
    NotAdmissible,
    RetryLimitExceeded,
)
from .surface import AXES
from .switches import anti_tri_check, simultaneous_switch, tri_check
from .trace import Witness, distinguished_trace

DEFAULT_MAX_STEPS = 10**6


# -- trace reduction ------------------------------------------------------

@dataclass(frozen=True)
class ReductionLogEntry:
    n: int
    axis: str | None  # switch performed at this step; None on stop entries
    triple: PairTriple
    simplex: SimplexPoint
    k: float  # logging only; the audit re-derives comparisons exactly
    case: str  # Case1 / Case2 / Stop-tri / Stop-inadmissible


def _k_float(sp: SimplexPoint) -> float:
    ra, rb, rc = (math.sqrt(to_float(v)) for v in sp)
    return max(ra - rb - rc, rb - ra - rc, rc - ra - rb)


def _special_axis_of(c: LengthsCoord) -> str:
    neg = [i for i, s in zip((1, 2, 3, 4), c.eps) if s < 0]
    from .surface import AXIS_OF_EDGE, edge

    return AXIS_OF_EDGE[edge(*neg)]


def trace_reduction(c: LengthsCoord, max_steps: int | None = None):
    """Run the reduction loop on an Euler class 0, type-preserving
    coordinate.  Returns (witness, log)."""
    if c.euler_class() != 0:
        raise ValueError("trace reduction requires relative Euler class 0")
    c.puncture_signs()  # raises NotTypePreserving on a vanishing entry
    limit = DEFAULT_MAX_STEPS if max_steps is None else max_steps
    special = _special_axis_of(c)
    log = []
    cur = c
    for n in range(limit + 1):
        triple = cur.pair_quantities()
        sp = simplex_point(triple)
        k = _k_float(sp)
        if tri_check(triple):
            log.append(ReductionLogEntry(n, None, triple, sp, k, "Stop-tri"))
            res = distinguished_trace(cur, special)
            kind = "Parabolic" if res.abs_trace == 2 else "Elliptic"
            witness = Witness(
                kind, res.abs_trace, color=special, slope=cur.tri.slope(special)
            )
            return witness, tuple(log)
        vals = {a: triple.axis(a) for a in AXES}
        top = max(vals.values())
        top_axes = [a for a in AXES if vals[a] == top]
        if len(top_axes) != 1:
            # a tie forces the square-root triangle inequalities, so this
            # point is unreachable; treat defensively as a stop.
            log.append(ReductionLogEntry(n, None, triple, sp, k, "Stop-tri"))
            res = distinguished_trace(cur, special)
            kind = "Parabolic" if res.abs_trace == 2 else "Elliptic"
            return (
                Witness(kind, res.abs_trace, color=special,
                        slope=cur.tri.slope(special)),
                tuple(log),
            )
        axis = top_axes[0]
        case = "Case1" if axis == special else "Case2"
        try:
            nxt = simultaneous_switch(cur, axis)
        except NotAdmissible:
            log.append(
                ReductionLogEntry(n, axis, triple, sp, k, "Stop-inadmissible")
            )
            bad = cur.tri.neighbor(axis).slope(axis)
            return Witness("Parabolic", TWO, color=axis, slope=bad), tuple(log)
        log.append(ReductionLogEntry(n, axis, triple, sp, k, case))
        cur = nxt
    raise MaxStepsExceeded(f"reduction did not stop within {limit} steps")


# -- exact audit of the reduction log -------------------------------------

def _sqrt_bounds(r, bits: int):
    """Dyadic enclosure of sqrt(r) for a nonnegative rational r: returns
    (lo, hi) as Fractions with denominator 2**bits and hi - lo <= 2/2**bits."""
    num = int(r.numerator) << (2 * bits)
    den = int(r.denominator)
    s = math.isqrt(num // den)
    scale = 1 << bits
    return Fraction(s, scale), Fraction(s + 2, scale)


def _k_bounds(sp: SimplexPoint, bits: int):
    """Enclosure of max(sqrt a - sqrt b - sqrt c, ...) over the simplex point."""
    bnds = [_sqrt_bounds(v, bits) for v in sp]
    lo = hi = None
    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        t_lo = bnds[i][0] - bnds[j][1] - bnds[k][1]
        t_hi = bnds[i][1] - bnds[j][0] - bnds[k][0]
        lo = t_lo if lo is None else max(lo, t_lo)
        hi = t_hi if hi is None else max(hi, t_hi)
    return lo, hi


def reduction_monotonicity_audit(log, start_bits: int = 256, max_bits: int = 4096):
    """Exact audit: k strictly decreases step to step, and on special-axis
    (Case1) steps the drop exceeds twice the smallest simplex coordinate.
    Returns (ok, offending_step)."""
    entries = [e for e in log]
    for i in range(len(entries) - 1):
        cur, nxt = entries[i], entries[i + 1]
        if cur.case.startswith("Stop"):
            continue
        gap_needed = (
            2 * Fraction(int(min(cur.simplex).numerator),
                         int(min(cur.simplex).denominator))
            if cur.case == "Case1"
            else Fraction(0)
        )
        bits = start_bits
        while True:
            lo_cur, hi_cur = _k_bounds(cur.simplex, bits)
            lo_nxt, hi_nxt = _k_bounds(nxt.simplex, bits)
            if lo_cur - hi_nxt > gap_needed:
                break  # decrease (and gap bound) certified
            if hi_cur - lo_nxt <= gap_needed:
                return False, i  # certified violation
            if bits >= max_bits:
                return False, i  # could not separate; fail honestly
            bits *= 2
    return True, None


# -- hyperbolicity certification ------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Exhaustive exact check to a given Farey depth: every visited
    triangulation was admissible with the anti-triangular inequality
    holding, and every distinguished trace exceeded 2."""

    depth: int
    visited: int
    min_trace: object
    base_anti_tri: bool = True

    @property
    def ok(self) -> bool:
        return True


@dataclass(frozen=True)
class CertificationFailure:
    witness: Witness

    @property
    def ok(self) -> bool:
        return False


def _non_hyperbolic_witness(c: LengthsCoord) -> Witness:
    for axis in AXES:
        res = distinguished_trace(c, axis)
        if res.abs_trace <= 2:
            kind = "Parabolic" if res.abs_trace == 2 else "Elliptic"
            return Witness(kind, res.abs_trace, color=axis,
                           slope=c.tri.slope(axis))
    raise AssertionError("no witness among the distinguished curves")


def certify_hyperbolic(c: LengthsCoord, depth: int, banned_axis: str | None = None):
    """Certify that every simple closed curve of Farey depth <= depth is
    hyperbolic, for a type-preserving coordinate of Euler class +-1.
    Returns a Certificate, or a CertificationFailure carrying the witness.

    ``banned_axis`` excludes one direction at the root (used when splitting
    the tree into subtrees for parallel work)."""
    if c.euler_class() not in (1, -1):
        raise ValueError("certification requires relative Euler class +-1")
    c.puncture_signs()
    if not anti_tri_check(c.pair_quantities()):
        return CertificationFailure(_non_hyperbolic_witness(c))

    visited = 0
    min_trace = None
    stack = [(c, banned_axis, depth)]
    while stack:
        cur, banned, remaining = stack.pop()
        visited += 1
        for axis in AXES:
            res = distinguished_trace(cur, axis)
            if min_trace is None or res.abs_trace < min_trace:
                min_trace = res.abs_trace
            if res.abs_trace <= 2:
                kind = "Parabolic" if res.abs_trace == 2 else "Elliptic"
                return CertificationFailure(
                    Witness(kind, res.abs_trace, color=axis,
                            slope=cur.tri.slope(axis))
                )
        if remaining == 0:
            continue
        for axis in AXES:
            if axis == banned:
                continue
            try:
                child = simultaneous_switch(cur, axis)
            except NotAdmissible:
                bad = cur.tri.neighbor(axis).slope(axis)
                return CertificationFailure(
                    Witness("Parabolic", TWO, color=axis, slope=bad)
                )
            if not anti_tri_check(child.pair_quantities()):
                from .errors import InternalInconsistency

                raise InternalInconsistency(
                    "anti-triangular inequality lost across an admissible switch"
                )
            stack.append((child, axis, remaining - 1))
    return Certificate(depth, visited, min_trace)


# -- random certified coordinates ------------------------------------------

def _random_rational(rng: random.Random, bound: int = 2**16):
    return QQ(rng.randint(1, bound), rng.randint(1, bound))


def sample_counterexample(
    seed: int,
    depth: int,
    retry_limit: int = 100,
    bound: int = 2**16,
):
    """Draw pair quantities with one strict anti-triangular inequality (a
    random positive margin keeps boundaries away), embed them as a rational
    witness with one negative triangle, and certify to the given depth.
    Retries on failure; the failing set has measure zero."""
    rng = random.Random(seed)
    for _ in range(retry_limit):
        small1 = _random_rational(rng, bound)
        small2 = _random_rational(rng, bound)
        margin = _random_rational(rng, bound)
        big = small1 + small2 + margin
        vals = [big, small1, small2]
        rng.shuffle(vals)
        x, y, z = vals
        coord = LengthsCoord.from_pair_triple(x, y, z, eps_from_negatives({1}))
        result = certify_hyperbolic(coord, depth)
        if isinstance(result, Certificate):
            return coord, result
    raise RetryLimitExceeded(f"no certifiable coordinate in {retry_limit} draws")


# -- Markov-type identity ----------------------------------------------------

def signed_distinguished_traces(c: LengthsCoord):
    """Signed closed-form traces (no absolute values) of the three
    distinguished curves at Euler class +-1, from the pair quantities."""
    if c.euler_class() not in (1, -1):
        raise ValueError("signed traces are defined for Euler class +-1")
    x, y, z = c.pair_quantities()
    return (
        (y * y + z * z - x * x) / (y * z),
        (x * x + z * z - y * y) / (x * z),
        (x * x + y * y - z * z) / (x * y),
    )


def markov_residual(c: LengthsCoord):
    """u^2 + v^2 + w^2 + u v w - 4 over the signed distinguished traces;
    identically zero on Euler class +-1 coordinates."""
    c.puncture_signs()
    u, v, w = signed_distinguished_traces(c)
    return u * u + v * v + w * w + u * v * w - 4
