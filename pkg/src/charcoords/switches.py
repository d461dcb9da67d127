"""Diagonal switches on lengths coordinates.

A diagonal switch at an edge e replaces it with the other diagonal e' of
the quadrilateral formed by the two adjacent ideal triangles.  With sides
labeled so that e1 is adjacent to t1 and t1', e2 to t1 and t2', e3 to t2
and t2', e4 to t2 and t1' (e1 opposite e3, e2 opposite e4):

* equal signs on t1, t2: the new edge always exists and
  l(e') = (l(e1) l(e3) + l(e2) l(e4)) / l(e); both new triangles inherit
  the common sign;
* opposite signs: the new edge exists iff l(e1) l(e3) != l(e2) l(e4), and
  l(e') = |l(e1) l(e3) - l(e2) l(e4)| / l(e); the signs of the triangles
  adjacent to the shorter pair of opposite sides do not move.

A simultaneous switch performs this at both edges of an opposite pair; the
two quadrilaterals are disjoint, so the flips commute.  Everything here is
exact rational arithmetic; the inadmissible case is reported as a
``NotAdmissible`` value for callers to convert into a parabolic witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coords import LengthsCoord, PairTriple
from .errors import NotAdmissible
from .surface import EDGES, PAIRS, edge, edge_triangles


@dataclass(frozen=True)
class QuadState:
    """Quadrilateral data around the switched edge, in the side labeling
    described in the module docstring."""

    lam_e: object
    lam_e1: object
    lam_e2: object
    lam_e3: object
    lam_e4: object
    eps_t1: int
    eps_t2: int

    def __post_init__(self):
        if any(
            v <= 0
            for v in (self.lam_e, self.lam_e1, self.lam_e2, self.lam_e3, self.lam_e4)
        ):
            raise ValueError("lambda-lengths must be positive")


@dataclass(frozen=True)
class SwitchOutcome:
    lam_new: object
    eps_t1: int  # sign of t1' (adjacent to e1 and e4)
    eps_t2: int  # sign of t2' (adjacent to e2 and e3)


def diagonal_switch(q: QuadState) -> SwitchOutcome:
    """Apply one diagonal switch; raises NotAdmissible when the opposite
    side products tie across a sign change."""
    p13 = q.lam_e1 * q.lam_e3
    p24 = q.lam_e2 * q.lam_e4
    if q.eps_t1 == q.eps_t2:
        return SwitchOutcome((p13 + p24) / q.lam_e, q.eps_t1, q.eps_t1)
    if p13 == p24:
        raise NotAdmissible()
    if p13 < p24:
        return SwitchOutcome((p24 - p13) / q.lam_e, q.eps_t1, q.eps_t2)
    return SwitchOutcome((p13 - p24) / q.lam_e, q.eps_t2, q.eps_t1)


def _flip_at(c: LengthsCoord, d):
    """Flip the single diagonal d = (a, b).  Returns the new edge key, its
    lambda-length and the signs of the two new triangles keyed by label.

    The adjacent triangles are t_k and t_l where {k, l} are the punctures
    off d; the quadrilateral sides are e1 = (a, l), e2 = (b, l),
    e3 = (b, k), e4 = (a, k), and the new triangles avoid b and a
    respectively (so they become the relabeled t_b and t_a).
    """
    a, b = d
    k, l = edge_triangles(d)
    out = diagonal_switch(
        QuadState(
            c.lam_of(d),
            c.lam_of(edge(a, l)),
            c.lam_of(edge(b, l)),
            c.lam_of(edge(b, k)),
            c.lam_of(edge(a, k)),
            c.eps_of(k),
            c.eps_of(l),
        )
    )
    return edge(k, l), out.lam_new, {b: out.eps_t1, a: out.eps_t2}


def simultaneous_switch(c: LengthsCoord, axis: str) -> LengthsCoord:
    """Switch both edges of the opposite pair on the given axis, relabeling
    so t_i again avoids v_i.  The relative Euler class is preserved."""
    d1, d2 = PAIRS[axis]
    try:
        new1, lam1, signs1 = _flip_at(c, d1)
        new2, lam2, signs2 = _flip_at(c, d2)
    except NotAdmissible as exc:
        raise NotAdmissible(axis=axis) from exc
    lam = dict(zip(EDGES, c.lam))
    lam[new1] = lam1
    lam[new2] = lam2
    eps = {**signs1, **signs2}
    return LengthsCoord(
        tuple(lam[e] for e in EDGES),
        tuple(eps[i] for i in (1, 2, 3, 4)),
        c.tri.neighbor(axis),
    )


def apply_word(c: LengthsCoord, word):
    """Left fold of simultaneous switches.  Returns the final coordinate
    and the pair triples after each letter; NotAdmissible failures carry
    the letter index."""
    trace = []
    cur = c
    for i, axis in enumerate(word):
        try:
            cur = simultaneous_switch(cur, axis)
        except NotAdmissible as exc:
            raise NotAdmissible(axis=axis, step=i) from exc
        trace.append(cur.pair_quantities())
    return cur, tuple(trace)


def pair_trace_rows(word, triples) -> list:
    """CSV rows (step, axis, x, y, z) for the intermediate pair triples
    returned by apply_word, with exact "p/q" entries."""
    from ._rat import rat_str

    rows = ["step,axis,x,y,z"]
    for i, (axis, t) in enumerate(zip(word, triples), start=1):
        rows.append(f"{i},{axis},{rat_str(t.x)},{rat_str(t.y)},{rat_str(t.z)}")
    return rows


def anti_tri_check(t: PairTriple) -> bool:
    """One strict anti-triangular inequality holds among (x, y, z)."""
    x, y, z = t
    return x > y + z or y > x + z or z > x + y


def _sqrt_le_sum(a, b, c) -> bool:
    # sqrt(a) <= sqrt(b) + sqrt(c), decided by squaring.
    if a <= b + c:
        return True
    return (a - b - c) ** 2 <= 4 * b * c


def tri_check(t: PairTriple) -> bool:
    """Triangle inequalities for the square roots of (x, y, z), decided
    exactly by the squaring equivalence."""
    x, y, z = t
    return (
        _sqrt_le_sum(x, y, z)
        and _sqrt_le_sum(y, x, z)
        and _sqrt_le_sum(z, x, y)
    )
