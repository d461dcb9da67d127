"""Lengths coordinates on the decorated character space.

A point is a positive lambda-length on each of the six edges of a
tetrahedral triangulation together with a sign for each ideal triangle.
The relative Euler class is half the sign sum.  The opposite-pair products

    x = l(e12) l(e34),   y = l(e13) l(e24),   z = l(e14) l(e23)

drive everything downstream: peripheral holonomy entries, traces of the
distinguished curves, and the switch recursions.  Rescaling by a positive
weight at each puncture (the decoration action) multiplies l(e_ij) by
mu_i mu_j; it scales (x, y, z) by a common factor and changes nothing
observable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ._rat import QQ, ZERO, parse_rat, rat_str
from .errors import InternalInconsistency, NotTypePreserving
from .surface import (
    AXES,
    AXIS_OF_EDGE,
    BASE_TRIANGULATION,
    EDGES,
    PAIRS,
    PUNCTURES,
    TetraTriangulation,
    edge,
    edge_label,
    parse_edge_label,
)


class PairTriple(NamedTuple):
    x: object
    y: object
    z: object

    def axis(self, a):
        return self[AXES.index(a)]

    def simplex(self) -> SimplexPoint:
        return simplex_point(self)


class SimplexPoint(NamedTuple):
    a: object
    b: object
    c: object


def simplex_point(t) -> SimplexPoint:
    """Projectivize a positive triple onto the simplex a + b + c = 1."""
    x, y, z = t
    s = x + y + z
    return SimplexPoint(x / s, y / s, z / s)


def eps_from_negatives(negatives) -> tuple:
    """Sign assignment with -1 exactly on the given triangle labels."""
    neg = set(negatives)
    return tuple(-1 if i in neg else 1 for i in PUNCTURES)


@dataclass(frozen=True)
class LengthsCoord:
    """Exact lengths coordinate: six positive rationals and four signs.

    ``lam`` is stored in the fixed edge order e12, e13, e14, e23, e24, e34
    and ``eps`` in triangle order t1..t4.  ``tri`` records the position in
    the dual tree (defaults to the base triangulation).
    """

    lam: tuple
    eps: tuple
    tri: TetraTriangulation = BASE_TRIANGULATION

    def __post_init__(self):
        if len(self.lam) != 6 or any(v <= 0 for v in self.lam):
            raise ValueError("need six positive lambda-lengths")
        if len(self.eps) != 4 or any(s not in (1, -1) for s in self.eps):
            raise ValueError("need four signs +-1")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_maps(cls, lam, eps, tri=BASE_TRIANGULATION) -> LengthsCoord:
        return cls(
            tuple(QQ(lam[e]) for e in EDGES),
            tuple(int(eps[i]) for i in PUNCTURES),
            tri,
        )

    @classmethod
    def from_pair_triple(cls, x, y, z, eps, tri=BASE_TRIANGULATION) -> LengthsCoord:
        """Rational witness with the given pair quantities: the x, y, z
        values sit on e12, e13, e14 and the opposite edges get length 1."""
        lam = {
            (1, 2): QQ(x), (3, 4): QQ(1),
            (1, 3): QQ(y), (2, 4): QQ(1),
            (1, 4): QQ(z), (2, 3): QQ(1),
        }
        return cls(tuple(lam[e] for e in EDGES), tuple(eps), tri)

    # -- accessors ------------------------------------------------------

    def lam_of(self, e) -> object:
        return self.lam[EDGES.index(edge(*e))]

    def eps_of(self, i) -> int:
        return self.eps[i - 1]

    def lam_map(self) -> dict:
        return dict(zip(EDGES, self.lam))

    # -- derived quantities ----------------------------------------------

    def pair_quantities(self) -> PairTriple:
        vals = []
        for a in AXES:
            d1, d2 = PAIRS[a]
            vals.append(self.lam_of(d1) * self.lam_of(d2))
        return PairTriple(*vals)

    def euler_class(self) -> int:
        return sum(self.eps) // 2

    def rescale(self, mu) -> LengthsCoord:
        """Decoration action: multiply l(e_ij) by mu[i] mu[j]."""
        weights = {i: QQ(mu[i]) for i in PUNCTURES}
        if any(w <= 0 for w in weights.values()):
            raise ValueError("rescaling weights must be positive")
        lam = tuple(
            v * weights[e[0]] * weights[e[1]] for v, e in zip(self.lam, EDGES)
        )
        return LengthsCoord(lam, self.eps, self.tri)

    def peripheral_entry(self, v: int) -> object:
        """Off-diagonal entry of the upper-triangular peripheral holonomy
        around v, in its canonical normalization: the signed sum, over the
        three triangles at v, of the pair quantity of the opposite-edge pair
        through v and that triangle's label."""
        q = self.pair_quantities()
        total = ZERO
        for j in PUNCTURES:
            if j != v:
                total += self.eps_of(j) * q.axis(AXIS_OF_EDGE[edge(v, j)])
        return total

    def puncture_signs(self) -> dict:
        signs = {}
        for v in PUNCTURES:
            u = self.peripheral_entry(v)
            if u == 0:
                raise NotTypePreserving(v)
            signs[v] = 1 if u > 0 else -1
        return signs

    def classify_component(self) -> ComponentLabel:
        return classify_component(self)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "lambda": {edge_label(e): rat_str(v) for e, v in zip(EDGES, self.lam)},
            "eps": {f"t{i}": s for i, s in zip(PUNCTURES, self.eps)},
        }

    @classmethod
    def from_json_dict(cls, doc) -> LengthsCoord:
        lam = {parse_edge_label(k): parse_rat(v) for k, v in doc["lambda"].items()}
        eps = {int(k[1]): int(v) for k, v in doc["eps"].items()}
        if set(lam) != set(EDGES) or set(eps) != set(PUNCTURES):
            raise ValueError("coordinate document must cover e12..e34 and t1..t4")
        if any(v <= 0 for v in lam.values()):
            raise ValueError("lambda-lengths must be positive")
        return cls.from_maps(lam, eps)


def euler_class(c: LengthsCoord) -> int:
    return c.euler_class()


def pair_quantities(c: LengthsCoord) -> PairTriple:
    return c.pair_quantities()


def rescale(c: LengthsCoord, mu) -> LengthsCoord:
    return c.rescale(mu)


def peripheral_entry(c: LengthsCoord, v: int):
    return c.peripheral_entry(v)


def puncture_signs(c: LengthsCoord) -> dict:
    return c.puncture_signs()


@dataclass(frozen=True)
class ComponentLabel:
    """Connected component of the character space: relative Euler class
    plus the puncture sign vector."""

    euler: int
    signs: tuple  # signs at v1..v4, each +-1

    @property
    def name(self) -> str:
        k = self.euler
        minus = [i for i, s in zip(PUNCTURES, self.signs) if s < 0]
        plus = [i for i, s in zip(PUNCTURES, self.signs) if s > 0]
        if k >= 0:
            tag = "+" if not minus else "".join(str(i) for i in minus)
        else:
            tag = "-" if not plus else "-" + "".join(str(i) for i in plus)
        return f"M{k}_s{tag}"

    @property
    def sign_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def classify_component(c: LengthsCoord) -> ComponentLabel:
    """Label the connected component containing the coordinate and check
    the sign pattern is one that actually occurs for its Euler class."""
    k = c.euler_class()
    signs = c.puncture_signs()
    vec = tuple(signs[v] for v in PUNCTURES)
    n_minus = vec.count(-1)
    ok = {
        2: n_minus == 0,
        1: n_minus <= 1,
        0: n_minus == 2,
        -1: n_minus >= 3,
        -2: n_minus == 4,
    }[k]
    if not ok:
        raise InternalInconsistency(
            f"sign pattern {vec} cannot occur with Euler class {k}"
        )
    return ComponentLabel(k, vec)
