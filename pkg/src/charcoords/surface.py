"""Combinatorics of the four-punctured sphere.

An ideal triangulation of the sphere with punctures v1..v4 that looks like
the boundary of a tetrahedron has six edges e_ij joining distinct punctures
and four triangles, where t_i is the triangle disjoint from v_i.  Opposite
edges form three pairs

    x = {e12, e34},   y = {e13, e24},   z = {e14, e23},

and there are three distinguished simple closed curves, one disjoint from
each pair, crossing the remaining four edges once.  Simultaneous diagonal
switches S_x, S_y, S_z connect these triangulations into an infinite
trivalent tree dual to the Farey tessellation: vertices of the tree are
triangulations, complementary regions are non-peripheral simple closed
curves, identified by extended rational slopes p/q.  The parity class of
(p, q) mod 2 tri-colors the curves, and we label the colors by the axis of
the edge pair the curve avoids.

Edges are kept label-stable across switches: after a switch the triangles
are renamed so that t_i again avoids v_i and e_ij again joins v_i to v_j.
A triangulation is therefore recorded by its position in the dual tree
(the reduced switch word from the base vertex) together with the slopes of
its three distinguished curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalInconsistency

PUNCTURES = (1, 2, 3, 4)
AXES = ("x", "y", "z")

EDGES = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

PAIRS = {"x": ((1, 2), (3, 4)), "y": ((1, 3), (2, 4)), "z": ((1, 4), (2, 3))}

AXIS_OF_EDGE = {e: a for a, pair in PAIRS.items() for e in pair}

# t_i avoids v_i, so its edges are the three joining the other punctures.
TRIANGLE_EDGES = {i: tuple(e for e in EDGES if i not in e) for i in PUNCTURES}

# Cyclic edge order of each triangle induced by a fixed orientation of the
# sphere (the tetrahedron's faces seen from outside).  Consecutive edges of
# a cycle share a vertex; each edge is traversed once per adjacent triangle,
# in opposite directions.
TRIANGLE_EDGE_CYCLES = {
    1: ((2, 3), (3, 4), (2, 4)),
    2: ((1, 4), (3, 4), (1, 3)),
    3: ((1, 2), (2, 4), (1, 4)),
    4: ((1, 3), (2, 3), (1, 2)),
}


def edge(i, j):
    """Normalized key for the edge joining punctures i and j."""
    return (i, j) if i < j else (j, i)


def edge_label(e):
    return f"e{e[0]}{e[1]}"


def parse_edge_label(s):
    if len(s) == 3 and s[0] == "e" and s[1:].isdigit():
        i, j = int(s[1]), int(s[2])
        if i in PUNCTURES and j in PUNCTURES and i != j:
            return edge(i, j)
    raise ValueError(f"bad edge label {s!r}")


def edge_triangles(e):
    """Labels of the two triangles adjacent to an edge."""
    i, j = e
    return tuple(k for k in PUNCTURES if k != i and k != j)


@dataclass(frozen=True)
class Slope:
    """Extended rational p/q identifying a non-peripheral simple closed
    curve; normalized so gcd(p, q) = 1 and q > 0 (infinity is 1/0)."""

    p: int
    q: int = 1

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        g = math.gcd(p, q)
        p //= g
        q //= g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def color(self):
        """Axis color from the parity class of (p, q) mod 2."""
        return {(1, 0): "x", (0, 1): "y", (1, 1): "z"}[(self.p % 2, self.q % 2)]

    @property
    def is_infinity(self):
        return self.q == 0

    @classmethod
    def parse(cls, s):
        s = s.strip()
        if "/" in s:
            p, q = s.split("/", 1)
            return cls(int(p), int(q))
        return cls(int(s))

    def __str__(self):
        return f"{self.p}/{self.q}"


def slope_color(s: Slope) -> str:
    return s.color


def _flip_vertex(keep1: Slope, keep2: Slope, old: Slope) -> Slope:
    """The other Farey neighbor of the edge (keep1, keep2), i.e. the slope
    obtained by flipping ``old`` across that edge."""
    for cand in (
        Slope(keep1.p + keep2.p, keep1.q + keep2.q),
        Slope(keep1.p - keep2.p, keep1.q - keep2.q),
    ):
        if cand != old:
            return cand
    raise InternalInconsistency("degenerate Farey flip")


@dataclass(frozen=True)
class TetraTriangulation:
    """A tetrahedral triangulation, located in the dual tree.

    ``distinguished`` holds the slopes of the three distinguished curves in
    axis order (x, y, z); ``word`` is the reduced switch word leading here
    from the base triangulation.  The labeled incidence data (triangles,
    edge endpoints, opposite pairs) is the same for every triangulation by
    the relabeling convention and is exposed as properties.
    """

    distinguished: tuple
    word: tuple = ()

    def __post_init__(self):
        for axis, s in zip(AXES, self.distinguished):
            if s.color != axis:
                raise InternalInconsistency(
                    f"slope {s} in the {axis} slot has color {s.color}"
                )

    @property
    def parity(self) -> int:
        return len(self.word) % 2

    @property
    def triangles(self):
        return dict(TRIANGLE_EDGES)

    @property
    def edge_endpoints(self):
        return {e: frozenset(e) for e in EDGES}

    @property
    def pairs(self):
        return dict(PAIRS)

    def slope(self, axis: str) -> Slope:
        return self.distinguished[AXES.index(axis)]

    def neighbor(self, axis: str) -> TetraTriangulation:
        """The dual-tree neighbor across the given axis."""
        i = AXES.index(axis)
        others = [self.distinguished[j] for j in range(3) if j != i]
        new = list(self.distinguished)
        new[i] = _flip_vertex(others[0], others[1], self.distinguished[i])
        if self.word and self.word[-1] == axis:
            word = self.word[:-1]
        else:
            word = self.word + (axis,)
        return TetraTriangulation(tuple(new), word)

    def neighbors(self):
        return tuple(self.neighbor(a) for a in AXES)


BASE_TRIANGULATION = TetraTriangulation((Slope(1, 0), Slope(0, 1), Slope(1, 1)))


def base_triangulation() -> TetraTriangulation:
    """The canonical labeled triangulation; its distinguished curves carry
    slopes 1/0, 0/1 and 1/1 on the axes x, y and z respectively."""
    return BASE_TRIANGULATION


def _strictly_between(u: Slope, v: Slope, t: Slope) -> bool:
    # Reference side of the circle chord {u, v}: for a finite chord the open
    # interval between the two values, for a chord through infinity the side
    # above the finite endpoint.  Only consistency matters, not which side.
    if u.is_infinity or v.is_infinity:
        w = v if u.is_infinity else u
        return not t.is_infinity and t.p * w.q > w.p * t.q
    lo, hi = (u, v) if u.p * v.q < v.p * u.q else (v, u)
    return (
        not t.is_infinity
        and lo.p * t.q < t.p * lo.q
        and t.p * hi.q < hi.p * t.q
    )


def _opposite_sides(u, v, s, w):
    return _strictly_between(u, v, s) != _strictly_between(u, v, w)


def farey_path(s: Slope, max_steps: int = 10**5) -> tuple:
    """The unique reduced switch word from the base triangulation to the
    triangulation nearest the base in which the curve of slope ``s`` is
    distinguished.  Empty for the three base slopes; otherwise the last
    letter's axis equals the slope's color."""
    tri = BASE_TRIANGULATION
    word = []
    for _ in range(max_steps):
        if s in tri.distinguished:
            return tuple(word)
        for i, axis in enumerate(AXES):
            others = [tri.distinguished[j] for j in range(3) if j != i]
            if _opposite_sides(others[0], others[1], s, tri.distinguished[i]):
                word.append(axis)
                tri = tri.neighbor(axis)
                break
        else:
            raise InternalInconsistency(f"no descent direction toward {s}")
    raise InternalInconsistency(f"Farey walk toward {s} did not terminate")


def reduce_word(letters) -> tuple:
    """Cancel immediate backtracks (a repeated switch at the same axis
    returns to the previous tree vertex)."""
    out = []
    for a in letters:
        if out and out[-1] == a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def word_to_labels(word) -> list:
    """Serialize a switch word as labels, e.g. ("y", "x") -> ["Sy", "Sx"]."""
    return [f"S{a}" for a in word]


def word_from_labels(labels) -> tuple:
    """Parse ["Sy", "Sx"]-style labels into a switch word."""
    word = []
    for lab in labels:
        a = lab.strip().lower()
        if len(a) != 2 or a[0] != "s" or a[1] not in AXES:
            raise ValueError(f"bad switch label {lab!r}")
        word.append(a[1])
    return tuple(word)


# Dehn twists along the distinguished curves, as switch words in
# application order (leftmost letter acts first).
TWIST_EXPANSION = {"X": ("y", "z"), "Y": ("z", "x"), "Z": ("x", "y")}


@dataclass(frozen=True)
class MappingClassWord:
    """Word in the Dehn twists D_X, D_Y, D_Z and their inverses, stored as
    (curve, exponent-sign) generator tokens."""

    gens: tuple

    @classmethod
    def parse(cls, tokens) -> MappingClassWord:
        gens = []
        for tok in tokens:
            t = tok.strip().upper()
            inv = False
            for suffix in ("^-1", "-1"):
                if t.endswith(suffix):
                    inv = True
                    t = t[: -len(suffix)]
                    break
            if t not in ("DX", "DY", "DZ"):
                raise ValueError(f"bad mapping class token {tok!r}")
            gens.append((t[1], -1 if inv else 1))
        return cls(tuple(gens))


def expand_mapping_class(w) -> tuple:
    """Reduced switch word of a mapping-class word.  Always even length:
    each twist is a pair of switches, and reduction cancels in pairs."""
    if isinstance(w, MappingClassWord):
        gens = w.gens
    else:
        gens = MappingClassWord.parse(w).gens
    letters = []
    for curve, sign in gens:
        exp = TWIST_EXPANSION[curve]
        letters.extend(exp if sign > 0 else tuple(reversed(exp)))
    word = reduce_word(letters)
    if len(word) % 2:
        raise InternalInconsistency("twist word expanded to odd length")
    return word


def slopes_to_depth(depth: int):
    """All slopes distinguished within dual-tree radius ``depth`` of the
    base, in deterministic breadth-first discovery order."""
    slopes = list(BASE_TRIANGULATION.distinguished)
    seen = set(slopes)
    frontier = [(BASE_TRIANGULATION, None)]
    for _ in range(depth):
        nxt = []
        for tri, banned in frontier:
            for axis in AXES:
                if axis == banned:
                    continue
                child = tri.neighbor(axis)
                s = child.slope(axis)
                if s not in seen:
                    seen.add(s)
                    slopes.append(s)
                nxt.append((child, axis))
        frontier = nxt
    return slopes
