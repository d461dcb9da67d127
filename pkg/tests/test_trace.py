import pytest
import sympy

from charcoords import (
    InvalidStep,
    LengthsCoord,
    NotClosed,
    QQ,
    Witness,
    closed_form_distinguished,
    curve_trace,
    distinguished_trace,
    dominance_check,
    eps_from_negatives,
    holonomy_oracle,
    make_step,
    parabolic_entry_sign,
    peripheral_matrix,
    peripheral_trace,
    slope_trace,
    turn_matrix,
)
from charcoords.surface import AXES, EDGES, PUNCTURES, Slope
from charcoords.trace import DISTINGUISHED_STEPS, PERIPHERAL_STEPS
from conftest import ALL_PATTERNS, ONE_NEG, TWO_NEG, random_coord


def witness_coord(x, y, z, negs):
    return LengthsCoord.from_pair_triple(x, y, z, eps_from_negatives(negs))


def unit_coord(negs=frozenset()):
    return LengthsCoord.from_maps(
        {e: QQ(1) for e in EDGES}, {i: (-1 if i in negs else 1) for i in PUNCTURES}
    )


def test_turn_matrix():
    c = unit_coord()
    step = make_step((1, 3), 2, (1, 4), "L")
    assert turn_matrix(step, c) == (1, 1, 0, 1)
    c = unit_coord({2})
    step = make_step((1, 3), 2, (1, 4), "R")
    assert turn_matrix(step, c) == (1, 0, -1, 1)
    lam = {e: QQ(1) for e in EDGES}
    lam[(1, 3)] = QQ(3)
    lam[(1, 4)] = QQ(2)
    lam[(3, 4)] = QQ(5)
    c = LengthsCoord.from_maps(lam, {1: 1, 2: -1, 3: 1, 4: 1})
    assert turn_matrix(make_step((1, 3), 2, (1, 4), "L"), c) == (3, -5, 0, 2)


def test_step_tables_respect_orientation():
    # a left turn must step enter -> exit one place forward in the
    # triangle's oriented edge cycle; the shear factors of the holonomy
    # route assume this
    from charcoords.surface import TRIANGLE_EDGE_CYCLES

    for seq in list(DISTINGUISHED_STEPS.values()) + list(PERIPHERAL_STEPS.values()):
        for step in seq:
            cyc = TRIANGLE_EDGE_CYCLES[step.triangle]
            i = cyc.index(step.enter)
            assert (step.turn == "L") == (cyc[(i + 1) % 3] == step.exit)


def test_make_step_validation():
    with pytest.raises(InvalidStep):
        make_step((1, 2), 2, (1, 3), "L")  # e12 is not an edge of t2
    with pytest.raises(InvalidStep):
        make_step((1, 3), 2, (1, 3), "L")
    with pytest.raises(InvalidStep):
        make_step((1, 3), 2, (1, 4), "U")


def test_curve_trace_requires_closure():
    c = unit_coord()
    seq = (make_step((1, 3), 2, (1, 4), "L"), make_step((2, 4), 1, (2, 3), "L"))
    with pytest.raises(NotClosed):
        curve_trace(c, seq)
    with pytest.raises(NotClosed):
        curve_trace(c, ())


def test_distinguished_trace_examples():
    assert distinguished_trace(witness_coord(3, 1, 1, {1}), "x").abs_trace == 7
    assert distinguished_trace(witness_coord(3, 1, 1, {1}), "y").abs_trace == 3
    r = distinguished_trace(witness_coord(1, 1, 1, {1, 2}), "x")
    assert r.abs_trace == 1 and r.klass == "Elliptic"
    r = distinguished_trace(witness_coord(4, 1, 1, {1, 2}), "x")
    assert r.abs_trace == 2 and r.klass == "Parabolic"
    r = distinguished_trace(witness_coord(1, 1, 1, {1, 2}), "z")
    assert r.abs_trace == 3 and r.klass == "Hyperbolic"


def _sym_coord(negs):
    lam = {e: sympy.Symbol(f"l{e[0]}{e[1]}", positive=True) for e in EDGES}

    class SymCoord:
        def lam_of(self, e):
            return lam[tuple(sorted(e))]

        def eps_of(self, i):
            return -1 if i in negs else 1

    return SymCoord(), lam


def _sym_trace(c, seq):
    prod = sympy.eye(2)
    denom = sympy.Integer(1)
    for step in seq:
        m = turn_matrix(step, c)
        prod = prod * sympy.Matrix([[m[0], m[1]], [m[2], m[3]]])
        denom *= c.lam_of(step.enter)
    return sympy.simplify(sympy.trace(prod) / denom)


def test_symbolic_closed_forms_one_negative():
    # symbolic spot check for each one-negative pattern
    for i in PUNCTURES:
        c, lam = _sym_coord({i})
        x = lam[(1, 2)] * lam[(3, 4)]
        y = lam[(1, 3)] * lam[(2, 4)]
        z = lam[(1, 4)] * lam[(2, 3)]
        expected = {
            "x": (y**2 + z**2 - x**2) / (y * z),
            "y": (x**2 + z**2 - y**2) / (x * z),
            "z": (x**2 + y**2 - z**2) / (x * y),
        }
        for color in AXES:
            tr = _sym_trace(c, DISTINGUISHED_STEPS[color])
            assert sympy.simplify(sympy.Abs(tr) - sympy.Abs(expected[color])) == 0


def test_symbolic_closed_forms_two_negative():
    # the special pair (same-sign triangles on both its edges) plays the
    # asymmetric role; one symbolic spot check per two-negative pattern,
    # with the expected forms written out per special axis
    def forms_special_x(x, y, z):
        sq = x**2 + y**2 + z**2
        return {"x": (sq - 2 * x * y - 2 * x * z) / (y * z),
                "y": (sq + 2 * y * z - 2 * x * y) / (x * z),
                "z": (sq + 2 * y * z - 2 * x * z) / (x * y)}

    def forms_special_y(x, y, z):
        sq = x**2 + y**2 + z**2
        return {"y": (sq - 2 * y * x - 2 * y * z) / (x * z),
                "x": (sq + 2 * x * z - 2 * y * x) / (y * z),
                "z": (sq + 2 * x * z - 2 * y * z) / (y * x)}

    def forms_special_z(x, y, z):
        sq = x**2 + y**2 + z**2
        return {"z": (sq - 2 * z * x - 2 * z * y) / (x * y),
                "x": (sq + 2 * x * y - 2 * z * x) / (z * y),
                "y": (sq + 2 * x * y - 2 * z * y) / (z * x)}

    by_pattern = {
        frozenset({1, 2}): forms_special_x,
        frozenset({3, 4}): forms_special_x,
        frozenset({1, 3}): forms_special_y,
        frozenset({2, 4}): forms_special_y,
        frozenset({1, 4}): forms_special_z,
        frozenset({2, 3}): forms_special_z,
    }
    for negs, forms in by_pattern.items():
        c, lam = _sym_coord(negs)
        x = lam[(1, 2)] * lam[(3, 4)]
        y = lam[(1, 3)] * lam[(2, 4)]
        z = lam[(1, 4)] * lam[(2, 3)]
        expected = forms(x, y, z)
        for color in AXES:
            tr = _sym_trace(c, DISTINGUISHED_STEPS[color])
            assert sympy.simplify(sympy.Abs(tr) - sympy.Abs(expected[color])) == 0


def test_engine_matches_closed_forms_all_patterns(rng):
    for negs in ONE_NEG + TWO_NEG + [set(PUNCTURES) - {i} for i in PUNCTURES]:
        for _ in range(150):
            c = random_coord(rng, negs, bound=999)
            t = c.pair_quantities()
            for color in AXES:
                assert distinguished_trace(c, color).abs_trace == \
                    closed_form_distinguished(t, c.eps, color)


def test_trace_cyclic_rotation_invariance(rng):
    c = random_coord(rng, {1})
    seq = DISTINGUISHED_STEPS["x"]
    base = curve_trace(c, seq).abs_trace
    for k in range(1, len(seq)):
        assert curve_trace(c, seq[k:] + seq[:k]).abs_trace == base


def test_trace_rescale_invariance(rng):
    for _ in range(50):
        c = random_coord(rng, {1, 3})
        mu = {i: QQ(rng.randint(1, 30), rng.randint(1, 30)) for i in PUNCTURES}
        r = c.rescale(mu)
        for color in AXES:
            assert distinguished_trace(r, color).abs_trace == \
                distinguished_trace(c, color).abs_trace
        for v in PUNCTURES:
            assert peripheral_trace(r, v).abs_trace == 2


def test_peripheral_parabolicity_and_entries(rng):
    for negs in ALL_PATTERNS:
        for _ in range(50):
            c = random_coord(rng, negs, bound=999)
            for v in PUNCTURES:
                assert peripheral_trace(c, v).abs_trace == 2
                m = peripheral_matrix(c, v)
                assert (m[0], m[2], m[3]) == (1, 0, 1)
                seq = PERIPHERAL_STEPS[v]
                factor = c.lam_of(seq[1].enter) * c.lam_of(seq[2].enter)
                assert m[1] * factor == c.peripheral_entry(v)


def test_slope_trace_examples():
    c = witness_coord(3, 1, 1, {1})
    assert slope_trace(c, Slope(1, 0)).abs_trace == 7
    assert slope_trace(c, Slope(2, 1)).abs_trace == 18
    w = slope_trace(c, Slope(1, 2))
    assert isinstance(w, Witness)
    assert w.kind == "Parabolic" and w.abs_trace == 2 and str(w.slope) == "1/2"


def test_holonomy_oracle_against_exact(rng):
    for _ in range(60):
        c = random_coord(rng, {1}, bound=60)
        for color in AXES:
            m = holonomy_oracle(c, DISTINGUISHED_STEPS[color])
            exact = float(distinguished_trace(c, color).abs_trace)
            assert abs(abs(m[0] + m[3]) - exact) <= 1e-9 * max(1.0, exact)


def test_holonomy_oracle_peripheral_signs(rng):
    for negs in ALL_PATTERNS:
        for _ in range(25):
            c = random_coord(rng, negs, bound=60)
            for v in PUNCTURES:
                m = holonomy_oracle(c, PERIPHERAL_STEPS[v])
                assert abs(abs(m[0] + m[3]) - 2) < 1e-9
                pat = c.peripheral_entry(v)
                if pat != 0:
                    assert parabolic_entry_sign(m) == (1 if pat > 0 else -1)


def test_unit_all_plus_oracle_agreement():
    c = unit_coord()
    m = holonomy_oracle(c, DISTINGUISHED_STEPS["x"])
    assert abs(abs(m[0] + m[3]) - float(distinguished_trace(c, "x").abs_trace)) < 1e-12


def test_dominance_examples():
    c = witness_coord(3, 1, 1, {1})
    report = dominance_check(c, [Slope(1, 0)])
    assert report.rows[0].abs_trace == 7
    assert report.rows[0].fuchsian_abs_trace == 23
    assert report.all_strict
    c0 = witness_coord(1, 1, 1, {1, 2})
    report = dominance_check(c0, [Slope(1, 0)])
    assert report.rows[0].abs_trace == 1 and report.rows[0].strict
    assert dominance_check(c, []).all_hold  # vacuous


def test_dominance_rejects_extremal():
    with pytest.raises(ValueError):
        dominance_check(unit_coord(), [Slope(1, 0)])
