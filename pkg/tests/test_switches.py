import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charcoords import (
    LengthsCoord,
    NotAdmissible,
    QQ,
    QuadState,
    anti_tri_check,
    apply_word,
    diagonal_switch,
    eps_from_negatives,
    simultaneous_switch,
    tri_check,
)
from charcoords.surface import AXES, EDGES, PUNCTURES
from conftest import NON_EXTREMAL, ONE_NEG, random_coord


def witness(x, y, z, negs):
    return LengthsCoord.from_pair_triple(x, y, z, eps_from_negatives(negs))


def quad(e, e1, e2, e3, e4, s1, s2):
    return QuadState(QQ(e), QQ(e1), QQ(e2), QQ(e3), QQ(e4), s1, s2)


def test_diagonal_switch_same_signs():
    out = diagonal_switch(quad(1, 1, 1, 1, 1, 1, 1))
    assert out.lam_new == 2 and out.eps_t1 == out.eps_t2 == 1


def test_diagonal_switch_opposite_signs():
    # larger product on the (e1, e3) side: the signs swap across the new edge
    out = diagonal_switch(quad(1, 2, 1, 1, 1, -1, 1))
    assert out.lam_new == 1
    assert out.eps_t1 == 1 and out.eps_t2 == -1
    # larger product on the (e2, e4) side: the signs stay put
    out = diagonal_switch(quad(1, 1, 2, 1, 1, -1, 1))
    assert out.lam_new == 1
    assert out.eps_t1 == -1 and out.eps_t2 == 1


def test_diagonal_switch_inadmissible():
    with pytest.raises(NotAdmissible):
        diagonal_switch(quad(1, 1, 1, 1, 1, -1, 1))


def test_lambda_rules_one_negative():
    c = witness(3, 2, 1, {1})
    assert simultaneous_switch(c, "x").pair_quantities() == (1, 2, 1)
    with pytest.raises(NotAdmissible):
        simultaneous_switch(witness(3, 1, 1, {1}), "x")


def test_lambda_rules_two_negative():
    c = witness(3, 1, 1, {1, 2})
    assert simultaneous_switch(c, "x").pair_quantities() == (QQ(4, 3), 1, 1)
    with pytest.raises(NotAdmissible):
        simultaneous_switch(witness(1, 9, 1, {1, 2}), "y")


def _closed_form_one_negative(t, axis):
    x, y, z = t
    return {
        "x": (abs(y * y - z * z) / x, y, z),
        "y": (x, abs(z * z - x * x) / y, z),
        "z": (x, y, abs(x * x - y * y) / z),
    }[axis]


def _closed_form_two_negative(t, axis):
    # special axis is x for the sign pattern used below
    x, y, z = t
    return {
        "x": ((y + z) ** 2 / x, y, z),
        "y": (x, (z - x) ** 2 / y, z),
        "z": (x, y, (x - y) ** 2 / z),
    }[axis]


def test_switch_engine_matches_closed_forms(rng):
    for _ in range(300):
        for negs, closed in ((({1}), _closed_form_one_negative),
                             (({1, 2}), _closed_form_two_negative)):
            c = random_coord(rng, negs, bound=999)
            t = c.pair_quantities()
            for axis in AXES:
                try:
                    got = simultaneous_switch(c, axis).pair_quantities()
                except NotAdmissible:
                    expect = closed(t, axis)
                    assert 0 in expect or expect[AXES.index(axis)] == 0
                    continue
                assert got == tuple(closed(t, axis))


def test_off_axis_pairs_unchanged(rng):
    for _ in range(100):
        c = random_coord(rng, {1})
        t = c.pair_quantities()
        try:
            t2 = simultaneous_switch(c, "x").pair_quantities()
        except NotAdmissible:
            continue
        assert (t2.y, t2.z) == (t.y, t.z)


@settings(max_examples=80, deadline=None)
@given(
    st.tuples(*[st.fractions(min_value="1/99", max_value=99) for _ in range(6)]),
    st.sampled_from(NON_EXTREMAL + [set()]),
    st.sampled_from(AXES),
)
def test_involution_and_euler_conservation(lams, negs, axis):
    c = LengthsCoord.from_maps(
        dict(zip(EDGES, map(QQ, lams))),
        {i: (-1 if i in negs else 1) for i in PUNCTURES},
    )
    try:
        c2 = simultaneous_switch(c, axis)
    except NotAdmissible:
        return
    assert c2.euler_class() == c.euler_class()
    back = simultaneous_switch(c2, axis)
    assert back.lam == c.lam and back.eps == c.eps and back.tri == c.tri


def test_anti_tri_preserved_by_admissible_switches(rng):
    for negs in ONE_NEG:
        for _ in range(200):
            y = rng.randint(1, 99)
            z = rng.randint(1, 99)
            x = y + z + rng.randint(1, 99)
            vals = [QQ(x), QQ(y), QQ(z)]
            rng.shuffle(vals)
            c = witness(*vals, negs)
            assert anti_tri_check(c.pair_quantities())
            for axis in AXES:
                try:
                    c2 = simultaneous_switch(c, axis)
                except NotAdmissible:
                    continue
                assert anti_tri_check(c2.pair_quantities())


def test_apply_word():
    c = witness(4, 2, 1, {1})
    final, trace = apply_word(c, ())
    assert final is c and trace == ()
    final, trace = apply_word(c, ("y",))
    assert trace[0] == (4, QQ(15, 2), 1)
    final, trace = apply_word(c, ("x", "x"))
    assert final.lam == c.lam and final.eps == c.eps
    with pytest.raises(NotAdmissible) as exc:
        # the z-switch sends (3, 1, 8) to (3, 1, 1), where the x-switch ties
        apply_word(witness(3, 1, 8, {1}), ("z", "x"))
    assert exc.value.step == 1 and exc.value.axis == "x"


def test_pair_trace_rows():
    from charcoords import pair_trace_rows

    c = witness(4, 2, 1, {1})
    final, tr = apply_word(c, ("y",))
    assert pair_trace_rows(("y",), tr) == ["step,axis,x,y,z", "1,y,4/1,15/2,1/1"]


def test_anti_tri_check():
    assert anti_tri_check((QQ(3), QQ(1), QQ(1)))
    assert not anti_tri_check((QQ(1), QQ(1), QQ(1)))
    assert anti_tri_check((QQ(4), QQ(15, 2), QQ(1)))
    assert not anti_tri_check((QQ(2), QQ(1), QQ(1)))  # boundary is not strict


def test_tri_check():
    assert tri_check((QQ(1), QQ(1), QQ(1)))
    assert tri_check((QQ(4), QQ(1), QQ(1)))  # boundary case holds
    assert not tri_check((QQ(9), QQ(1), QQ(1)))
    assert tri_check((QQ(81, 225), QQ(128, 225), QQ(16, 225)))


def test_quad_state_validation():
    with pytest.raises(ValueError):
        QuadState(QQ(0), QQ(1), QQ(1), QQ(1), QQ(1), 1, 1)
