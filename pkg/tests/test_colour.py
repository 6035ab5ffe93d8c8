import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colhopf import colour as cl
from colhopf.catalog import build_algebra, registry
from colhopf.verify import check_action_composition, check_group_axioms, exact_point, points_equal


def test_s2_composition_and_inverse():
    minus = cl.S2.point(-1)
    assert cl.compose(cl.S2, minus, minus) == cl.S2.point(1)
    assert cl.invert(cl.S2, minus) == minus
    assert cl.group_identity(cl.S2) == cl.S2.point(1)


def test_gl1_composition_and_inverse():
    assert cl.compose(cl.GL1C, cl.GL1C.point(2), cl.GL1C.point(3)).values == (6,)
    assert cl.invert(cl.GL1C, cl.GL1C.point(2)).values == (0.5,)
    assert cl.group_identity(cl.GL1C).values == (1,)


def test_semidirect_law():
    a, b = cl.SEMIDIRECT.point(2, -1), cl.SEMIDIRECT.point(3, 1)
    ab = cl.compose(cl.SEMIDIRECT, a, b)
    assert ab.values[1] == -1
    assert np.isclose(ab.values[0], 2 / 3)


def test_semidirect_inverse_of_negative_sign():
    a = cl.SEMIDIRECT.point(2, -1)
    inv = cl.invert(cl.SEMIDIRECT, a)
    assert inv.values == (2, -1)
    assert cl.compose(cl.SEMIDIRECT, a, inv).values == (1, 1)
    assert cl.group_identity(cl.SEMIDIRECT).values == (1, 1)


def test_semidirect_is_nonabelian():
    a, b = cl.SEMIDIRECT.point(2, -1), cl.SEMIDIRECT.point(3, 1)
    assert cl.compose(cl.SEMIDIRECT, a, b) != cl.compose(cl.SEMIDIRECT, b, a)
    assert not cl.SEMIDIRECT.abelian


@pytest.mark.parametrize("group,values", [
    (cl.S2, (0,)),
    (cl.S2, (1, 1)),
    (cl.GL1C, (0,)),
    (cl.GL1R, (1j,)),
    (cl.SEMIDIRECT, (0, 1)),
    (cl.SEMIDIRECT, (2, 3)),
    (cl.PAIR_C, (1, 0)),
])
def test_invalid_points(group, values):
    with pytest.raises(cl.ColourError):
        group.point(*values)


def test_cross_group_composition_rejected():
    with pytest.raises(cl.ColourError):
        cl.GL1C.compose(cl.GL1C.point(2), cl.S2.point(1))


@pytest.mark.parametrize("group", list(cl.GROUPS.values()), ids=lambda g: g.name)
def test_group_axioms_hold_exactly(group):
    fails = check_group_axioms(group, np.random.default_rng(0), n=200)
    assert fails == {"associativity": 0, "identity": 0, "inverse": 0}


@pytest.mark.parametrize("group", [g for g in cl.GROUPS.values() if not g.discrete], ids=lambda g: g.name)
def test_samples_stay_in_domain(group):
    rng = np.random.default_rng(5)
    for _ in range(50):
        p = group.sample(rng)
        group.validate(p)
        for v in p.values:
            assert 0.5 - 1e-12 <= abs(v) <= 2 + 1e-12 or v in (1, -1)


def test_sampling_is_seeded():
    a = [cl.PAIR_C.sample(np.random.default_rng(9)) for _ in range(2)]
    assert a[0] == a[1]


def test_s2_enumerates_both_elements():
    assert list(cl.iter_samples(cl.S2, np.random.default_rng(0), 0)) == [cl.S2.point(1), cl.S2.point(-1)]
    with pytest.raises(cl.ColourError):
        cl.GL1C.enumerate()


def test_real_form_sampling():
    p = cl.PAIR_C.sample_real_form(np.random.default_rng(1))
    assert p.values[1] == p.values[0].conjugate()
    with pytest.raises(cl.ColourError):
        cl.PAIR_R.sample_real_form(np.random.default_rng(1))


def test_additive_parameters():
    assert cl.GL1C.from_additive(0).values == (1,)
    assert np.isclose(cl.GL1C.from_additive(0.5).values[0], cmath.exp(0.5))
    assert cl.S2.from_additive(1).values == (-1,)
    with pytest.raises(cl.ColourError):
        cl.SEMIDIRECT.from_additive(0.5)


@settings(max_examples=50)
@given(st.floats(-2, 2), st.floats(-2, 2))
def test_additive_parameters_are_a_homomorphism(p1, p2):
    g = cl.GL1C
    lhs = g.from_additive(p1 + p2).values[0]
    rhs = g.compose(g.from_additive(p1), g.from_additive(p2)).values[0]
    assert cmath.isclose(lhs, rhs, rel_tol=1e-12)


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1))
def test_semidirect_inverse_property(seed):
    rng = np.random.default_rng(seed)
    g = cl.SEMIDIRECT
    a = exact_point(g, rng)
    assert points_equal(g.compose(g.invert(a), a), g.point(1, 1))


# -- actions ------------------------------------------------------------------------


def test_s2_action_on_sl2():
    act = cl.action(cl.S2, cl.S2.point(-1), "uq_sl2")
    assert act.gens["J3"] == (-1, "J3")
    assert act.gens["Jp"] == (1, "Jm")
    spec = build_algebra("uq_sl2", {"eta": 0.4})
    assert act.params(spec.params) == spec.params


def test_pair_action_on_standard_oscillator():
    nu = cl.PAIR_C.point(2.0, 3.0)
    act = cl.action(cl.PAIR_C, nu, "uz_h4_std")
    assert act.gens["M"] == (6.0, "M")
    assert act.gens["Ap"] == (2.0, "Ap")
    assert act.gens["Am"] == (3.0, "Am")
    spec = build_algebra("uz_h4_std", {"z": 0.4})
    assert np.isclose(act.params(spec.params).z, 2.4)


def test_gl1_action_on_jordanian():
    act = cl.action(cl.GL1C, cl.GL1C.point(2.0), "uh_sl2")
    assert act.gens["A"] == (1, "A")
    assert act.gens["Ap"] == (2.0, "Ap")
    assert np.isclose(act.gens["Am"][0], 0.5) and act.gens["Am"][1] == "Am"
    spec = build_algebra("uh_sl2", {"h": 0.3})
    assert np.isclose(act.params(spec.params).h, 0.6)


def test_action_lookup_failure():
    with pytest.raises(cl.ColourError):
        cl.action(cl.PAIR_R, cl.PAIR_R.point(1.0, 1.0), "uq_sl2")


@pytest.mark.parametrize("alg,cid", registry.families())
def test_actions_compose_exactly(alg, cid):
    spec = build_algebra(alg)
    fails = check_action_composition(spec, cid, np.random.default_rng(11), n=50)
    assert fails == {"composition": 0, "identity": 0, "bijective": 0}
