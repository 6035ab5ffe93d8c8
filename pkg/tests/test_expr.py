import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from colhopf import expr as ex
from colhopf import tensorkit as tk

SL2 = {
    "J3": np.diag([0.5, -0.5]).astype(complex),
    "Jp": tk.unit(2, 1, 2, base=1),
    "Jm": tk.unit(2, 2, 1, base=1),
}
TWO_LEGS = ex.AtomAssignment.simple([SL2, SL2])
ONE_LEG = ex.AtomAssignment.simple([SL2])


def expressions(legs=(1, 2), max_leaves=8):
    atoms = st.builds(ex.Atom, st.sampled_from(legs), st.sampled_from(sorted(SL2)))
    coeffs = st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False)

    def extend(children):
        return st.one_of(
            st.builds(ex.Scale, coeffs, children),
            st.lists(children, min_size=1, max_size=3).map(lambda xs: ex.Sum(tuple(xs))),
            st.lists(children, min_size=1, max_size=3).map(lambda xs: ex.Prod(tuple(xs))),
            # keep series arguments small so every series converges fast
            children.map(lambda c: ex.Func("exp", ex.Scale(0.1, c))),
        )

    return st.recursive(st.one_of(atoms, st.just(ex.ONE)), extend, max_leaves=max_leaves)


def test_single_atom_lands_on_its_leg():
    assert_allclose(ex.eval_hom(ex.at(1, "J3"), TWO_LEGS), tk.kron(SL2["J3"], np.eye(2)))
    assert_allclose(ex.eval_hom(ex.at(2, "J3"), TWO_LEGS), tk.kron(np.eye(2), SL2["J3"]))


@pytest.mark.parametrize("eta", [1.0, 0.3, -0.7 + 0.2j])
def test_cartan_exponential_is_diagonal(eta):
    x = ex.exp(ex.scale(2 * eta, ex.mul(ex.at(1, "J3"), ex.at(2, "J3"))))
    h = eta / 2
    want = np.diag(np.exp([h, -h, -h, h]))
    assert_allclose(ex.eval_hom(x, TWO_LEGS), want, atol=1e-14)


def test_cartan_exponential_at_unit_eta():
    x = ex.exp(ex.scale(2.0, ex.mul(ex.at(1, "J3"), ex.at(2, "J3"))))
    e = np.exp(0.5)
    assert_allclose(ex.eval_hom(x, TWO_LEGS), np.diag([e, 1 / e, 1 / e, e]), atol=1e-14)


def test_difference_of_equal_terms_vanishes():
    g = ex.at(1, "Jp")
    assert not ex.eval_hom(ex.add(g, ex.scale(-1, g)), TWO_LEGS).any()


def test_antihom_of_single_atom():
    for gen in SL2:
        a = ex.at(1, gen)
        assert_allclose(ex.eval_antihom(a, ONE_LEG), ex.eval_hom(a, ONE_LEG))


def test_antihom_reverses_products():
    p = ex.mul(ex.at(1, "Jp"), ex.at(1, "Jm"))
    assert_allclose(ex.eval_antihom(p, ONE_LEG), SL2["Jm"] @ SL2["Jp"])
    assert_allclose(ex.eval_antihom(p, ONE_LEG), np.diag([0, 1]))
    assert_allclose(ex.eval_hom(p, ONE_LEG), np.diag([1, 0]))


def test_empty_product_is_identity():
    assert_allclose(ex.eval_hom(ex.Prod(()), ONE_LEG), np.eye(2))


def test_missing_generator():
    with pytest.raises(ex.MissingAtomError):
        ex.eval_hom(ex.at(1, "Z"), ONE_LEG)
    with pytest.raises(ex.MissingAtomError):
        ex.eval_hom(ex.at(3, "J3"), TWO_LEGS)


def test_unknown_series_rejected_at_construction():
    with pytest.raises(ValueError):
        ex.Func("sin", ex.ONE)


def test_leg_must_be_positive():
    with pytest.raises(ValueError):
        ex.Atom(0, "J3")


# -- generator maps -----------------------------------------------------------------

S2_MINUS = {"J3": (-1, "J3"), "Jp": (1, "Jm"), "Jm": (1, "Jp")}


def test_identity_map_gives_equal_expression():
    ident = {g: (1, g) for g in SL2}
    x = ex.mul(ex.at(1, "J3"), ex.exp(ex.at(2, "Jp")))
    y = ex.map_generators(x, ident)
    assert_allclose(ex.eval_hom(y, TWO_LEGS), ex.eval_hom(x, TWO_LEGS))


def test_sign_flip_map_on_j3():
    assert ex.map_generators(ex.at(1, "J3"), S2_MINUS) == ex.Scale(-1, ex.Atom(1, "J3"))


def test_scaling_map_collects_to_unit_coefficient():
    nu = 2.0
    rule = {"J3": (1, "J3"), "Jp": (nu, "Jp"), "Jm": (1 / nu, "Jm")}
    x = ex.mul(ex.at(1, "Jp"), ex.at(2, "Jm"))
    y = ex.map_generators(x, rule)
    coeff = np.prod([f.coeff for f in y.factors])
    assert coeff == 1
    assert_allclose(ex.eval_hom(y, TWO_LEGS), ex.eval_hom(x, TWO_LEGS))


def test_per_leg_map_leaves_other_legs():
    x = ex.mul(ex.at(1, "J3"), ex.at(2, "J3"))
    y = ex.map_generators(x, {1: S2_MINUS})
    assert_allclose(ex.eval_hom(y, TWO_LEGS), -ex.eval_hom(x, TWO_LEGS))


def test_map_with_missing_generator():
    with pytest.raises(ex.MissingAtomError):
        ex.map_generators(ex.at(1, "J3"), {"Jp": (1, "Jp")})


def test_relabel_and_leg_queries():
    x = ex.mul(ex.at(1, "J3"), ex.exp(ex.at(1, "Jp")))
    y = ex.relabel_legs(x, {1: 2})
    assert ex.legs_of(x) == {1} and ex.legs_of(y) == {2}
    assert ex.atoms_of(y) == {ex.Atom(2, "J3"), ex.Atom(2, "Jp")}


# -- properties ---------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(expressions(legs=(1,)))
def test_antihom_is_transpose_conjugated_hom(x):
    # reversing products equals transposing the atoms, evaluating, and transposing back
    transposed = ex.AtomAssignment.simple([{g: m.T for g, m in SL2.items()}])
    assert_allclose(ex.eval_antihom(x, ONE_LEG), ex.eval_hom(x, transposed).T, atol=1e-9)


@settings(max_examples=60, deadline=None)
@given(expressions())
def test_mixed_on_every_leg_equals_antihom(x):
    assert_allclose(ex.eval_mixed(x, TWO_LEGS, [1, 2]), ex.eval_antihom(x, TWO_LEGS), atol=1e-9)


@settings(max_examples=60, deadline=None)
@given(expressions())
def test_mixed_on_no_leg_equals_hom(x):
    assert_allclose(ex.eval_mixed(x, TWO_LEGS, []), ex.eval_hom(x, TWO_LEGS), atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(expressions(), expressions())
def test_hom_respects_products_and_sums(x, y):
    hx, hy = ex.eval_hom(x, TWO_LEGS), ex.eval_hom(y, TWO_LEGS)
    assert_allclose(ex.eval_hom(ex.mul(x, y), TWO_LEGS), hx @ hy, atol=1e-9)
    assert_allclose(ex.eval_hom(ex.add(x, y), TWO_LEGS), hx + hy, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(expressions())
def test_evaluation_returns_private_copies(x):
    a = ex.eval_hom(x, TWO_LEGS)
    a += 1.0
    b = ex.eval_hom(x, TWO_LEGS)
    assert_allclose(a - 1.0, b, atol=1e-12)
