import itertools
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercx.algebra import (
    PRESET_NAMES,
    AlgebraDescriptor,
    bc_dc_isomorphism,
    conjugate,
    cyclic_algebra,
    inverse,
    is_zero_divisor,
    minkowski_intervals,
    mul,
    preset,
    scalar_product_h4,
    tower_algebra,
)
from hypercx.errors import (
    AlgebraMismatch,
    InvalidDimension,
    UnknownConjugation,
    UnknownPreset,
    ZeroDivisorError,
)

small = st.integers(-4, 4).map(Fraction)


def rational_element(alg):
    return st.lists(small, min_size=alg.dim, max_size=alg.dim).map(lambda c: alg.element(c, "rational"))


def test_cyclic_complex_and_hyperbolic():
    c = cyclic_algebra(2, -1)
    assert c.basis_product(1, 1) == (-1, 0)
    h = cyclic_algebra(2, 1)
    a = h.element([1, 1], "rational")
    b = h.element([1, -1], "rational")
    assert (a * b).coeffs == (0, 0)


def test_four_real_hyperbolic_j_squared_squared():
    h = cyclic_algebra(4, 1)
    j2 = h.basis(2, "rational")
    assert (j2 * j2).coeffs == (1, 0, 0, 0)


def test_cyclic_rejects_small_dimension():
    with pytest.raises(InvalidDimension):
        cyclic_algebra(1, 1)


def test_unknown_preset():
    with pytest.raises(UnknownPreset):
        preset("octonion")


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_preset_invariants(name):
    inv = preset(name).check_invariants()
    assert all(inv.values()), inv


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_commutativity_flags(name):
    alg = preset(name)
    assert alg.commutative == (name != "coquaternion")


def test_coquaternion_anticommutes():
    q = preset("coquaternion")
    i, j, k = (q.unit(s, "rational") for s in "ijk")
    assert (i * j).coeffs == k.coeffs
    assert (j * i).coeffs == (-k).coeffs
    assert (j * j).coeffs == (k * k).coeffs == (1, 0, 0, 0)
    assert (i * i).coeffs == (-1, 0, 0, 0)


def test_bicomplex_units_commute():
    b = preset("bicomplex")
    j1, j2 = b.unit("j1", "rational"), b.unit("j2", "rational")
    assert (j1 * j2).coeffs == (j2 * j1).coeffs


def test_double_complex_j_squared_is_i():
    d = preset("double_complex")
    j = d.unit("j", "rational")
    assert (j * j).coeffs == d.unit("i", "rational").coeffs


def test_mul_examples():
    h = preset("hyperbolic_complex")
    assert mul(h.element([0, 1], "rational"), h.element([0, 1], "rational")).coeffs == (1, 0)
    with pytest.raises(AlgebraMismatch):
        mul(h.one(), preset("complex").one())


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_associativity_on_elements(data):
    alg = preset(data.draw(st.sampled_from(PRESET_NAMES)))
    a, b, c = (data.draw(rational_element(alg)) for _ in range(3))
    assert ((a * b) * c).coeffs == (a * (b * c)).coeffs
    assert (a * alg.one("rational")).coeffs == a.coeffs


def test_conjugate_examples():
    h = preset("hyperbolic_complex")
    assert conjugate(h.element([3, 4], "rational"), "star").coeffs == (3, -4)
    q = preset("coquaternion")
    x = q.element([1, 2, 3, 4], "rational")
    assert conjugate(x, "star").coeffs == (1, 2, -3, -4)
    with pytest.raises(UnknownConjugation):
        conjugate(x, "nope")


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_conjugation_is_involution(data):
    alg = preset(data.draw(st.sampled_from(PRESET_NAMES)))
    a = data.draw(rational_element(alg))
    for c in alg.conjugations:
        assert conjugate(conjugate(a, c.name), c.name).coeffs == a.coeffs


def test_inverse_examples():
    h = preset("hyperbolic_complex")
    assert inverse(h.one("rational")).coeffs == (1, 0)
    assert inverse(h.element([2, 1], "rational")).coeffs == (Fraction(2, 3), Fraction(-1, 3))
    with pytest.raises(ZeroDivisorError):
        inverse(h.element([1, 1], "rational"))


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_inverse_is_two_sided(data):
    alg = preset(data.draw(st.sampled_from(PRESET_NAMES)))
    a = data.draw(rational_element(alg))
    try:
        b = inverse(a)
    except ZeroDivisionError:
        assert is_zero_divisor(a) or not any(a.coeffs)
        return
    one = alg.one("rational").coeffs
    assert (a * b).coeffs == one and (b * a).coeffs == one


def test_zero_divisor_examples():
    hb = preset("hyperbolic_bicomplex")
    assert is_zero_divisor(hb.element([1, 0, 1, 0], "rational"))
    hdc = preset("hyperbolic_double_complex")
    assert is_zero_divisor(hdc.element([1, 0, 1, 0], "rational"))
    assert not is_zero_divisor(preset("hyperbolic_complex").element([2, 1], "rational"))


def test_float_zero_divisor_tolerance_scales():
    h = preset("hyperbolic_complex")
    assert is_zero_divisor(h.element([1e6, 1e6]))
    assert not is_zero_divisor(h.element([1e-3, 0.0]))


def test_zeta_squared_equal_eta_squared_gives_zero_divisor():
    # the converse direction fails (see the modulus test below)
    hb = preset("hyperbolic_bicomplex")
    hc = preset("hyperbolic_complex")
    for x in itertools.product(range(-2, 3), repeat=4):
        if not any(x):
            continue
        zeta, eta = hc.element(x[:2], "rational"), hc.element(x[2:], "rational")
        if all(c == 0 for c in (zeta * zeta - eta * eta).coeffs):
            assert is_zero_divisor(hb.element(x, "rational"))


def test_zero_divisor_iff_zeta_eta_form_has_null_modulus():
    hb = preset("hyperbolic_bicomplex")
    hc = preset("hyperbolic_complex")
    for x in itertools.product(range(-2, 3), repeat=4):
        if not any(x):
            continue
        zeta, eta = hc.element(x[:2], "rational"), hc.element(x[2:], "rational")
        a, b = (zeta * zeta - eta * eta).coeffs
        assert is_zero_divisor(hb.element(x, "rational")) == (a * a == b * b)


def test_one_plus_j1_is_zero_divisor_with_nonzero_form():
    hb = preset("hyperbolic_bicomplex")
    a = hb.element([1, 1, 0, 0], "rational")
    assert is_zero_divisor(a)
    assert (a * hb.element([1, -1, 0, 0], "rational")).coeffs == (0, 0, 0, 0)


def test_alpha_times_star_is_zeta_squared_minus_eta_squared():
    hb = preset("hyperbolic_bicomplex")
    hc = preset("hyperbolic_complex")
    rng = np.random.default_rng(3)
    for x in rng.integers(-6, 7, size=(50, 4)):
        x = [Fraction(int(v)) for v in x]
        a = hb.element(x, "rational")
        zeta, eta = hc.element(x[:2], "rational"), hc.element(x[2:], "rational")
        form = zeta * zeta - eta * eta
        assert (a * conjugate(a, "star")).coeffs == (form.coeffs[0], form.coeffs[1], 0, 0)


def test_isomorphism_examples():
    d = preset("double_complex")
    assert bc_dc_isomorphism(d.one()).coeffs == pytest.approx((1, 0, 0, 0))
    phi_j = bc_dc_isomorphism(d.unit("j"))
    assert (phi_j * phi_j).coeffs == pytest.approx(bc_dc_isomorphism(d.unit("i")).coeffs, abs=1e-15)


@given(st.lists(st.floats(-3, 3), min_size=8, max_size=8))
def test_isomorphism_is_ring_map_and_invertible(c):
    d = preset("double_complex")
    a, b = d.element(c[:4]), d.element(c[4:])
    lhs = bc_dc_isomorphism(a * b)
    rhs = bc_dc_isomorphism(a) * bc_dc_isomorphism(b)
    assert (lhs - rhs).norm() < 1e-12
    assert (bc_dc_isomorphism(bc_dc_isomorphism(a)) - a).norm() < 1e-12
    with pytest.raises(AlgebraMismatch):
        bc_dc_isomorphism(preset("coquaternion").one())


def test_scalar_product_h4():
    h = preset("four_real_hyperbolic")
    assert scalar_product_h4(h.one(), h.one()) == 1
    e1 = h.element([0, 1, 0, 0])
    assert scalar_product_h4(e1, e1) == 1
    x = h.element([1, 1, 0, 0])
    assert scalar_product_h4(x, x) == 0


def test_minkowski_intervals():
    h = preset("four_real_hyperbolic")
    assert minkowski_intervals(h.element([1, 0, 0, 0], "rational")) == (1, 0)
    assert minkowski_intervals(h.element([1, 0, 1, 0], "rational")) == (0, 0)
    assert minkowski_intervals(h.element([3, 2, 1, 1], "rational")) == (8, 3)


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_json_round_trip(name):
    alg = preset(name)
    back = AlgebraDescriptor.from_json(alg.to_json())
    assert back.table == alg.table
    assert json.loads(back.to_json()) == json.loads(alg.to_json())


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_tower_levels_are_associative(level):
    for hyperbolic in (False, True):
        alg = tower_algebra(level, hyperbolic)
        assert alg.dim == 2 ** level
        assert alg.is_associative()
