import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercx.algebra import PRESET_NAMES, is_zero_divisor, preset
from hypercx.errors import InvalidDimension
from hypercx.matrix_rep import apostolova_residual, det_bounds, det_bounds_check, det_h, represent

H4 = preset("four_real_hyperbolic")
ints4 = st.lists(st.integers(-5, 5), min_size=4, max_size=4)


def h4(c):
    return H4.element([Fraction(v) for v in c], "rational")


def test_represent_one_is_identity():
    for name in PRESET_NAMES:
        alg = preset(name)
        rep = represent(alg.one("rational"))
        assert np.array_equal(rep.as_array(), np.eye(alg.dim))


def test_circulant_layout():
    rows = represent(h4([10, 11, 12, 13])).rows
    assert rows[0] == (10, 11, 12, 13)
    assert rows[1] == (13, 10, 11, 12)


def test_hyperbolic_plane_layout():
    rep = represent(preset("hyperbolic_complex").element([3, 2], "rational"))
    assert rep.rows == ((3, 2), (2, 3))
    assert rep.det() == 3 ** 2 - 2 ** 2


@pytest.mark.parametrize("coeffs, det", [([1, 0, 0, 0], 1), ([1, 1, 0, 0], 0), ([1, 0, 2, 0], 9)])
def test_det_h_examples(coeffs, det):
    assert det_h(h4(coeffs)) == det


def test_det_h_rejects_other_algebras():
    with pytest.raises(InvalidDimension):
        det_h(preset("four_real_elliptic").one("rational"))


@pytest.mark.parametrize("coeffs", [[1, 0, 0, 0], [1, 1, 0, 0], [2, 1, 1, 1]])
def test_identity_examples(coeffs):
    assert apostolova_residual(h4(coeffs)) == 0


@given(ints4)
def test_identity_and_bounds(c):
    x = h4(c)
    assert apostolova_residual(x) == 0
    assert det_bounds_check(x)


@given(ints4)
def test_upper_bound_is_attained_when_odd_parts_cancel(c):
    c[3] = c[1]
    b = det_bounds(h4(c))
    assert b["det"] == b["upper"]


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_orientation_on_basis_pairs(name):
    alg = preset(name)
    for a, b in itertools.product(range(alg.dim), repeat=2):
        ea, eb = alg.basis(a, "rational"), alg.basis(b, "rational")
        assert represent(ea * eb) == represent(eb) @ represent(ea)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_determinant_is_multiplicative(data):
    alg = preset(data.draw(st.sampled_from(PRESET_NAMES)))
    draw = st.lists(st.integers(-3, 3), min_size=alg.dim, max_size=alg.dim)
    a = alg.element(data.draw(draw), "rational")
    b = alg.element(data.draw(draw), "rational")
    assert represent(a * b).det() == represent(a).det() * represent(b).det()


def test_zero_determinant_iff_zero_divisor():
    for c in itertools.product(range(-2, 3), repeat=4):
        if any(c):
            x = h4(c)
            assert (det_h(x) == 0) == is_zero_divisor(x)
