import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercx.algebra import PRESET_NAMES, preset
from hypercx.special import (
    OMEGA,
    PERIOD,
    C,
    C_defining_series,
    S,
    S_defining_series,
    dC_dS_identities,
    euler_split,
    exp_closed_form,
    exp_double_complex,
    exp_hyperbolic_dc,
    exp_series,
    sin_series,
    cos_series,
    terms_needed,
)

small = st.floats(-1.5, 1.5, allow_nan=False)


def test_euler_split_example():
    h = preset("hyperbolic_complex")
    got = exp_series(h.element([0.0, 1.0]))
    assert got.coeffs == pytest.approx((math.cosh(1), math.sinh(1)), rel=1e-14)
    assert euler_split(1.0).coeffs == pytest.approx(got.coeffs, rel=1e-14)


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_exp_of_sum_is_product_for_commuting_summands(data):
    alg = preset(data.draw(st.sampled_from([n for n in PRESET_NAMES if n != "coquaternion"])))
    a = alg.element([data.draw(small) for _ in range(alg.dim)])
    b = alg.element([data.draw(small) for _ in range(alg.dim)])
    lhs, rhs = exp_series(a + b), exp_series(a) * exp_series(b)
    assert (lhs - rhs).norm() <= 1e-11 * (1 + rhs.norm())


@given(st.lists(small, min_size=4, max_size=4))
@settings(max_examples=60, deadline=None)
def test_exp_of_negative_is_inverse_in_coquaternions(c):
    q = preset("coquaternion")
    a = q.element(c)
    assert (exp_series(a) * exp_series(-a) - q.one()).norm() < 1e-11


def test_sin_squared_plus_cos_squared():
    d = preset("double_complex")
    a = d.element([0.2, -0.4, 0.7, 0.1])
    s, c = sin_series(a), cos_series(a)
    assert (s * s + c * c - d.one()).norm() < 1e-13


def test_truncation_bound_grows_with_norm():
    assert terms_needed(0.0, 1e-15) <= terms_needed(1.0, 1e-15) < terms_needed(10.0, 1e-15)


# -- C and S ------------------------------------------------------------------

def test_C_S_at_zero():
    assert C(0) == 1 and S(0) == 0


def test_C_at_omega_pi():
    assert abs(C(OMEGA * math.pi) + 1) < 1e-14


@given(st.complex_numbers(max_magnitude=4, allow_nan=False, allow_infinity=False))
def test_C_squared_minus_i_S_squared_is_one_not_zero(w):
    assert abs(C(w) ** 2 - 1j * S(w) ** 2 - 1) < 1e-10 * (1 + abs(C(w)) ** 2)


@given(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False))
def test_closed_forms_match_defining_series(w):
    scale = 1 + abs(C(w)) + abs(S(w))
    assert abs(C(w) - C_defining_series(w)) < 1e-12 * scale
    assert abs(S(w) - S_defining_series(w)) < 1e-12 * scale


def test_frozen_series_values():
    w = 0.7 - 1.3j
    assert C(w) == pytest.approx(1.985069997625710595 - 0.796570660306999624j, abs=1e-14)
    assert S(w) == pytest.approx(0.612961035750073382 - 1.881015222925230786j, abs=1e-14)


def test_period():
    w = 0.3 + 0.2j
    assert abs(C(w + PERIOD) - C(w)) < 1e-12 and abs(S(w + PERIOD) - S(w)) < 1e-12
    wrong = math.sqrt(2) * math.pi * (1 - 1j)
    assert abs(C(w + wrong) - C(w)) > 1


@pytest.mark.parametrize("w", [0.0, 0.5 - 0.25j, -1.2 + 0.8j, 2j])
def test_derivative_identities(w):
    res = dC_dS_identities(w)
    assert max(res.values()) < 1e-12, res


# -- closed-form exponentials -------------------------------------------------

@pytest.mark.parametrize("name", ["hyperbolic_complex", "double_complex",
                                  "hyperbolic_double_complex", "four_real_hyperbolic"])
def test_closed_form_matches_series(name):
    alg = preset(name)
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = alg.element(rng.uniform(-1.5, 1.5, alg.dim).tolist())
        want = exp_series(a)
        assert (exp_closed_form(a) - want).norm() < 1e-12 * (1 + want.norm())


def test_exp_of_j_squared_multiple():
    h = preset("hyperbolic_double_complex")
    s = 0.8
    got = exp_hyperbolic_dc(h.element([0, 0, s, 0]))
    assert got.coeffs == pytest.approx((math.cosh(s), 0, math.sinh(s), 0), abs=1e-15)


def test_double_complex_exp_splits_into_C_and_S():
    d = preset("double_complex")
    z, w = 0.3 - 0.1j, -0.6 + 0.9j
    got = exp_double_complex(d.element([z.real, z.imag, w.real, w.imag]))
    ez = cmath.exp(z)
    assert complex(*got.coeffs[:2]) == pytest.approx(ez * C(w))
    assert complex(*got.coeffs[2:]) == pytest.approx(ez * S(w))


def test_no_closed_form_for_coquaternions():
    assert exp_closed_form(preset("coquaternion").one()) is None
