import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercx import jets
from hypercx.algebra import PRESET_NAMES, preset
from hypercx.expr import evaluate, parse
from hypercx.jets import Jet2, jet_inverse, partials, seed
from hypercx.suite import central_difference_gap, random_expression

H4 = preset("four_real_hyperbolic")


def table(text, alg, point):
    return partials(evaluate(parse(text, alg), seed(alg.element(point))))


def test_seed_keeps_values():
    p = H4.element([0.3, -1.0, 2.0, 0.5])
    assert [c.value for c in seed(p).coeffs] == list(p.coeffs)


def test_mixed_partial_of_bilinear_term():
    t = table("x0*x1", H4, [0.3, 0.7, 0, 0])
    assert t.second[0, 0, 1] == t.second[0, 1, 0] == 1


def test_exp_gradient_at_zero():
    t = table("exp(v)", H4, [0, 0, 0, 0])
    assert t.first[0, 0] == pytest.approx(1.0, abs=1e-15)


def test_coordinate_has_single_unit_derivative():
    t = table("x2", H4, [1, 2, 3, 4])
    expected = np.zeros((4, 4))
    expected[0, 2] = 1
    assert np.array_equal(t.first, expected)
    assert not t.second.any()


def test_second_partial_of_sum_of_squares():
    t = table("x0^2 + x2^2", H4, [0.4, 0.1, -0.3, 0.2])
    assert t.second[0, 0, 0] == 2


def test_scalar_functions_match_closed_derivatives():
    x = Jet2.variable(0.7, 0, 1)
    for f, d1, d2 in [(jets.sin, math.cos, lambda v: -math.sin(v)), (jets.cosh, math.sinh, math.cosh),
                      (jets.sqrt, lambda v: 0.5 / math.sqrt(v), lambda v: -0.25 * v ** -1.5)]:
        y = f(x)
        assert y.grad[0] == pytest.approx(d1(0.7), rel=1e-15)
        assert y.hess[0, 0] == pytest.approx(d2(0.7), rel=1e-15)


def test_division_guard():
    with pytest.raises(ZeroDivisionError):
        Jet2.variable(1e-301, 0, 1).reciprocal()


@pytest.mark.parametrize("name", ["hyperbolic_complex", "double_complex", "coquaternion"])
def test_jet_inverse_is_second_order_exact(name):
    alg = preset(name)
    point = seed(alg.element(np.linspace(0.9, -0.4, alg.dim).tolist()))
    inv = jet_inverse(point)
    prod = partials(inv * point)
    one = alg.one().coeffs
    assert np.allclose(prod.value, one, atol=1e-14)
    assert np.allclose(prod.first, 0, atol=1e-13)
    assert np.allclose(prod.second, 0, atol=1e-12)


@given(st.lists(st.floats(-1, 1), min_size=8, max_size=8))
@settings(max_examples=50, deadline=None)
def test_product_rule(c):
    m = 2
    a = [Jet2(c[0], np.array(c[1:3]), np.array([[c[3], c[4]], [c[4], c[5]]])), Jet2.variable(c[6], 1, m)]
    f, g = a[0], a[1] + c[7]
    h = f * g
    assert np.allclose(h.grad, f.grad * g.value + f.value * g.grad, atol=1e-12)
    expected = f.hess * g.value + np.outer(f.grad, g.grad) + np.outer(g.grad, f.grad) + f.value * g.hess
    assert np.allclose(h.hess, expected, atol=1e-12)


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_partials_match_central_differences(s):
    rng = np.random.default_rng(s)
    names = [n for n in PRESET_NAMES if n != "four_complex"]
    alg = preset(names[s % len(names)])
    text = random_expression(rng, alg)
    point = rng.uniform(-1, 1, alg.dim)
    try:
        gap = central_difference_gap(text, alg, point, h=1e-4)
    except ArithmeticError:
        return
    assert gap < 1e-6, text


@pytest.mark.parametrize("text", ["exp(v)*sin(x1)", "v^3 - j*v", "cosh(v)/(3 + v*v)"])
def test_hessians_are_symmetric(text):
    t = table(text, H4, [0.2, -0.5, 0.3, 0.1])
    assert np.allclose(t.second, np.swapaxes(t.second, 1, 2), atol=1e-13)
