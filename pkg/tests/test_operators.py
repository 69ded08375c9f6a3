import numpy as np
import pytest

from hypercx.algebra import preset
from hypercx.errors import AllPointsRejected, DomainError, UnknownOperator
from hypercx.operators import (
    CATALOG,
    SamplingSpec,
    apply,
    catalog,
    dbar,
    differential_decomposition_check,
    harmonicity_check,
    holomorphy_check,
    laplacian,
    operator,
    partial,
)

COMMUTATIVE = [n for n in CATALOG if n != "coquaternion"]
FAST = SamplingSpec(points=16, seed=1)


def at(name, *coeffs):
    return preset(name).element(list(coeffs))


def test_catalog_names():
    assert set(catalog("complex").dbar) == {"dz", "dzbar"}
    assert set(catalog("hyperbolic_complex").dbar) == {"dz", "dzstar"}
    assert set(catalog("four_real_hyperbolic").dbar) == {"dalpha", "dbeta", "dalphastar", "dbetastar"}
    for name in ("bicomplex", "double_complex", "hyperbolic_bicomplex"):
        assert set(catalog(name).dbar) == {"dalpha", "dalphastar"}
    assert set(catalog("hyperbolic_double_complex").dbar) == {"dq", "dqstar"}
    assert set(catalog("coquaternion").dbar) == {"dq", "dqbar", "dqstar", "dqbarstar"}
    with pytest.raises(UnknownOperator):
        dbar("complex", "dzstar")
    with pytest.raises(UnknownOperator):
        laplacian("complex", "wave")


def test_operator_orders_and_sides():
    assert dbar("complex", "dzbar").order == 1
    assert laplacian("double_complex").order == 2
    assert dbar("coquaternion", "dqstar").side == "right"
    assert dbar("bicomplex", "dalphastar").side == "left"


def test_hyperbolic_dzstar_examples():
    op = dbar("hyperbolic_complex", "dzstar")
    p = at("hyperbolic_complex", 0.7, -0.2)
    assert apply(op, "v", p).norm() == 0
    assert apply(op, "x0 - j*x1", p).coeffs == pytest.approx((1, 0))
    assert apply(op, "5/3", p).norm() == 0


def test_double_complex_exp_is_holomorphic_and_harmonic():
    p = at("double_complex", 0.3, -0.4, 0.5, 0.1)
    assert apply(dbar("double_complex", "dalphastar"), "exp(v)", p).norm() < 1e-13
    assert apply(laplacian("double_complex", "delta_plus"), "exp(v)", p).norm() < 1e-12


def test_laplacian_examples():
    assert apply(laplacian("complex"), "x0^2 - x1^2", at("complex", 0.3, 1.2)).norm() == 0
    wave02 = laplacian("four_real_hyperbolic", "wave02")
    assert apply(wave02, "x0^2 + x2^2", at("four_real_hyperbolic", 1, 2, 3, 4)).norm() == 0


def test_apply_examples_on_identity_functions():
    assert apply(dbar("hyperbolic_bicomplex", "dalphastar"), "v", at("hyperbolic_bicomplex", 1, 2, 3, 4)).norm() == 0
    assert apply(dbar("coquaternion", "dqstar"), "v", at("coquaternion", 1, 2, 3, 4)).norm() == 0


@pytest.mark.parametrize("name", list(CATALOG))
def test_holomorphy_operators_kill_identity_and_constants(name):
    cat = catalog(name)
    p = preset(name).element(np.linspace(0.3, 1.1, cat.algebra.dim).tolist())
    for op_name in cat.holomorphy:
        op = cat.dbar[op_name]
        assert apply(op, "v", p).norm() < 1e-15
        assert apply(op, "2 - 7/5", p).norm() == 0


@pytest.mark.parametrize("name", COMMUTATIVE)
@pytest.mark.parametrize("expr", ["v^3 - 2*v", "exp(v)", "sin(v)*cosh(v)", "1/(3 + v*v)"])
def test_functions_of_the_variable_are_holomorphic(name, expr):
    assert holomorphy_check(name, expr, FAST).passed


def test_conjugate_variable_fails_with_unit_residual():
    v = holomorphy_check("hyperbolic_complex", "x0 - j*x1", FAST)
    assert not v.passed
    assert v.residuals["dzstar"] == pytest.approx(1.0)


def test_four_real_example_is_holomorphic():
    expr = "x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)"
    v = holomorphy_check("four_real_hyperbolic", expr, SamplingSpec(points=64))
    assert v.passed and v.max_residual < 1e-12 and v.points == 64


def test_exp_holomorphic_on_hyperbolic_double_complex():
    assert holomorphy_check("hyperbolic_double_complex", "exp(v)", FAST).passed


@pytest.mark.parametrize("name", COMMUTATIVE)
def test_exp_is_harmonic(name):
    assert harmonicity_check(name, "exp(v)", FAST).passed


def test_sampler_rejects_singular_points():
    v = holomorphy_check("hyperbolic_complex", "1/v", SamplingSpec(points=32, guard=0.05))
    assert v.passed and v.points == 32
    with pytest.raises(AllPointsRejected):
        holomorphy_check("hyperbolic_complex", "1/(v - v)", SamplingSpec(points=4, max_attempts=2))


def test_hyperbolic_factorization():
    alg = preset("hyperbolic_complex")
    lhs = dbar(alg, "dz") @ dbar(alg, "dzstar")
    assert lhs.same_as(0.25 * laplacian(alg, "wave"))
    p = alg.element([0.4, -1.3])
    f = "x0^3*x1 + sin(x1)*exp(x0) + j*x0*x1^2"
    assert (apply(lhs, f, p) - 0.25 * apply(laplacian(alg, "wave"), f, p)).norm() < 1e-8


def test_complex_factorization():
    alg = preset("complex")
    assert (dbar(alg, "dzbar") @ dbar(alg, "dz")).same_as(0.25 * laplacian(alg))


def test_partial_operator():
    alg = preset("four_real_hyperbolic")
    p = alg.element([1.0, 2.0, 3.0, 4.0])
    assert apply(partial(alg, 1, 3), "x1*x3*j", p).coeffs == pytest.approx((0, 1, 0, 0))


# -- coquaternions ----------------------------------------------------------

COQ_EXAMPLES = ["v", "(x0 + i*x1)^2 + (x2 + i*x3)^2 + 2*(x0 + i*x1)*(x2 + i*x3)*j"]


@pytest.mark.parametrize("expr", COQ_EXAMPLES)
def test_coquaternion_examples_satisfy_both_systems(expr):
    v = holomorphy_check("coquaternion", expr, FAST)
    assert v.passed, v.residuals
    assert harmonicity_check("coquaternion", expr, FAST).passed


def test_conjugate_companion_is_trivial_for_holomorphic_parts():
    # f0, f1 functions of (z, w) only: the conjugate system holds identically
    expr = "exp(x0 + i*x1)*(x2 + i*x3) + sin(x2 + i*x3)*j"
    v = holomorphy_check("coquaternion", expr, FAST)
    assert v.normalized["dqbarstar"] < 1e-12


def test_whole_variable_powers_are_not_coquaternion_holomorphic():
    v = holomorphy_check("coquaternion", "v^2", FAST)
    assert not v.passed
    assert v.normalized["dqstar"] > 1e-3


# -- differential decomposition ---------------------------------------------

@pytest.mark.parametrize("name, expr", [
    ("complex", "v^2"),
    ("hyperbolic_complex", "exp(v)*x0"),
    ("hyperbolic_bicomplex", "v^2"),
    ("bicomplex", "v*x1 + x3^2"),
    ("double_complex", "sin(v)"),
    ("hyperbolic_double_complex", "v^3 + x1*x2"),
    ("four_real_hyperbolic", "x0*x1*x2*x3 + v^2"),
    ("complex", "3"),
])
def test_differential_decomposition(name, expr):
    rng = np.random.default_rng(5)
    alg = preset(name)
    for _ in range(5):
        p = alg.element(rng.uniform(-1, 1, alg.dim).tolist())
        assert differential_decomposition_check(name, expr, p, rng.normal(size=alg.dim)) < 1e-12


def test_no_decomposition_for_coquaternions():
    q = preset("coquaternion")
    with pytest.raises(DomainError):
        differential_decomposition_check(q, "v", q.one(), [1, 0, 0, 0])


def test_operator_lookup_covers_extras():
    assert operator("bicomplex", "dw").order == 1
    assert operator("hyperbolic_double_complex", "delta_h").order == 2
