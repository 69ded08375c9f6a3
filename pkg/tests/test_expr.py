from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercx.algebra import preset
from hypercx.errors import DomainError, ExprSyntaxError, NearSingular, UnknownSymbol, ZeroDivisorError
from hypercx.expr import Apply, BinOp, Coord, Neg, Num, Pow, Unit, Var, compile_expr, evaluate, parse, pretty

H4 = preset("four_real_hyperbolic")
EXAMPLE = "x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)"


def test_parse_four_real_example():
    tree = parse(EXAMPLE, H4)
    assert isinstance(tree, BinOp) and tree.op == "+"
    point = H4.element([1, 0, 1, 0], "rational")
    assert evaluate(tree, point).coeffs == (2, 0, 2, 0)


def test_syntax_error_points_at_stray_operator():
    with pytest.raises(ExprSyntaxError) as info:
        parse("1 + * j", H4)
    assert info.value.position == 4


def test_whole_variable_application():
    assert parse("exp(v)", H4) == Apply("exp", Var())


def test_precedence_and_associativity():
    alg = preset("complex")
    assert parse("1 - 2 - 3", alg) == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse("-x0^2", alg) == Neg(Pow(Coord(0), 2))
    assert parse("2*x0 + x1/3", alg) == BinOp("+", BinOp("*", Num(2), Coord(0)), BinOp("/", Coord(1), Num(3)))
    assert parse("3/4", alg) == Num(Fraction(3, 4))
    assert parse("0.5", alg) == Num(Fraction(1, 2))


def test_unknown_symbols():
    with pytest.raises(UnknownSymbol):
        parse("x4", H4)
    with pytest.raises(UnknownSymbol):
        parse("k", preset("complex"))
    with pytest.raises(UnknownSymbol):
        parse("C(v)", H4)
    with pytest.raises(UnknownSymbol):
        parse("log(v)", H4)


def test_unit_squares():
    h = preset("hyperbolic_complex")
    assert evaluate(parse("j^2", h), h.element([5, 7], "rational")).coeffs == (1, 0)
    q = preset("coquaternion")
    assert evaluate(parse("i*j + j*i", q), q.one("rational")).coeffs == (0, 0, 0, 0)


def test_exp_at_zero():
    alg = preset("double_complex")
    assert evaluate(parse("exp(v)", alg), alg.zero()).coeffs == pytest.approx((1, 0, 0, 0))


def test_division_errors():
    h = preset("hyperbolic_complex")
    with pytest.raises(ZeroDivisorError):
        evaluate(parse("1/v", h), h.element([1, 1], "rational"))
    with pytest.raises(NearSingular):
        evaluate(parse("1/v", h), h.element([1.0, 1.0005]), guard=1e-3)


def test_C_S_outside_double_complex_family():
    tree = parse("C(v)", preset("double_complex"))
    with pytest.raises(DomainError):
        evaluate(tree, H4.zero())


def test_right_division_in_coquaternions():
    q = preset("coquaternion")
    i, j = q.unit("i"), q.unit("j")
    got = evaluate(parse("i/j", q), q.zero())
    assert got.coeffs == pytest.approx((i * j).coeffs)  # j^-1 = j


def test_compile_expr():
    f = compile_expr("v*v", preset("complex"))
    assert f(preset("complex").element([0.0, 1.0])).coeffs == pytest.approx((-1, 0))


# -- property tests --------------------------------------------------------

atoms = st.one_of(
    st.fractions(min_value=0, max_value=20, max_denominator=9).map(Num),
    st.sampled_from(["i", "j", "k"]).map(Unit),
    st.integers(0, 3).map(Coord),
    st.just(Var()),
)


def extend(children):
    return st.one_of(
        children.map(Neg),
        st.tuples(st.sampled_from("+-*/"), children, children).map(lambda t: BinOp(*t)),
        st.tuples(children, st.integers(0, 4)).map(lambda t: Pow(*t)),
        st.tuples(st.sampled_from(["exp", "sin", "cos", "cosh", "sinh"]), children).map(lambda t: Apply(*t)),
    )


trees = st.recursive(atoms, extend, max_leaves=12)
Q = preset("coquaternion")


@given(trees)
@settings(max_examples=300)
def test_parse_pretty_round_trip(tree):
    text = pretty(tree)
    assert parse(text, Q) == tree
    assert pretty(parse(text, Q)) == text
    # extra whitespace between tokens is ignored; "p/q" without spaces is one token
    padded = text.replace(" ", "   ").replace("(", " ( ").replace(")", " ) ")
    assert parse(padded, Q) == tree


poly_trees = st.recursive(
    atoms,
    lambda c: st.one_of(c.map(Neg), st.tuples(st.sampled_from("+-*"), c, c).map(lambda t: BinOp(*t))),
    max_leaves=10,
)


@given(poly_trees, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
@settings(max_examples=150)
def test_float_and_rational_modes_agree(tree, coeffs):
    exact = evaluate(tree, Q.element(coeffs, "rational")).coeffs
    approx = evaluate(tree, Q.element([float(c) for c in coeffs])).coeffs
    for e, a in zip(exact, approx):
        assert abs(float(e) - a) <= 1e-12 * (1 + abs(float(e)))
