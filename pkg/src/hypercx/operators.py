"""Catalog of d-bar and Laplace-type operators, applied through jets.

Every operator is stored over the real coordinates ``x0 .. x{n-1}`` as a
sum of terms ``left * d^I f * right`` with exact rational algebra
coefficients.  Right coefficients only occur in the coquaternions, where
``df/dw * j`` is not ``j * df/dw``.

Wirtinger derivatives along a pair of coordinates ``(a, b)`` with inner
unit ``u`` (``u^2 = s``) are ``1/2 (d_a + s u d_b)`` and ``1/2 (d_a - s u d_b)``;
for ``s = -1`` this is the usual complex pair, for ``s = +1`` the hyperbolic one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

import numpy as np

from .algebra import AlgebraDescriptor, Element, preset
from .errors import AllPointsRejected, DomainError, UnknownOperator
from .expr import Expr, evaluate, parse
from .jets import Partials, partials, seed

HALF = Fraction(1, 2)

Function = Union[Expr, str, Callable[[Element], Element]]


@dataclass(frozen=True)
class Term:
    left: Element
    index: tuple[int, ...]
    right: Element | None = None  # None means the unit


@dataclass(frozen=True)
class LinDiffOp:
    algebra: AlgebraDescriptor
    name: str
    terms: tuple[Term, ...]

    @property
    def order(self) -> int:
        return max((len(t.index) for t in self.terms), default=0)

    @property
    def side(self) -> str:
        return "right" if any(t.right is not None for t in self.terms) else "left"

    def renamed(self, name: str) -> "LinDiffOp":
        return LinDiffOp(self.algebra, name, self.terms)

    def __add__(self, other: "LinDiffOp") -> "LinDiffOp":
        return _normalize(self.algebra, self.name, self.terms + other.terms)

    def __neg__(self) -> "LinDiffOp":
        return LinDiffOp(self.algebra, self.name, tuple(Term(-t.left, t.index, t.right) for t in self.terms))

    def __sub__(self, other: "LinDiffOp") -> "LinDiffOp":
        return self + (-other)

    def __rmul__(self, c) -> "LinDiffOp":
        """Left coefficient: ``c * op``."""
        c = _coef(self.algebra, c)
        return _normalize(self.algebra, self.name, tuple(Term(c * t.left, t.index, t.right) for t in self.terms))

    def times_right(self, c) -> "LinDiffOp":
        """Right coefficient: ``(op f) * c``."""
        c = _coef(self.algebra, c)
        return _normalize(
            self.algebra, self.name,
            tuple(Term(t.left, t.index, c if t.right is None else t.right * c) for t in self.terms),
        )

    def __matmul__(self, other: "LinDiffOp") -> "LinDiffOp":
        """Composition ``self o other``: lefts multiply in order, rights in reverse."""
        out = []
        for a in self.terms:
            for b in other.terms:
                right = _mul_opt(b.right, a.right)
                out.append(Term(a.left * b.left, tuple(sorted(a.index + b.index)), right))
        return _normalize(self.algebra, f"{self.name}.{other.name}", tuple(out))

    def key(self) -> dict:
        """Canonical map (index, right coeffs) -> left coeffs, for equality tests."""
        return {(t.index, _right_key(t.right)): t.left.coeffs for t in self.terms}

    def same_as(self, other: "LinDiffOp") -> bool:
        return self.algebra == other.algebra and self.key() == other.key()

    def describe(self) -> list[dict]:
        return [
            {
                "left": [str(c) for c in t.left.coeffs],
                "derivative": list(t.index),
                "right": None if t.right is None else [str(c) for c in t.right.coeffs],
            }
            for t in self.terms
        ]


def _mul_opt(a: Element | None, b: Element | None) -> Element | None:
    if a is None:
        return b
    if b is None:
        return a
    return a * b


def _right_key(r: Element | None):
    return None if r is None else r.coeffs


def _coef(alg: AlgebraDescriptor, c) -> Element:
    if isinstance(c, Element):
        return c
    return alg.one("rational").scale(Fraction(c))


def _normalize(alg: AlgebraDescriptor, name: str, terms) -> LinDiffOp:
    acc: dict = {}
    rights: dict = {}
    for t in terms:
        right = t.right
        if right is not None and right == alg.one("rational"):
            right = None
        k = (t.index, _right_key(right))
        acc[k] = acc[k] + t.left if k in acc else t.left
        rights[k] = right
    out = tuple(
        Term(left, k[0], rights[k])
        for k, left in sorted(acc.items(), key=lambda kv: (len(kv[0][0]), kv[0][0], str(kv[0][1])))
        if not left.is_zero()
    )
    return LinDiffOp(alg, name, out)


def partial(alg: AlgebraDescriptor, *index: int) -> LinDiffOp:
    return LinDiffOp(alg, "d" + "".join(map(str, index)), (Term(alg.one("rational"), tuple(sorted(index))),))


def wirtinger(alg: AlgebraDescriptor, unit: int, square: int, a: int, b: int, conj: bool) -> LinDiffOp:
    u = alg.basis(unit, "rational")
    sign = -square if conj else square
    op = partial(alg, a) + (u.scale(Fraction(sign)) * partial(alg, b))
    return HALF * op


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class Pair:
    """A Wirtinger variable over coordinates (a, b) with inner unit u, u^2 = s."""

    unit: int
    square: int
    a: int
    b: int


@dataclass
class Catalog:
    algebra: AlgebraDescriptor
    dbar: dict[str, LinDiffOp]
    laplacians: dict[str, LinDiffOp]
    holomorphy: tuple[str, ...]
    pairs: tuple[Pair, ...]
    # differential decomposition: (operator name, coefficient/coordinate list of dV)
    decomposition: tuple[tuple[str, tuple[tuple[Element, int], ...]], ...] = field(default=())
    extras: dict[str, LinDiffOp] = field(default_factory=dict)


def _dv(alg: AlgebraDescriptor, parts) -> tuple[tuple[Element, int], ...]:
    """Differential form sum c_k dx_k from (basis index, sign, coordinate) triples."""
    return tuple((alg.basis(e, "rational").scale(Fraction(s)), k) for e, s, k in parts)


def _complex_line(name: str, unit: int, square: int, plus: str, minus: str) -> Catalog:
    alg = preset(name)
    d = wirtinger(alg, unit, square, 0, 1, False).renamed(plus)
    db = wirtinger(alg, unit, square, 0, 1, True).renamed(minus)
    lap = partial(alg, 0, 0) + (-square) * partial(alg, 1, 1)
    lap_name = "laplace" if square < 0 else "wave"
    decomposition = (
        (plus, _dv(alg, [(0, 1, 0), (unit, 1, 1)])),
        (minus, _dv(alg, [(0, 1, 0), (unit, -1, 1)])),
    )
    return Catalog(alg, {plus: d, minus: db}, {lap_name: lap.renamed(lap_name)}, (minus,),
                   (Pair(unit, square, 0, 1),), decomposition)


def _four_real_hyperbolic() -> Catalog:
    alg = preset("four_real_hyperbolic")
    ops = {
        "dalpha": wirtinger(alg, 2, 1, 0, 2, False),
        "dalphastar": wirtinger(alg, 2, 1, 0, 2, True),
        "dbeta": wirtinger(alg, 2, 1, 1, 3, False),
        "dbetastar": wirtinger(alg, 2, 1, 1, 3, True),
    }
    ops = {k: v.renamed(k) for k, v in ops.items()}
    laps = {
        "wave02": (partial(alg, 0, 0) - partial(alg, 2, 2)).renamed("wave02"),
        "wave13": (partial(alg, 1, 1) - partial(alg, 3, 3)).renamed("wave13"),
    }
    decomposition = (
        ("dalpha", _dv(alg, [(0, 1, 0), (2, 1, 2)])),
        ("dalphastar", _dv(alg, [(0, 1, 0), (2, -1, 2)])),
        ("dbeta", _dv(alg, [(0, 1, 1), (2, 1, 3)])),
        ("dbetastar", _dv(alg, [(0, 1, 1), (2, -1, 3)])),
    )
    return Catalog(alg, ops, laps, ("dalphastar", "dbetastar"),
                   (Pair(2, 1, 0, 2), Pair(2, 1, 1, 3)), decomposition)


def _two_variable(name: str, unit: int, square: int, pairs: tuple[Pair, Pair], mixer: Element,
                  lap_name: str, lap_coef: Element, var_names=("dalpha", "dalphastar"),
                  coord_names=("z", "w"), conj_suffix="bar") -> Catalog:
    """Algebras written as f(z, w) with a second variable attached by ``mixer``.

    ``dalpha = 1/2 (d_z - mixer d_w)`` and ``dalphastar = 1/2 (d_z + mixer d_w)``.
    """
    alg = preset(name)
    p, q = pairs
    dz = wirtinger(alg, p.unit, p.square, p.a, p.b, False)
    dzc = wirtinger(alg, p.unit, p.square, p.a, p.b, True)
    dw = wirtinger(alg, q.unit, q.square, q.a, q.b, False)
    dwc = wirtinger(alg, q.unit, q.square, q.a, q.b, True)
    plus, minus = var_names
    ops = {
        plus: (HALF * (dz - mixer * dw)).renamed(plus),
        minus: (HALF * (dz + mixer * dw)).renamed(minus),
    }
    zn, wn = coord_names
    extras = {
        f"d{zn}": dz.renamed(f"d{zn}"),
        f"d{zn}{conj_suffix}": dzc.renamed(f"d{zn}{conj_suffix}"),
        f"d{wn}": dw.renamed(f"d{wn}"),
        f"d{wn}{conj_suffix}": dwc.renamed(f"d{wn}{conj_suffix}"),
    }
    lap = ((dz @ dz) + lap_coef * (dw @ dw)).renamed(lap_name)

    u = alg.basis(p.unit, "rational")
    one = alg.one("rational")

    def form(pair: Pair, conj: bool, coef: Element):
        us = u.scale(Fraction(-1 if conj else 1))
        return ((coef, pair.a), (coef * us, pair.b))

    m_prime = _decomposition_partner(alg, mixer)
    decomposition = (
        (plus, form(p, False, one) + form(q, False, m_prime)),
        (minus, form(p, False, one) + form(q, False, -m_prime)),
        (f"d{zn}{conj_suffix}", form(p, True, one)),
        (f"d{wn}{conj_suffix}", form(q, True, one)),
    )
    return Catalog(alg, ops, {lap_name: lap}, (minus,), pairs, decomposition, extras)


def _decomposition_partner(alg: AlgebraDescriptor, mixer: Element) -> Element:
    """m' with -m * m' = 1, so 1/2(dz - m dw)(dZ + m' dW) + 1/2(dz + m dw)(dZ - m' dW) = dz dZ + dw dW."""
    from .algebra import inverse

    return -inverse(mixer)


def _coquaternion() -> Catalog:
    alg = preset("coquaternion")
    j = alg.basis(2, "rational")
    dz = wirtinger(alg, 1, -1, 0, 1, False)
    dzbar = wirtinger(alg, 1, -1, 0, 1, True)
    dw = wirtinger(alg, 1, -1, 2, 3, False)
    dwbar = wirtinger(alg, 1, -1, 2, 3, True)
    ops = {
        "dq": HALF * (dz + dw.times_right(j)),
        "dqbar": HALF * (dzbar + dwbar.times_right(j)),
        "dqstar": HALF * (dz - dw.times_right(j)),
        "dqbarstar": HALF * (dzbar - dwbar.times_right(j)),
    }
    ops = {k: v.renamed(k) for k, v in ops.items()}
    laps = {
        "delta_zw": ((dz @ dz) - (dw @ dw)).renamed("delta_zw"),
        "delta_zbarwbar": ((dzbar @ dzbar) - (dwbar @ dwbar)).renamed("delta_zbarwbar"),
    }
    extras = {"dz": dz.renamed("dz"), "dzbar": dzbar.renamed("dzbar"),
              "dw": dw.renamed("dw"), "dwbar": dwbar.renamed("dwbar")}
    return Catalog(alg, ops, laps, ("dqstar", "dqbarstar"),
                   (Pair(1, -1, 0, 1), Pair(1, -1, 2, 3)), (), extras)


def _build() -> dict[str, Catalog]:
    cats = {
        "complex": _complex_line("complex", 1, -1, "dz", "dzbar"),
        "hyperbolic_complex": _complex_line("hyperbolic_complex", 1, 1, "dz", "dzstar"),
        "four_real_hyperbolic": _four_real_hyperbolic(),
    }
    bc = preset("bicomplex")
    cats["bicomplex"] = _two_variable(
        "bicomplex", 1, -1, (Pair(1, -1, 0, 1), Pair(1, -1, 2, 3)),
        bc.basis(2, "rational"), "laplace", bc.one("rational"),
    )
    dc = preset("double_complex")
    cats["double_complex"] = _two_variable(
        "double_complex", 1, -1, (Pair(1, -1, 0, 1), Pair(1, -1, 2, 3)),
        dc.basis(3, "rational"), "delta_plus", dc.basis(1, "rational"),
    )
    hbc = preset("hyperbolic_bicomplex")
    cats["hyperbolic_bicomplex"] = _two_variable(
        "hyperbolic_bicomplex", 1, 1, (Pair(1, 1, 0, 1), Pair(1, 1, 2, 3)),
        -hbc.basis(2, "rational"), "delta_h", -hbc.one("rational"), conj_suffix="star",
    )
    hdc = preset("hyperbolic_double_complex")
    # q = zeta + j eta, zeta over (x0, x2), eta over (x1, x3), inner unit j^2
    cats["hyperbolic_double_complex"] = _two_variable(
        "hyperbolic_double_complex", 2, 1, (Pair(2, 1, 0, 2), Pair(2, 1, 1, 3)),
        -hdc.basis(3, "rational"), "delta_h", -hdc.basis(2, "rational"),
        var_names=("dq", "dqstar"), coord_names=("zeta", "eta"), conj_suffix="star",
    )
    cats["coquaternion"] = _coquaternion()
    return cats


CATALOG = _build()


def catalog(algebra: AlgebraDescriptor | str) -> Catalog:
    name = algebra if isinstance(algebra, str) else algebra.name
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownOperator(f"no operator catalog for {name}") from None


def dbar(algebra: AlgebraDescriptor | str, name: str) -> LinDiffOp:
    cat = catalog(algebra)
    if name in cat.dbar:
        return cat.dbar[name]
    raise UnknownOperator(f"{name!r} is not a d-bar operator on {cat.algebra.name}; "
                          f"choose from {', '.join(cat.dbar)}")


def laplacian(algebra: AlgebraDescriptor | str, name: str | None = None) -> LinDiffOp:
    cat = catalog(algebra)
    if name is None:
        return next(iter(cat.laplacians.values()))
    if name in cat.laplacians:
        return cat.laplacians[name]
    raise UnknownOperator(f"{name!r} is not a Laplace-type operator on {cat.algebra.name}; "
                          f"choose from {', '.join(cat.laplacians)}")


def operator(algebra: AlgebraDescriptor | str, name: str) -> LinDiffOp:
    """Any catalog operator by name (d-bar, Laplacian or auxiliary Wirtinger derivative)."""
    cat = catalog(algebra)
    for table in (cat.dbar, cat.laplacians, cat.extras):
        if name in table:
            return table[name]
    known = list(cat.dbar) + list(cat.laplacians) + list(cat.extras)
    raise UnknownOperator(f"{name!r} not in the {cat.algebra.name} catalog; choose from {', '.join(known)}")


def operator_names(algebra: AlgebraDescriptor | str) -> list[str]:
    cat = catalog(algebra)
    return list(cat.dbar) + list(cat.laplacians) + list(cat.extras)


# ---------------------------------------------------------------------------
# application


def _as_callable(f: Function, alg: AlgebraDescriptor, guard: float | None):
    if isinstance(f, str):
        f = parse(f, alg)
    if callable(f) and not isinstance(f, type):
        return f
    tree = f
    return lambda point: evaluate(tree, point, guard)


def jet_partials(f: Function, point: Element, guard: float | None = None) -> Partials:
    fn = _as_callable(f, point.algebra, guard)
    value = fn(seed(point.to_float()))
    return partials(value, point.algebra.dim)


def apply_to_partials(op: LinDiffOp, table: Partials) -> Element:
    alg = op.algebra
    out = alg.zero("float")
    for t in op.terms:
        if len(t.index) == 1:
            vec = table.first[:, t.index[0]]
        elif len(t.index) == 2:
            vec = table.second[:, t.index[0], t.index[1]]
        else:
            vec = table.value
        d = Element(alg, tuple(float(v) for v in vec), "float")
        piece = t.left.to_float() * d
        if t.right is not None:
            piece = piece * t.right.to_float()
        out = out + piece
    return out


def apply(op: LinDiffOp, f: Function, point: Element, guard: float | None = None) -> Element:
    """Value of ``op f`` at ``point`` (float element)."""
    if point.algebra != op.algebra:
        point = op.algebra.element(point.to_float().coeffs, "float")
    return apply_to_partials(op, jet_partials(f, point, guard))


def partial_scale(table: Partials) -> float:
    return float(max(np.abs(table.first).max(initial=0.0), np.abs(table.second).max(initial=0.0)))


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class SamplingSpec:
    points: int = 64
    low: float = -2.0
    high: float = 2.0
    seed: int = 0
    guard: float = 1e-3
    tol: float = 1e-9
    max_attempts: int = 20  # per requested point


@dataclass
class Verdict:
    algebra: str
    ops: tuple[str, ...]
    residuals: dict[str, float]  # max raw residual per operator
    normalized: dict[str, float]  # max residual / (1 + max |partials|)
    points: int
    rejected: int
    tol: float

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    @property
    def passed(self) -> bool:
        return all(v < self.tol for v in self.normalized.values())

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "op": ",".join(self.ops),
            "max_residual": self.max_residual,
            "residuals": self.residuals,
            "points": self.points,
            "rejected": self.rejected,
            "tol": self.tol,
            "pass": self.passed,
        }


def sample_points(alg: AlgebraDescriptor, spec: SamplingSpec):
    """Uniform points in the box, as an endless generator driven by the spec's seed."""
    rng = np.random.default_rng(spec.seed)
    while True:
        yield alg.element(rng.uniform(spec.low, spec.high, alg.dim).tolist(), "float")


def residual_check(ops: list[LinDiffOp], f: Function, spec: SamplingSpec = SamplingSpec()) -> Verdict:
    """Max residual of each operator applied to ``f`` over sampled points."""
    alg = ops[0].algebra
    fn = _as_callable(f, alg, spec.guard)
    raw = {op.name: 0.0 for op in ops}
    norm = {op.name: 0.0 for op in ops}
    accepted = rejected = 0
    for point in sample_points(alg, spec):
        if accepted >= spec.points:
            break
        if rejected > spec.max_attempts * spec.points:
            raise AllPointsRejected(f"only {accepted} of {spec.points} points avoided the singular set")
        try:
            table = jet_partials(fn, point)
        except (ZeroDivisionError, ArithmeticError):
            rejected += 1
            continue
        if not (np.all(np.isfinite(table.first)) and np.all(np.isfinite(table.second))):
            rejected += 1
            continue
        accepted += 1
        scale = 1.0 + partial_scale(table)
        for op in ops:
            r = apply_to_partials(op, table).norm()
            raw[op.name] = max(raw[op.name], r)
            norm[op.name] = max(norm[op.name], r / scale)
    return Verdict(alg.name, tuple(op.name for op in ops), raw, norm, accepted, rejected, spec.tol)


def holomorphy_check(algebra: AlgebraDescriptor | str, f: Function,
                     sampling: SamplingSpec = SamplingSpec()) -> Verdict:
    cat = catalog(algebra)
    return residual_check([cat.dbar[n] for n in cat.holomorphy], f, sampling)


def harmonicity_check(algebra: AlgebraDescriptor | str, f: Function,
                      sampling: SamplingSpec = SamplingSpec(), names: list[str] | None = None) -> Verdict:
    cat = catalog(algebra)
    names = names or list(cat.laplacians)
    return residual_check([cat.laplacians[n] for n in names], f, sampling)


def differential_decomposition_check(algebra: AlgebraDescriptor | str, f: Function,
                                     point: Element, direction) -> float:
    """|df(direction) - sum_V (df/dV) dV(direction)| over the algebra's variable pairing."""
    cat = catalog(algebra)
    alg = cat.algebra
    if not cat.decomposition:
        raise DomainError(f"no commutative differential decomposition on {alg.name}")
    point = alg.element(point.to_float().coeffs, "float")
    table = jet_partials(f, point)
    direction = np.asarray(direction, dtype=float)
    lhs = Element(alg, tuple(float(v) for v in table.directional(direction)), "float")
    rhs = alg.zero("float")
    for name, form in cat.decomposition:
        op = cat.dbar.get(name) or cat.extras[name]
        dv = alg.zero("float")
        for coef, k in form:
            dv = dv + coef.to_float() * float(direction[k])
        rhs = rhs + apply_to_partials(op, table) * dv
    return (lhs - rhs).norm()
