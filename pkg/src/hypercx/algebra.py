"""Finite-dimensional real algebras given by structure constants.

Every algebra in the package (complex, hyperbolic complex, cyclic 4-real,
bicomplex, double-complex, their hyperbolic variants and the coquaternions)
is a :class:`AlgebraDescriptor`: a multiplication table over a canonical
basis plus a registry of named conjugations.  Values are :class:`Element`
instances whose coefficients are exact ``Fraction`` objects (``"rational"``
mode), floats (``"float"`` mode) or order-2 jets (``"jet"`` mode, see
:mod:`hypercx.jets`).
"""

from __future__ import annotations

import cmath
import json
import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import _linalg
from .errors import (
    AlgebraMismatch,
    InvalidDimension,
    ModeMismatch,
    UnknownConjugation,
    UnknownPreset,
    ZeroDivisorError,
)

MODES = ("rational", "float", "jet")
HOMOMORPHISM = "homomorphism"
ANTI_HOMOMORPHISM = "anti-homomorphism"
LINEAR = "linear"

# |det| < ZD_TOL * (1 + |a|^n) counts as singular in float mode
ZD_TOL = 1e-10


@dataclass(frozen=True)
class Conjugation:
    """A linear involution; ``matrix[i]`` is the coefficient row of conj(e_i)."""

    name: str
    matrix: tuple[tuple[Fraction, ...], ...]
    kind: str = LINEAR


@dataclass(frozen=True)
class AlgebraDescriptor:
    name: str
    dim: int
    basis_labels: tuple[str, ...]
    # table[a][b] is the coefficient vector of e_a * e_b
    table: tuple[tuple[tuple[Fraction, ...], ...], ...]
    commutative: bool
    unit_index: int = 0
    conjugations: tuple[Conjugation, ...] = ()
    # extra expression symbols naming basis elements, e.g. ("J", 2)
    aliases: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    @cached_property
    def _products(self):
        """Sparse table: for each (a, b) the nonzero (c, coefficient) pairs."""
        rat, flt = [], []
        for a in range(self.dim):
            for b in range(self.dim):
                entries = [(c, v) for c, v in enumerate(self.table[a][b]) if v != 0]
                if entries:
                    rat.append((a, b, tuple(entries)))
                    flt.append((a, b, tuple((c, float(v)) for c, v in entries)))
        return tuple(rat), tuple(flt)

    @cached_property
    def tensor(self) -> np.ndarray:
        """Dense float structure-constant tensor T[a, b, c]."""
        return np.array(self.table, dtype=float)

    def conjugation(self, which: str) -> Conjugation:
        for conj in self.conjugations:
            if conj.name == which:
                return conj
        raise UnknownConjugation(f"{self.name} has no conjugation {which!r}")

    def symbol_index(self, symbol: str) -> int | None:
        """Basis index named by ``symbol`` (label or alias), else None."""
        if symbol in self.basis_labels:
            return self.basis_labels.index(symbol)
        return dict(self.aliases).get(symbol)

    # constructors ------------------------------------------------------

    def element(self, coeffs: Iterable, mode: str = "float") -> "Element":
        coeffs = tuple(coeffs)
        if len(coeffs) != self.dim:
            raise InvalidDimension(f"{self.name} needs {self.dim} coefficients, got {len(coeffs)}")
        if mode == "rational":
            coeffs = tuple(Fraction(c) for c in coeffs)
        elif mode == "float":
            coeffs = tuple(float(c) for c in coeffs)
        elif mode != "jet":
            raise ModeMismatch(f"unknown mode {mode!r}")
        return Element(self, coeffs, mode)

    def zero(self, mode: str = "float") -> "Element":
        return self.element([0] * self.dim, mode)

    def one(self, mode: str = "float") -> "Element":
        return self.basis(self.unit_index, mode)

    def basis(self, index: int, mode: str = "float") -> "Element":
        return self.element([1 if k == index else 0 for k in range(self.dim)], mode)

    def unit(self, symbol: str, mode: str = "float") -> "Element":
        idx = self.symbol_index(symbol)
        if idx is None:
            raise KeyError(f"{self.name} has no unit named {symbol!r}")
        return self.basis(idx, mode)

    # invariants --------------------------------------------------------

    def basis_product(self, a: int, b: int) -> tuple[Fraction, ...]:
        return self.table[a][b]

    def is_associative(self) -> bool:
        """Brute-force check of (e_a e_b) e_c == e_a (e_b e_c) over all triples."""
        n = self.dim
        for a, b, c in product(range(n), repeat=3):
            left = self.basis(a, "rational") * self.basis(b, "rational") * self.basis(c, "rational")
            right = self.basis(a, "rational") * (self.basis(b, "rational") * self.basis(c, "rational"))
            if left.coeffs != right.coeffs:
                return False
        return True

    def has_unit(self) -> bool:
        one = self.one("rational")
        for k in range(self.dim):
            e = self.basis(k, "rational")
            if (one * e).coeffs != e.coeffs or (e * one).coeffs != e.coeffs:
                return False
        return True

    def is_commutative(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a] for a in range(self.dim) for b in range(self.dim)
        )

    def conjugation_ok(self, conj: Conjugation) -> bool:
        """Involution check plus the (anti-)homomorphism law on basis pairs."""
        e = [self.basis(k, "rational") for k in range(self.dim)]
        for x in e:
            if x.conjugate(conj.name).conjugate(conj.name).coeffs != x.coeffs:
                return False
        if conj.kind == LINEAR:
            return True
        for a, b in product(e, repeat=2):
            lhs = (a * b).conjugate(conj.name)
            if conj.kind == HOMOMORPHISM:
                rhs = a.conjugate(conj.name) * b.conjugate(conj.name)
            else:
                rhs = b.conjugate(conj.name) * a.conjugate(conj.name)
            if lhs.coeffs != rhs.coeffs:
                return False
        return True

    def check_invariants(self) -> dict[str, bool]:
        report = {
            "associative": self.is_associative(),
            "unit": self.has_unit(),
            "commutative_flag": self.is_commutative() == self.commutative,
        }
        for conj in self.conjugations:
            report[f"conjugation:{conj.name}"] = self.conjugation_ok(conj)
        return report

    # serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis_labels),
            "table": [[[_frac_str(v) for v in vec] for vec in row] for row in self.table],
            "commutative": self.commutative,
            "unit_index": self.unit_index,
            "conjugations": [
                {
                    "name": c.name,
                    "matrix": [[_frac_str(v) for v in row] for row in c.matrix],
                    "kind": c.kind,
                }
                for c in self.conjugations
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, doc: dict) -> "AlgebraDescriptor":
        table = tuple(
            tuple(tuple(Fraction(v) for v in vec) for vec in row) for row in doc["table"]
        )
        conjs = tuple(
            Conjugation(c["name"], _frac_matrix(c["matrix"]), c.get("kind", LINEAR))
            for c in doc.get("conjugations", [])
        )
        return cls(
            name=doc["name"],
            dim=int(doc["dim"]),
            basis_labels=tuple(doc["basis"]),
            table=table,
            commutative=bool(doc["commutative"]),
            unit_index=int(doc.get("unit_index", 0)),
            conjugations=conjs,
        )

    @classmethod
    def from_json(cls, text: str) -> "AlgebraDescriptor":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"AlgebraDescriptor({self.name!r}, dim={self.dim})"


def _frac_str(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _frac_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def _diag(signs: Sequence[int]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(signs)
    return tuple(
        tuple(Fraction(signs[i]) if i == k else Fraction(0) for k in range(n)) for i in range(n)
    )


def _result_mode(m1: str, m2: str) -> str:
    if m1 == m2:
        return m1
    if "jet" in (m1, m2):
        return "jet"
    raise ModeMismatch(f"cannot mix {m1} and {m2} elements")


class Element:
    """Immutable coefficient vector in an algebra's canonical basis."""

    __slots__ = ("algebra", "coeffs", "mode")

    def __init__(self, algebra: AlgebraDescriptor, coeffs: tuple, mode: str):
        self.algebra = algebra
        self.coeffs = coeffs
        self.mode = mode

    def _check(self, other: "Element") -> str:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")
        return _result_mode(self.mode, other.mode)

    def _new(self, coeffs, mode=None) -> "Element":
        return Element(self.algebra, tuple(coeffs), mode or self.mode)

    def __add__(self, other):
        if not isinstance(other, Element):
            return self + self._scalar(other)
        mode = self._check(other)
        return self._new((a + b for a, b in zip(self.coeffs, other.coeffs)), mode)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        if not isinstance(other, Element):
            return self - self._scalar(other)
        mode = self._check(other)
        return self._new((a - b for a, b in zip(self.coeffs, other.coeffs)), mode)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._new(-a for a in self.coeffs)

    def _scalar(self, s) -> "Element":
        """Embed a real scalar as s * 1."""
        zero = Fraction(0) if self.mode == "rational" else 0.0
        coeffs = [zero] * self.algebra.dim
        coeffs[self.algebra.unit_index] = s
        return self._new(coeffs)

    def scale(self, s) -> "Element":
        return self._new(s * a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Element):
            return self * inverse(other)
        if self.mode == "rational" and isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return self.scale(1.0 / other)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are defined")
        base = self if n >= 0 else inverse(self)
        result = self.algebra.one(self.mode if self.mode != "jet" else "float")
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra.name, self.coeffs))

    def __repr__(self):
        return f"Element({self.algebra.name}, {list(self.coeffs)}, {self.mode})"

    def conjugate(self, which: str) -> "Element":
        return conjugate(self, which)

    def to_float(self) -> "Element":
        if self.mode == "jet":
            return self._new((_value_of(c) for c in self.coeffs), "float")
        return self._new((float(c) for c in self.coeffs), "float")

    def norm(self) -> float:
        """Euclidean norm of the (value) coefficients."""
        return math.sqrt(sum(float(_value_of(c)) ** 2 for c in self.coeffs))

    def max_abs(self) -> float:
        return max(abs(float(_value_of(c))) for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(_value_of(c) == 0 for c in self.coeffs)


def _is_scalar(x) -> bool:
    return isinstance(x, numbers.Number) or hasattr(x, "grad")


def _value_of(c):
    return getattr(c, "value", c)


# ---------------------------------------------------------------------------
# operations


def mul(a: Element, b: Element) -> Element:
    """Bilinear product through the structure constants."""
    mode = a._check(b)
    rat, flt = a.algebra._products
    entries = rat if mode == "rational" else flt
    zero = Fraction(0) if mode == "rational" else 0.0
    out = [zero] * a.algebra.dim
    ac, bc = a.coeffs, b.coeffs
    for i, j, targets in entries:
        x, y = ac[i], bc[j]
        if (type(x) is float or type(x) is Fraction) and x == 0:
            continue
        if (type(y) is float or type(y) is Fraction) and y == 0:
            continue
        p = x * y
        for k, c in targets:
            out[k] = out[k] + (p if c == 1 else (-p if c == -1 else c * p))
    return Element(a.algebra, tuple(out), mode)


def conjugate(a: Element, which: str) -> Element:
    conj = a.algebra.conjugation(which)
    n = a.algebra.dim
    zero = Fraction(0) if a.mode == "rational" else 0.0
    out = [zero] * n
    for i, ci in enumerate(a.coeffs):
        row = conj.matrix[i]
        for k in range(n):
            if row[k] != 0:
                coef = row[k] if a.mode == "rational" else float(row[k])
                out[k] = out[k] + coef * ci
    return Element(a.algebra, tuple(out), a.mode)


def left_matrix(a: Element) -> list[list]:
    """Row k holds the coefficients of a * e_k."""
    alg = a.algebra
    mode = "rational" if a.mode == "rational" else "float"
    vals = a.coeffs if a.mode != "jet" else tuple(_value_of(c) for c in a.coeffs)
    zero = Fraction(0) if mode == "rational" else 0.0
    rows = [[zero] * alg.dim for _ in range(alg.dim)]
    rat, flt = alg._products
    for i, k, targets in (rat if mode == "rational" else flt):
        x = vals[i]
        if x == 0:
            continue
        for c, v in targets:
            rows[k][c] += v * x
    return rows


def determinant(a: Element):
    m = left_matrix(a)
    if a.mode == "rational":
        return _linalg.bareiss_det(m)
    return _linalg.float_det(m)


def is_zero_divisor(a: Element) -> bool:
    """True iff multiplication by ``a`` is singular."""
    det = determinant(a)
    if a.mode == "rational":
        return det == 0
    return abs(det) < ZD_TOL * (1.0 + a.norm() ** a.algebra.dim)


def inverse(a: Element) -> Element:
    """Two-sided inverse via a linear solve against the regular representation."""
    if a.mode == "jet":
        from .jets import jet_inverse

        return jet_inverse(a)
    alg = a.algebra
    m = left_matrix(a)
    rhs = [0] * alg.dim
    rhs[alg.unit_index] = 1
    # a * x = 1  <=>  x @ L = e_unit  <=>  L^T x = e_unit
    mt = [list(col) for col in zip(*m)]
    if a.mode == "rational":
        sol = _linalg.solve_rational(mt, rhs)
        if sol is None:
            raise ZeroDivisorError(f"{a!r} is a zero divisor")
        return Element(alg, tuple(sol), "rational")
    if is_zero_divisor(a):
        raise ZeroDivisorError(f"{a!r} is (numerically) a zero divisor")
    sol = np.linalg.solve(np.array(mt, dtype=float), np.array(rhs, dtype=float))
    return Element(alg, tuple(float(x) for x in sol), "float")


# ---------------------------------------------------------------------------
# algebra builders


def cyclic_algebra(n: int, sign: int, name: str | None = None) -> AlgebraDescriptor:
    """R(1, j, ..., j^(n-1)) with j^n = sign."""
    if n < 2:
        raise InvalidDimension("cyclic algebras need n >= 2")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            vec = [Fraction(0)] * n
            s = a + b
            vec[s % n] = Fraction(sign if s >= n else 1)
            row.append(tuple(vec))
        table.append(tuple(row))
    labels = ("1", "j") + tuple(f"j^{k}" for k in range(2, n))
    star_signs = [(-1) ** k for k in range(n)]
    # j -> -j respects j^n = sign only for even n
    kind = HOMOMORPHISM if n % 2 == 0 else LINEAR
    return AlgebraDescriptor(
        name=name or f"cyclic_{n}_{'+' if sign > 0 else '-'}",
        dim=n,
        basis_labels=labels,
        table=tuple(table),
        commutative=True,
        conjugations=(Conjugation("star", _diag(star_signs), kind),),
    )


def _two_unit_algebra(name: str, s1: int, s2: int, labels: tuple[str, ...]) -> AlgebraDescriptor:
    """Basis (1, u1, u2, u1u2) with commuting units, u1^2 = s1, u2^2 = s2."""
    table = []
    for a in range(4):
        row = []
        for b in range(4):
            sign = 1
            if a & 1 and b & 1:
                sign *= s1
            if a & 2 and b & 2:
                sign *= s2
            vec = [Fraction(0)] * 4
            vec[a ^ b] = Fraction(sign)
            row.append(tuple(vec))
        table.append(tuple(row))
    conjs = (
        Conjugation("star", _diag([1, 1, -1, -1]), HOMOMORPHISM),
        Conjugation("bar", _diag([1, -1, 1, -1]), HOMOMORPHISM),
        Conjugation("dagger", _diag([1, -1, -1, 1]), HOMOMORPHISM),
    )
    return AlgebraDescriptor(name, 4, labels, tuple(table), True, 0, conjs)


def _reindexed(base: AlgebraDescriptor, order: Sequence[int], name: str,
               labels: tuple[str, ...], conjugations=()) -> AlgebraDescriptor:
    """Same algebra with new basis e'_k = e_{order[k]}."""
    pos = {old: new for new, old in enumerate(order)}
    n = base.dim
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            old = base.table[order[a]][order[b]]
            vec = [Fraction(0)] * n
            for c_old, v in enumerate(old):
                if v:
                    vec[pos[c_old]] = v
            row.append(tuple(vec))
        table.append(tuple(row))
    return AlgebraDescriptor(name, n, labels, tuple(table), base.commutative,
                             pos[base.unit_index], tuple(conjugations))


def _coquaternion() -> AlgebraDescriptor:
    # i^2 = -1, j^2 = k^2 = 1, ij = k = -ji, jk = -i = -kj, ki = j = -ik
    mult = {
        (1, 1): (-1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (2, 3): (-1, 1), (3, 2): (1, 1),
        (3, 1): (1, 2), (1, 3): (-1, 2),
    }
    table = []
    for a in range(4):
        row = []
        for b in range(4):
            vec = [Fraction(0)] * 4
            if a == 0:
                vec[b] = Fraction(1)
            elif b == 0:
                vec[a] = Fraction(1)
            else:
                s, c = mult[(a, b)]
                vec[c] = Fraction(s)
            row.append(tuple(vec))
        table.append(tuple(row))
    conjs = (
        Conjugation("star", _diag([1, 1, -1, -1]), HOMOMORPHISM),
        Conjugation("bar", _diag([1, -1, 1, -1]), HOMOMORPHISM),
        Conjugation("barstar", _diag([1, -1, -1, 1]), HOMOMORPHISM),
        Conjugation("standard", _diag([1, -1, -1, -1]), ANTI_HOMOMORPHISM),
    )
    return AlgebraDescriptor("coquaternion", 4, ("1", "i", "j", "k"), tuple(table), False, 0, conjs)


def _with(alg: AlgebraDescriptor, **changes) -> AlgebraDescriptor:
    from dataclasses import replace

    return replace(alg, **changes)


def _build_presets() -> dict[str, AlgebraDescriptor]:
    complex_ = _with(cyclic_algebra(2, -1), name="complex", basis_labels=("1", "i"))
    complex_ = _with(complex_, conjugations=complex_.conjugations
                     + (Conjugation("bar", complex_.conjugations[0].matrix, HOMOMORPHISM),))
    hyper = _with(cyclic_algebra(2, 1), name="hyperbolic_complex")

    alphastar = Conjugation("alphastar", _diag([1, 1, -1, -1]), LINEAR)
    four_h = cyclic_algebra(4, 1, "four_real_hyperbolic")
    four_h = _with(four_h, conjugations=four_h.conjugations + (alphastar,), aliases=(("J", 2),))
    four_e = cyclic_algebra(4, -1, "four_real_elliptic")
    four_e = _with(four_e, conjugations=four_e.conjugations + (alphastar,))
    # j^8 = -1, so j^4 plays the complex unit
    four_c = _with(cyclic_algebra(8, -1, "four_complex"), aliases=(("i", 4),))

    bicomplex = _two_unit_algebra("bicomplex", -1, -1, ("1", "j1", "j2", "j1j2"))
    hyp_bc = _two_unit_algebra("hyperbolic_bicomplex", 1, 1, ("1", "j1", "j2", "j1j2"))

    # double-complex: j^2 = i, i.e. the cyclic j^4 = -1 algebra in basis (1, j^2, j, j^3)
    dc = _reindexed(
        cyclic_algebra(4, -1), [0, 2, 1, 3], "double_complex", ("1", "i", "j", "ij"),
        conjugations=(
            Conjugation("star", _diag([1, 1, -1, -1]), HOMOMORPHISM),
            Conjugation("bar", _diag([1, -1, 1, -1]), LINEAR),
        ),
    )
    hdc = cyclic_algebra(4, 1, "hyperbolic_double_complex")
    hdc = _with(hdc, aliases=(("J", 2),))

    algs = [complex_, hyper, four_h, four_e, four_c, bicomplex, dc, hyp_bc, hdc, _coquaternion()]
    return {a.name: a for a in algs}


_PRESETS = _build_presets()
PRESET_NAMES = tuple(_PRESETS)


def preset(name: str) -> AlgebraDescriptor:
    try:
        return _PRESETS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}") from None


def tower_algebra(level: int, hyperbolic: bool = False) -> AlgebraDescriptor:
    """Level-k member of the doubling tower: j^(2^k) = -1 (or +1 when hyperbolic).

    Level 1 is C (or the hyperbolic plane), level 2 the double-complex
    numbers, level 3 the 4-complex numbers, level 4 the 8-complex numbers.
    In the elliptic tower j^(2^(k-1)) squares to -1 and acts as the complex unit.
    """
    n = 2 ** level
    return cyclic_algebra(n, 1 if hyperbolic else -1,
                          f"tower_{level}_{'hyperbolic' if hyperbolic else 'elliptic'}")


# ---------------------------------------------------------------------------
# bicomplex <-> double-complex


# c = e^{-i pi/4} solves -c^2 = i, so (c J)^2 = i with J^2 = -1
ISO_C = cmath.exp(-1j * math.pi / 4)


def bc_dc_isomorphism(a: Element) -> Element:
    """Ring isomorphism double_complex <-> bicomplex (direction chosen by ``a``).

    z + j w  |->  z + (c w) j2 with complex scalars carried by i <-> j1.
    """
    x = a.to_float().coeffs
    z = complex(x[0], x[1])
    w = complex(x[2], x[3])
    if a.algebra.name == "double_complex":
        w = ISO_C * w
        target = preset("bicomplex")
    elif a.algebra.name == "bicomplex":
        w = w / ISO_C
        target = preset("double_complex")
    else:
        raise AlgebraMismatch(f"isomorphism defined on bicomplex/double_complex, not {a.algebra.name}")
    return target.element([z.real, z.imag, w.real, w.imag], "float")


# ---------------------------------------------------------------------------
# metrics on the 4-dimensional cyclic algebras


def scalar_product_h4(x: Element, y: Element) -> float:
    """|x0 y0 - x1 y1 + x2 y2 - x3 y3| (taken literally, not bilinear)."""
    if x.algebra.dim != 4 or y.algebra.dim != 4:
        raise InvalidDimension("scalar_product_h4 needs 4-dimensional elements")
    a, b = x.coeffs, y.coeffs
    return abs(a[0] * b[0] - a[1] * b[1] + a[2] * b[2] - a[3] * b[3])


def minkowski_intervals(dx: Element) -> tuple:
    """The two Minkowski intervals (dx0^2 - dx2^2, dx1^2 - dx3^2)."""
    if dx.algebra.dim != 4:
        raise InvalidDimension("minkowski_intervals needs a 4-dimensional element")
    c = dx.coeffs
    return (c[0] ** 2 - c[2] ** 2, c[1] ** 2 - c[3] ** 2)
