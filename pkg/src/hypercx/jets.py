"""Order-2 forward-mode jets.

A :class:`Jet2` carries a value, its gradient and its Hessian with respect
to ``m`` real coordinates.  An algebra :class:`~hypercx.algebra.Element`
in ``"jet"`` mode holds one ``Jet2`` (or a plain float constant) per basis
coefficient; algebra multiplication then lifts through the jet products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraDescriptor, Element, inverse

# reciprocal of a jet needs |value| above this to stay finite
MIN_DIVISOR = 1e-300


class Jet2:
    __slots__ = ("value", "grad", "hess")

    def __init__(self, value: float, grad: np.ndarray, hess: np.ndarray):
        self.value = float(value)
        self.grad = grad
        self.hess = hess

    @classmethod
    def constant(cls, value: float, m: int) -> "Jet2":
        return cls(value, np.zeros(m), np.zeros((m, m)))

    @classmethod
    def variable(cls, value: float, k: int, m: int) -> "Jet2":
        g = np.zeros(m)
        g[k] = 1.0
        return cls(value, g, np.zeros((m, m)))

    @property
    def m(self) -> int:
        return self.grad.shape[0]

    def __add__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.value + other.value, self.grad + other.grad, self.hess + other.hess)
        return Jet2(self.value + other, self.grad, self.hess)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.value, -self.grad, -self.hess)

    def __sub__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.value - other.value, self.grad - other.grad, self.hess - other.hess)
        return Jet2(self.value - other, self.grad, self.hess)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet2):
            outer = np.outer(self.grad, other.grad)
            return Jet2(
                self.value * other.value,
                self.value * other.grad + other.value * self.grad,
                self.value * other.hess + other.value * self.hess + outer + outer.T,
            )
        other = float(other)
        return Jet2(self.value * other, self.grad * other, self.hess * other)

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet2":
        if abs(self.value) <= MIN_DIVISOR:
            raise ZeroDivisionError("jet division by a (near) zero value")
        v = self.value
        return self.apply(1.0 / v, -1.0 / v ** 2, 2.0 / v ** 3)

    def __truediv__(self, other):
        if isinstance(other, Jet2):
            return self * other.reciprocal()
        return self * (1.0 / float(other))

    def __rtruediv__(self, other):
        return self.reciprocal() * float(other)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n == 0:
            return Jet2.constant(1.0, self.m)
        v = self.value
        if n < 0 and abs(v) <= MIN_DIVISOR:
            raise ZeroDivisionError("negative power of a zero jet")
        return self.apply(v ** n, n * v ** (n - 1), n * (n - 1) * v ** (n - 2) if n != 1 else 0.0)

    def apply(self, f0: float, f1: float, f2: float) -> "Jet2":
        """Compose with a scalar function given its value, first and second derivative."""
        return Jet2(f0, f1 * self.grad, f1 * self.hess + f2 * np.outer(self.grad, self.grad))

    def __repr__(self):
        return f"Jet2({self.value!r}, grad={self.grad.tolist()})"


def _lift(fn, d1, d2):
    def wrapped(x):
        if isinstance(x, Jet2):
            v = x.value
            return x.apply(fn(v), d1(v), d2(v))
        return fn(x)

    wrapped.__name__ = fn.__name__
    return wrapped


exp = _lift(math.exp, math.exp, math.exp)
sin = _lift(math.sin, math.cos, lambda v: -math.sin(v))
cos = _lift(math.cos, lambda v: -math.sin(v), lambda v: -math.cos(v))
sinh = _lift(math.sinh, math.cosh, math.sinh)
cosh = _lift(math.cosh, math.sinh, math.cosh)
sqrt = _lift(math.sqrt, lambda v: 0.5 / math.sqrt(v), lambda v: -0.25 * v ** -1.5)


def as_jet(c, m: int) -> Jet2:
    return c if isinstance(c, Jet2) else Jet2.constant(float(c), m)


# ---------------------------------------------------------------------------
# jet elements


def seed(point: Element) -> Element:
    """Lift a float point so coordinate k carries the unit gradient e_k."""
    n = point.algebra.dim
    vals = point.to_float().coeffs
    return Element(point.algebra, tuple(Jet2.variable(v, k, n) for k, v in enumerate(vals)), "jet")


def seed_values(algebra: AlgebraDescriptor, coords) -> Element:
    """Jet element whose coefficients are arbitrary scalars/jets (chain-rule seeding)."""
    return Element(algebra, tuple(coords), "jet")


def jet_inverse(a: Element) -> Element:
    """Inverse of a jet element by two Newton steps x <- x (2 - a x).

    The constant start is exact to order 0; each step doubles the order, so two
    steps are exact through second derivatives.
    """
    x = inverse(a.to_float())
    two = a.algebra.one("float") * 2.0
    for _ in range(2):
        x = x * (two - a * x)
    return x


@dataclass
class Partials:
    """Values, first and second partials of each component function."""

    value: np.ndarray  # (n,)
    first: np.ndarray  # (n, m): first[p, k] = d f_p / d x_k
    second: np.ndarray  # (n, m, m)

    def directional(self, direction) -> np.ndarray:
        return self.first @ np.asarray(direction, dtype=float)


def partials(f: Element, m: int | None = None) -> Partials:
    """Table of first and second partials of a jet element's components."""
    if m is None:
        m = next((c.m for c in f.coeffs if isinstance(c, Jet2)), f.algebra.dim)
    jets = [as_jet(c, m) for c in f.coeffs]
    return Partials(
        np.array([j.value for j in jets]),
        np.array([j.grad for j in jets]),
        np.array([j.hess for j in jets]),
    )


def element_from_rows(algebra: AlgebraDescriptor, rows) -> Element:
    return algebra.element([float(r) for r in rows], "float")
