"""Regular matrix representations and the 4-real hyperbolic determinant.

Orientation: row ``k`` of ``represent(a)`` holds the coefficients of
``a * e_k``.  For R(1, j, j^2, j^3) with j^4 = 1 this is the circulant
layout with first row (x0, x1, x2, x3) and second row (x3, x0, x1, x2).
Under this convention ``represent(a * b) == represent(b) @ represent(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _linalg
from .algebra import Element, InvalidDimension, left_matrix

ORIENTATION = "rows = coefficients of a * e_k"


@dataclass(frozen=True)
class RepMatrix:
    rows: tuple[tuple, ...]
    algebra_name: str
    orientation: str = ORIENTATION

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        n = len(self.rows)
        out = tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return RepMatrix(out, self.algebra_name)

    def det(self):
        if all(isinstance(x, (int, Fraction)) for row in self.rows for x in row):
            return _linalg.bareiss_det(self.rows)
        return _linalg.float_det(self.rows)

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=float)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]


def represent(a: Element) -> RepMatrix:
    return RepMatrix(tuple(tuple(r) for r in left_matrix(a)), a.algebra.name)


def _check_h4(x: Element) -> None:
    alg = x.algebra
    if alg.dim != 4 or alg.table[1][3][0] != 1:
        # j * j^3 = +1 identifies the hyperbolic cyclic layout
        raise InvalidDimension(f"expected a 4-real hyperbolic element, got {alg.name}")


def det_h(x: Element):
    """Determinant of the circulant matrix of a 4-real hyperbolic element."""
    _check_h4(x)
    return represent(x).det()


def _identity_terms(x: Element):
    x0, x1, x2, x3 = x.coeffs
    cross = 4 * (x0 * x3 - x1 * x2) * (x0 * x1 - x2 * x3)
    even = (x0 ** 2 - x2 ** 2) ** 2
    odd = (x1 ** 2 - x3 ** 2) ** 2
    return cross, even, odd


def apostolova_residual(x: Element):
    """det + 4(x0x3 - x1x2)(x0x1 - x2x3) - [(x0^2 - x2^2)^2 - (x1^2 - x3^2)^2]; always 0."""
    cross, even, odd = _identity_terms(x)
    return det_h(x) + cross - (even - odd)


def det_bounds(x: Element) -> dict:
    """Lower/upper determinant bounds that follow from the identity above."""
    cross, even, odd = _identity_terms(x)
    return {
        "det": det_h(x),
        "lower": -odd - cross,
        "upper": even - cross,
        "form": even - odd,
        "form_bound": even + odd,
    }


def det_bounds_check(x: Element) -> bool:
    b = det_bounds(x)
    return b["lower"] <= b["det"] <= b["upper"] and abs(b["form"]) <= b["form_bound"]
