"""Exponential and trigonometric-type functions on the algebras.

All functions of a single algebra element are power series.  Powers of one
element commute with each other, so the series make sense in every preset,
including the coquaternions.  Truncation uses the operator-norm bound
``|a^n| <= M^n`` with ``M`` the larger of the 1- and inf-norms of the
multiplication matrix of ``a``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .algebra import Element, left_matrix, preset
from .errors import DomainError
from .jets import Jet2, partials, seed

SQRT2 = math.sqrt(2.0)
OMEGA = (1 + 1j) / SQRT2  # e^{i pi/4}
OMEGA_BAR = (1 - 1j) / SQRT2
# common period of C and S; shifting by sqrt(2) pi (1 - i) is not a period
PERIOD = SQRT2 * math.pi * (1 + 1j)


def operator_norm(a: Element) -> float:
    m = np.abs(np.array(left_matrix(a), dtype=float))
    return float(max(m.sum(axis=0).max(), m.sum(axis=1).max()))


def terms_needed(norm: float, tol: float) -> int:
    """Smallest N with sum_{n>N} M^n/n! < tol (geometric tail bound)."""
    n = 0
    term = 1.0  # M^n / n!
    while True:
        nxt = term * norm / (n + 1)  # M^(N+1)/(N+1)!
        if n + 2 > 2 * norm and nxt / (1 - norm / (n + 2)) < tol:
            return n
        n += 1
        term = nxt


def _series(a: Element, coeff, tol: float) -> Element:
    """sum_n coeff(n) a^n / n!, where coeff(n) is a scalar, an Element or None (skip)."""
    if a.mode == "rational":
        raise DomainError("power series need float or jet mode")
    n_terms = terms_needed(operator_norm(a), tol)
    if a.mode == "jet":
        n_terms += 3  # derivative series lag the value series by up to two orders
    one = a.algebra.one("float")
    term = one
    total = None
    for n in range(n_terms + 1):
        if n > 0:
            term = (term * a) * (1.0 / n)
        c = coeff(n)
        if c is None:
            continue
        piece = term if (isinstance(c, (int, float)) and c == 1) else (c * term)
        total = piece if total is None else total + piece
    return total


def exp_series(a: Element, tol: float = 1e-15) -> Element:
    return _series(a, lambda n: 1, tol)


def cosh_series(a: Element, tol: float = 1e-15) -> Element:
    return _series(a, lambda n: 1 if n % 2 == 0 else None, tol)


def sinh_series(a: Element, tol: float = 1e-15) -> Element:
    return _series(a, lambda n: 1 if n % 2 else None, tol)


def cos_series(a: Element, tol: float = 1e-15) -> Element:
    return _series(a, lambda n: (-1.0) ** (n // 2) if n % 2 == 0 else None, tol)


def sin_series(a: Element, tol: float = 1e-15) -> Element:
    return _series(a, lambda n: (-1.0) ** (n // 2) if n % 2 else None, tol)


def _complex_unit(a: Element) -> Element:
    alg = a.algebra
    if alg.name not in ("complex", "double_complex"):
        raise DomainError(f"C and S are defined on the double-complex family, not {alg.name}")
    return alg.unit("i", "float")


def C_series(a: Element, tol: float = 1e-15) -> Element:
    """sum_k i^k a^(2k) / (2k)! with i the algebra's complex unit."""
    powers = _i_powers(a)
    return _series(a, lambda n: powers[(n // 2) % 4] if n % 2 == 0 else None, tol)


def S_series(a: Element, tol: float = 1e-15) -> Element:
    """sum_k i^k a^(2k+1) / (2k+1)!."""
    powers = _i_powers(a)
    return _series(a, lambda n: powers[(n // 2) % 4] if n % 2 else None, tol)


def _i_powers(a: Element):
    i = _complex_unit(a)
    one = a.algebra.one("float")
    return (one, i, -one, -i)


_FUNCS = {
    "exp": exp_series,
    "cos": cos_series,
    "sin": sin_series,
    "cosh": cosh_series,
    "sinh": sinh_series,
    "C": C_series,
    "S": S_series,
}


def apply_function(name: str, a: Element) -> Element:
    return _FUNCS[name](a)


# ---------------------------------------------------------------------------
# hyperbolic complex Euler formula


def euler_split(t: float) -> Element:
    """e^{jt} = cosh t + j sinh t in the hyperbolic complex numbers."""
    return preset("hyperbolic_complex").element([math.cosh(t), math.sinh(t)], "float")


# ---------------------------------------------------------------------------
# C and S on the complex line


def C(w: complex) -> complex:
    return cmath.cos(OMEGA_BAR * w)


def S(w: complex) -> complex:
    return OMEGA * cmath.sin(OMEGA_BAR * w)


def C_defining_series(w: complex, terms: int = 80) -> complex:
    return _cs_series(w, 0, terms)


def S_defining_series(w: complex, terms: int = 80) -> complex:
    return _cs_series(w, 1, terms)


def _cs_series(w: complex, parity: int, terms: int) -> complex:
    total = 0j
    term = 1.0 + 0j if parity == 0 else complex(w)  # w^(2k+p)/(2k+p)!
    ik = 1.0 + 0j
    for k in range(terms):
        total += ik * term
        n = 2 * k + parity
        term = term * w * w / ((n + 1) * (n + 2))
        ik *= 1j
    return total


def dC_dS_identities(w: complex) -> dict[str, float]:
    """Residuals of C' = iS, S' = C and d/dw e^{jw} = j e^{jw}, derivatives from jets."""
    cplx = preset("complex")
    point = seed(cplx.element([w.real, w.imag]))
    dC = partials(C_series(point)).first[:, 0]
    dS = partials(S_series(point)).first[:, 0]
    c_val, s_val = C(w), S(w)
    res_c = abs(complex(dC[0], dC[1]) - 1j * s_val)
    res_s = abs(complex(dS[0], dS[1]) - c_val)

    dc = preset("double_complex")
    j = dc.unit("j", "float")
    i = dc.unit("i", "float")
    at = seed(dc.element([0.0, 0.0, w.real, w.imag]))
    wv = _coord(at, 2) + i * _coord(at, 3)
    f = exp_series(j * wv)
    # holomorphic in w, so d/dw is the derivative along x2
    deriv = dc.element(partials(f).first[:, 2])
    target = j * exp_series(j * dc.element([w.real, w.imag, 0.0, 0.0]))
    res_e = (deriv - target).norm()
    return {"dC_minus_iS": res_c, "dS_minus_C": res_s, "dexp_jw_minus_j_exp_jw": res_e}


def _coord(point: Element, k: int) -> Element:
    alg = point.algebra
    coeffs = [0.0] * alg.dim
    coeffs[alg.unit_index] = point.coeffs[k]
    return Element(alg, tuple(coeffs), point.mode)


# ---------------------------------------------------------------------------
# closed forms


def exp_double_complex(a: Element) -> Element:
    """e^{z + jw} = e^z (C(w) + j S(w))."""
    x = a.to_float().coeffs
    z, w = complex(x[0], x[1]), complex(x[2], x[3])
    ez = cmath.exp(z)
    even, odd = ez * C(w), ez * S(w)
    return a.algebra.element([even.real, even.imag, odd.real, odd.imag], "float")


def exp_hyperbolic_dc(alpha: Element) -> Element:
    """Closed product form of e^alpha for alpha = x0 + j x1 + j^2 x2 + j^3 x3, j^4 = 1.

    e^alpha = e^x0 (cosh x2 + j^2 sinh x2) * E(x1; j) * E(x3; j^3) where
    E(x; u) = 1/2[(1 + j^2) cosh x + (u + u^3) sinh x + (1 - j^2) cos x + (u - u^3) sin x].
    """
    alg = alpha.algebra
    x0, x1, x2, x3 = alpha.to_float().coeffs
    one, j, j2, j3 = (alg.basis(k, "float") for k in range(4))

    def factor(x: float, u: Element, u3: Element) -> Element:
        return 0.5 * ((one + j2) * math.cosh(x) + (u + u3) * math.sinh(x)
                      + (one - j2) * math.cos(x) + (u - u3) * math.sin(x))

    even = one * math.cosh(x2) + j2 * math.sinh(x2)
    return math.exp(x0) * (even * factor(x1, j, j3) * factor(x3, j3, j))


def exp_hyperbolic_complex(a: Element) -> Element:
    x, y = a.to_float().coeffs
    return math.exp(x) * euler_split(y)


CLOSED_FORMS = {
    "hyperbolic_complex": exp_hyperbolic_complex,
    "double_complex": exp_double_complex,
    "hyperbolic_double_complex": exp_hyperbolic_dc,
    "four_real_hyperbolic": exp_hyperbolic_dc,
}


def exp_closed_form(a: Element) -> Element | None:
    fn = CLOSED_FORMS.get(a.algebra.name)
    return fn(a) if fn else None


def is_jet(c) -> bool:
    return isinstance(c, Jet2)
