"""Fundamental-solution checks for the hyperbolic d-bar operator and Delta_plus.

Hyperbolic polar coordinates cover the four wedges cut out by the light
cone ``x^2 = y^2``.  On wedge ``+x`` they are ``(x, y) = (r cosh t, r sinh t)``;
the other wedges are reflections of it.

The pairing of ``E = 1/z`` with ``d phi / d z*`` is computed as an honest
double integral in ``(r, t)`` and compared with the hyperbolic mean value
``phi_nat(r) = int phi(r cosh t, r sinh t) dt``.  Truncation of the infinite
ranges uses Gaussian envelopes ``|g| <= K exp(-kappa rho^2)`` supplied by each
test function.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import mpmath
import numpy as np

from . import jets
from ._quadrature import QuadratureError, integrate
from .algebra import Element, inverse, preset
from .errors import CharacterizationMismatch, DomainError, OnCone, Singular, TailBoundFailed
from .expr import evaluate, parse
from .jets import Jet2, partials
from .operators import apply, dbar, jet_partials, laplacian, apply_to_partials, partial_scale
from .special import euler_split

CONE_TOL = 1e-12
OMEGA = cmath.exp(1j * math.pi / 4)
WEDGES = ("+x", "-x", "+y", "-y")


# ---------------------------------------------------------------------------
# hyperbolic polar coordinates


@dataclass(frozen=True)
class HyperbolicCoords:
    r: float
    t: float
    wedge: str = "+x"

    def to_cartesian(self) -> tuple[float, float]:
        return from_hyperbolic(self.r, self.t, self.wedge)


def to_hyperbolic(x: float, y: float) -> HyperbolicCoords:
    q = x * x - y * y
    if abs(q) <= CONE_TOL * (x * x + y * y) or (x == 0 and y == 0):
        raise OnCone(f"({x}, {y}) lies on the light cone")
    if q > 0:
        wedge = "+x" if x > 0 else "-x"
        return HyperbolicCoords(math.sqrt(q), math.atanh(y / x), wedge)
    wedge = "+y" if y > 0 else "-y"
    return HyperbolicCoords(math.sqrt(-q), math.atanh(x / y), wedge)


def from_hyperbolic(r, t, wedge: str = "+x"):
    """Works on floats and on jets."""
    c, s = jets.cosh(t), jets.sinh(t)
    if wedge == "+x":
        return r * c, r * s
    if wedge == "-x":
        return -(r * c), -(r * s)
    if wedge == "+y":
        return r * s, r * c
    if wedge == "-y":
        return -(r * s), -(r * c)
    raise DomainError(f"unknown wedge {wedge!r}")


def jacobian(r: float, t: float, wedge: str = "+x") -> float:
    """det d(x, y)/d(r, t), from jets."""
    x, y = from_hyperbolic(Jet2.variable(r, 0, 2), Jet2.variable(t, 1, 2), wedge)
    return float(x.grad[0] * y.grad[1] - x.grad[1] * y.grad[0])


# ---------------------------------------------------------------------------
# operator identities


def _hyperbolic_callable(f):
    alg = preset("hyperbolic_complex")
    if isinstance(f, str):
        f = parse(f, alg)
    if callable(f):
        return f
    tree = f
    return lambda point: evaluate(tree, point)


def dbar_hyperbolic_identity_check(f, point: tuple[float, float]) -> float:
    """|1/2 (d_x - j d_y) f - 1/2 e^{jt} (d_r - (j/r) d_t) f| on wedge +x.

    The left side differentiates in (x, y); the right side differentiates
    the composite (r, t) -> f(r cosh t, r sinh t) with its own jets.
    """
    alg = preset("hyperbolic_complex")
    x, y = point
    hc = to_hyperbolic(x, y)
    if hc.wedge != "+x":
        raise DomainError("the polar form of the operator is stated on wedge +x")
    fn = _hyperbolic_callable(f)
    lhs = apply(dbar(alg, "dzstar"), fn, alg.element([x, y]))

    rj, tj = Jet2.variable(hc.r, 0, 2), Jet2.variable(hc.t, 1, 2)
    xj, yj = from_hyperbolic(rj, tj)
    value = fn(Element(alg, (xj, yj), "jet"))
    table = partials(value, 2)
    d_r = alg.element(table.first[:, 0])
    d_t = alg.element(table.first[:, 1])
    j = alg.unit("j")
    rhs = 0.5 * euler_split(hc.t) * (d_r - (j * d_t) * (1.0 / hc.r))
    return (lhs - rhs).norm()


def E_holomorphic_check(points) -> float:
    """Max of |d(1/z)/dz*| / (1 + max |partials|) over points off the cone."""
    alg = preset("hyperbolic_complex")
    op = dbar(alg, "dzstar")
    f = parse("1/v", alg)
    worst = 0.0
    for x, y in points:
        to_hyperbolic(x, y)  # raises OnCone
        table = jet_partials(f, alg.element([x, y]))
        r = apply_to_partials(op, table).norm() / (1.0 + partial_scale(table))
        worst = max(worst, r)
    return worst


# ---------------------------------------------------------------------------
# test functions


def _peak(d: int, kappa: float) -> float:
    """max over rho >= 0 of rho^d exp(-kappa rho^2 / 2)."""
    if d == 0:
        return 1.0
    return (d / (kappa * math.e)) ** (d / 2)


@dataclass(frozen=True)
class Envelope:
    """|g(x, y)| <= K exp(-kappa (x^2 + y^2))."""

    K: float
    kappa: float

    @classmethod
    def from_powers(cls, terms: list[tuple[float, int]], kappa: float) -> "Envelope":
        """Envelope of sum c rho^d exp(-kappa rho^2), absorbing powers into half the rate."""
        if all(d == 0 for _, d in terms):
            return cls(sum(abs(c) for c, _ in terms), kappa)
        return cls(sum(abs(c) * _peak(d, kappa) for c, d in terms), kappa / 2)

    def hyperbola_tail(self, r: float, T: float) -> float:
        """Bound on int_{|t| > T} K exp(-kappa r^2 cosh 2t) dt (uses cosh 2t >= e^{2t}/2)."""
        c = self.kappa * r * r
        u = math.exp(min(2 * T, 700.0))
        return 2 * self.K * math.exp(-c * u / 2) / (c * u)

    def radial_tail(self, R: float) -> float:
        """Bound on int |g| dt over the hyperbola of radius R (cosh 2t >= 1 + 2t^2)."""
        c = self.kappa * R * R
        return self.K * math.exp(-c) * math.sqrt(math.pi / (2 * c))


@dataclass(frozen=True)
class TestFunction:
    """Rapidly decreasing test functions with analytic gradients.

    kinds: ``gaussian`` (A exp(-(x^2+y^2)/w^2)), ``polygauss`` (P(x, y) times the
    gaussian, P given as {(i, j): c}) and ``annular_bump`` (psi(x^2 - y^2) exp(-(x^2+y^2))
    with psi the standard bump on (r0^2, r1^2)).
    """

    __test__ = False  # not a pytest class

    kind: str
    width: float = 1.0
    amplitude: float = 1.0
    poly: tuple[tuple[tuple[int, int], float], ...] = ()
    r0: float = 0.0
    r1: float = 0.0

    @classmethod
    def gaussian(cls, width: float = 1.0, amplitude: float = 1.0) -> "TestFunction":
        return cls("gaussian", width=width, amplitude=amplitude)

    @classmethod
    def polygauss(cls, poly: dict, width: float = 1.0) -> "TestFunction":
        return cls("polygauss", width=width, poly=tuple(sorted(poly.items())))

    @classmethod
    def annular_bump(cls, r0: float, r1: float) -> "TestFunction":
        if not 0 <= r0 < r1:
            raise DomainError("annular bump needs 0 <= r0 < r1")
        return cls("annular_bump", r0=r0, r1=r1)

    @classmethod
    def parse(cls, spec: str) -> "TestFunction":
        """``gaussian:W``, ``gaussian:W:A``, ``bump:R0:R1`` or ``polygauss:W:i,j,c;i,j,c``."""
        head, _, rest = spec.partition(":")
        args = rest.split(":") if rest else []
        if head == "gaussian":
            return cls.gaussian(*(float(a) for a in args))
        if head in ("bump", "annular_bump"):
            return cls.annular_bump(float(args[0]), float(args[1]))
        if head == "polygauss":
            width = float(args[0])
            poly = {}
            for item in args[1].split(";"):
                i, j, c = item.split(",")
                poly[(int(i), int(j))] = float(c)
            return cls.polygauss(poly, width)
        raise DomainError(f"unknown test function {spec!r}")

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x, y):
        """Scalar or jet evaluation."""
        rho2 = x * x + y * y
        if self.kind == "gaussian":
            return self.amplitude * jets.exp(rho2 * (-1.0 / self.width ** 2))
        if self.kind == "polygauss":
            p = 0.0
            for (i, j), c in self.poly:
                p = p + c * (x ** i) * (y ** j)
            return p * jets.exp(rho2 * (-1.0 / self.width ** 2))
        s = x * x - y * y
        a, b = self.r0 ** 2, self.r1 ** 2
        sv = getattr(s, "value", s)
        if not a < sv < b:
            return 0.0 * rho2
        q = (s - a) * (b - s)
        return jets.exp(-1.0 / q) * jets.exp(-rho2)

    def value(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        rho2 = x * x + y * y
        if self.kind == "gaussian":
            return self.amplitude * np.exp(-rho2 / self.width ** 2)
        if self.kind == "polygauss":
            return self._poly(x, y) * np.exp(-rho2 / self.width ** 2)
        psi, _ = self._psi(x * x - y * y)
        return psi * np.exp(-rho2)

    def grad(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        rho2 = x * x + y * y
        if self.kind in ("gaussian", "polygauss"):
            w2 = self.width ** 2
            g = np.exp(-rho2 / w2)
            if self.kind == "gaussian":
                p, px, py = self.amplitude, 0.0, 0.0
            else:
                p, px, py = self._poly(x, y), self._poly(x, y, 1, 0), self._poly(x, y, 0, 1)
            return (px - 2 * x / w2 * p) * g, (py - 2 * y / w2 * p) * g
        psi, dpsi = self._psi(x * x - y * y)
        g = np.exp(-rho2)
        return (2 * x * dpsi - 2 * x * psi) * g, (-2 * y * dpsi - 2 * y * psi) * g

    def _poly(self, x, y, dx: int = 0, dy: int = 0):
        out = np.zeros_like(np.asarray(x, dtype=float))
        for (i, j), c in self.poly:
            if i < dx or j < dy:
                continue
            coef = c * math.perm(i, dx) * math.perm(j, dy)
            out = out + coef * x ** (i - dx) * y ** (j - dy)
        return out

    def _psi(self, s: np.ndarray):
        a, b = self.r0 ** 2, self.r1 ** 2
        s = np.asarray(s, dtype=float)
        inside = (s > a) & (s < b)
        q = np.where(inside, (s - a) * (b - s), 1.0)
        psi = np.where(inside, np.exp(-1.0 / q), 0.0)
        dpsi = np.where(inside, psi * (a + b - 2 * s) / q ** 2, 0.0)
        return psi, dpsi

    # -- decay ---------------------------------------------------------------

    def envelope(self) -> Envelope:
        if self.kind == "gaussian":
            return Envelope(abs(self.amplitude), 1 / self.width ** 2)
        if self.kind == "polygauss":
            return Envelope.from_powers([(c, i + j) for (i, j), c in self.poly], 1 / self.width ** 2)
        return Envelope(self._psi_sup()[0], 1.0)

    def grad_envelope(self) -> Envelope:
        """Envelope of the Euclidean gradient norm."""
        if self.kind == "gaussian":
            k = 1 / self.width ** 2
            return Envelope.from_powers([(2 * k * self.amplitude, 1)], k)
        if self.kind == "polygauss":
            k = 1 / self.width ** 2
            terms = []
            for (i, j), c in self.poly:
                if i + j:
                    terms.append(((i + j) * c, i + j - 1))
                terms.append((2 * k * c, i + j + 1))
            return Envelope.from_powers(terms, k)
        psi_max, dpsi_max = self._psi_sup()
        return Envelope.from_powers([(2 * (psi_max + dpsi_max), 1)], 1.0)

    def _psi_sup(self) -> tuple[float, float]:
        a, b = self.r0 ** 2, self.r1 ** 2
        s = np.linspace(a, b, 20001)[1:-1]
        psi, dpsi = self._psi(s)
        # grid maxima of smooth functions; 10% headroom covers the grid gap
        return 1.1 * float(psi.max()), 1.1 * float(np.abs(dpsi).max())

    def at_origin(self) -> float:
        return float(self.value(np.array(0.0), np.array(0.0)))


# ---------------------------------------------------------------------------
# quadrature


@dataclass(frozen=True)
class QuadratureSpec:
    tol: float = 1e-8
    max_T: float = 50.0
    max_R: float = 200.0
    max_intervals: int = 4000


def _truncation(env: Envelope, r: float, tol: float, max_T: float) -> float:
    T = 1.0
    while env.hyperbola_tail(r, T) >= tol:
        T += 0.25
        if T > max_T:
            raise TailBoundFailed(f"hyperbola tail above {tol} at T = {max_T} (r = {r})")
    return T


def _quad(f, a, b, tol, spec: QuadratureSpec):
    try:
        return integrate(f, a, b, tol, spec.max_intervals)
    except QuadratureError as exc:
        raise TailBoundFailed(str(exc)) from exc


def mean_value_phi(phi: TestFunction, r: float, quad: QuadratureSpec = QuadratureSpec(),
                   half: bool = False) -> float:
    """phi_nat(r) = int phi(r cosh t, r sinh t) dt; ``half`` integrates t >= 0 only."""
    if r <= 0:
        raise DomainError("phi_nat needs r > 0")
    T = _truncation(phi.envelope(), r, quad.tol / 4, quad.max_T)

    def f(t):
        return phi.value(r * np.cosh(t), r * np.sinh(t))

    val, _ = _quad(f, 0.0 if half else -T, T, quad.tol / 2, quad)
    return float(val)


def mean_value_dr(phi: TestFunction, r: float, quad: QuadratureSpec = QuadratureSpec()) -> float:
    """(d phi / d r)_nat(r): the hyperbolic mean of the radial derivative."""
    env = _integrand_envelope(phi, r)
    T = _truncation(env, r, quad.tol / 4, quad.max_T)

    def f(t):
        c, s = np.cosh(t), np.sinh(t)
        gx, gy = phi.grad(r * c, r * s)
        return c * gx + s * gy

    return float(_quad(f, -T, T, quad.tol / 2, quad)[0])


def t_derivative_integral(phi: TestFunction, r: float, quad: QuadratureSpec = QuadratureSpec()) -> float:
    """int d/dt phi(r cosh t, r sinh t) dt over the truncated range (should vanish)."""
    env = _integrand_envelope(phi, r)
    T = _truncation(env, r, quad.tol / 4, quad.max_T)

    def f(t):
        c, s = np.cosh(t), np.sinh(t)
        gx, gy = phi.grad(r * c, r * s)
        return r * (s * gx + c * gy)

    return float(_quad(f, -T, T, quad.tol / 2, quad)[0])


def _integrand_envelope(phi: TestFunction, r: float) -> Envelope:
    """|cosh t phi_x + sinh t phi_y| and |sinh t phi_x + cosh t phi_y| are <= (rho/r)|grad phi|."""
    g = phi.grad_envelope()
    return Envelope(g.K * _peak(1, g.kappa) / r, g.kappa / 2)


@dataclass
class Pairing:
    scalar: float
    j_part: float
    mean_value: float
    R: float
    tol: float

    @property
    def element(self) -> Element:
        return preset("hyperbolic_complex").element([self.scalar, self.j_part], "float")

    @property
    def difference(self) -> float:
        return abs(self.scalar - self.mean_value)

    @property
    def passed(self) -> bool:
        return self.difference <= 10 * self.tol and abs(self.j_part) <= 10 * self.tol

    def to_dict(self) -> dict:
        return {
            "pairing": [self.scalar, self.j_part],
            "mean_value": self.mean_value,
            "difference": self.difference,
            "R": self.R,
            "tol": self.tol,
            "pass": self.passed,
        }


def pairing_E(phi: TestFunction, eps: float, quad: QuadratureSpec = QuadratureSpec()) -> Pairing:
    """-int int_{r > eps} (2/z) (d phi / d z*) r dr dt over wedge +x, as a hyperbolic complex pair.

    With z^{-1} = r^{-1} e^{-jt} the integrand is -e^{-jt}(phi_x - j phi_y), whose scalar
    part is -d phi/dr and whose j-part is (1/r) d phi/dt.
    """
    if eps <= 0:
        raise DomainError("pairing needs eps > 0")
    genv = phi.grad_envelope()
    R = max(2 * eps, 1.0)
    while Envelope(genv.K * _peak(1, genv.kappa), genv.kappa / 2).radial_tail(R) >= quad.tol / 8:
        R *= 1.25
        if R > quad.max_R:
            raise TailBoundFailed(f"radial tail above tolerance at R = {quad.max_R}")
    inner_tol = quad.tol / (8 * (R - eps))

    def inner(r: float) -> np.ndarray:
        T = _truncation(_integrand_envelope(phi, r), r, inner_tol / 2, quad.max_T)

        def f(t):
            c, s = np.cosh(t), np.sinh(t)
            gx, gy = phi.grad(r * c, r * s)
            # -e^{-jt} (phi_x - j phi_y) = -(c phi_x + s phi_y) + j (s phi_x + c phi_y)
            return np.stack([-(c * gx + s * gy), s * gx + c * gy], axis=-1)

        return _quad(f, -T, T, inner_tol, quad)[0]

    def outer(rs: np.ndarray) -> np.ndarray:
        return np.array([inner(float(r)) for r in rs])

    total, _ = _quad(outer, eps, R, quad.tol / 4, quad)
    mean = mean_value_phi(phi, eps, quad)
    return Pairing(float(total[0]), float(total[1]), mean, R, quad.tol)


def bessel_oracle(phi: TestFunction, r: float) -> float:
    """phi_nat(r) for a gaussian: A int exp(-(r/w)^2 cosh 2t) dt = A K_0((r/w)^2)."""
    if phi.kind != "gaussian":
        raise DomainError("the Bessel oracle only covers gaussians")
    return float(phi.amplitude * mpmath.besselk(0, (r / phi.width) ** 2))


def limit_report(phi: TestFunction, eps_grid, quad: QuadratureSpec = QuadratureSpec()) -> list[dict]:
    """phi_nat(eps) next to phi(0) along a decreasing grid; observational only."""
    rows = []
    for eps in eps_grid:
        row = {"eps": eps, "phi_nat": mean_value_phi(phi, eps, quad), "phi0": phi.at_origin()}
        if phi.kind == "gaussian":
            row["bessel_k0"] = bessel_oracle(phi, eps)
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# Delta_plus: symbol, characteristic set, fundamental solution


@dataclass(frozen=True)
class SymbolValue:
    p: complex
    minus_4p: complex
    conjugate_form: complex  # conj(lambda)^2 + i conj(mu)^2

    @property
    def residual(self) -> float:
        return abs(self.minus_4p - self.conjugate_form)


def symbol_delta_plus(xi) -> SymbolValue:
    """p(xi) = 1/4 [(i xi1 + xi2)^2 + i (i xi3 + xi4)^2]."""
    x1, x2, x3, x4 = (float(v) for v in xi)
    p = 0.25 * ((1j * x1 + x2) ** 2 + 1j * (1j * x3 + x4) ** 2)
    lam, mu = complex(x1, x2), complex(x3, x4)
    return SymbolValue(p, -4 * p, lam.conjugate() ** 2 + 1j * mu.conjugate() ** 2)


def symbol_exact(xi) -> tuple:
    """Real and imaginary parts of p(xi) in exact rational arithmetic."""
    from fractions import Fraction

    x1, x2, x3, x4 = (Fraction(v) for v in xi)
    re = (x2 * x2 - x1 * x1 - 2 * x3 * x4) / 4
    im = (2 * x1 * x2 + x4 * x4 - x3 * x3) / 4
    return re, im


@dataclass(frozen=True)
class Membership:
    member: bool
    real_test: bool
    complex_test: bool
    lam_mu_nonzero: bool


def char_membership(xi, tol: float = 1e-9) -> Membership:
    """Membership of the characteristic set, tested two independent ways.

    Real equations: xi1^2 - xi2^2 + 2 xi3 xi4 = 0 and xi3^2 - xi4^2 - 2 xi1 xi2 = 0.
    Complex form: lambda = +-e^{i pi/4} mu with lambda = xi1 + i xi2, mu = xi3 + i xi4.
    """
    x1, x2, x3, x4 = (float(v) for v in xi)
    size2 = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4
    if size2 == 0:
        raise DomainError("the characteristic set excludes xi = 0")
    e1 = x1 * x1 - x2 * x2 + 2 * x3 * x4
    e2 = x3 * x3 - x4 * x4 - 2 * x1 * x2
    real_test = max(abs(e1), abs(e2)) <= tol * size2
    lam, mu = complex(x1, x2), complex(x3, x4)
    gap = min(abs(lam - OMEGA * mu), abs(lam + OMEGA * mu))
    complex_test = gap <= tol * math.sqrt(size2)
    if real_test != complex_test:
        raise CharacterizationMismatch(f"real test {real_test} vs complex test {complex_test} at {xi}")
    return Membership(real_test, real_test, complex_test, abs(lam) > 0 and abs(mu) > 0)


def E1(u: complex) -> complex:
    """Fundamental solution 1/(pi conj(u)) of d/du."""
    return 1 / (math.pi * u.conjugate())


def eps_delta_plus(z: complex, w: complex, tol: float = 1e-12) -> complex:
    """E1(z + e^{i pi/4} w) E1(z - e^{i pi/4} w)."""
    a, b = z + OMEGA * w, z - OMEGA * w
    scale = abs(z) + abs(w)
    if abs(a) <= tol * scale or abs(b) <= tol * scale or scale == 0:
        raise Singular(f"(z, w) = ({z}, {w}) lies on the exceptional set z = +-e^(i pi/4) w")
    return E1(a) * E1(b)


def eps_closed_form(z: complex, w: complex) -> complex:
    return 1 / (math.pi ** 2 * (z.conjugate() ** 2 + 1j * w.conjugate() ** 2))


def _eps_element(point: Element) -> Element:
    """The fundamental solution as a double-complex valued function of x0..x3."""
    dc = point.algebra
    x0, x1, x2, x3 = point.coeffs
    zero = 0.0 * x0
    zbar = Element(dc, (x0, -x1, zero, zero), point.mode)
    wbar = Element(dc, (x2, -x3, zero, zero), point.mode)
    i = dc.unit("i")
    denom = (zbar * zbar + i * (wbar * wbar)) * (math.pi ** 2)
    return jets.jet_inverse(denom) if point.mode == "jet" else inverse(denom)


def delta_plus_residual(z: complex, w: complex) -> tuple[float, float]:
    """(raw, normalized) |Delta_plus eps| at (z, w), derivatives from jets."""
    eps_delta_plus(z, w)  # raises Singular
    dc = preset("double_complex")
    point = dc.element([z.real, z.imag, w.real, w.imag])
    table = jet_partials(_eps_element, point)
    r = apply_to_partials(laplacian(dc, "delta_plus"), table).norm()
    return r, r / (1.0 + partial_scale(table))


__all__ = [
    "E1", "E_holomorphic_check", "HyperbolicCoords", "Membership", "Pairing", "QuadratureSpec",
    "SymbolValue", "TestFunction", "bessel_oracle", "char_membership", "dbar_hyperbolic_identity_check",
    "delta_plus_residual", "eps_closed_form", "eps_delta_plus", "from_hyperbolic", "jacobian",
    "limit_report", "mean_value_dr", "mean_value_phi", "pairing_E", "symbol_delta_plus",
    "symbol_exact", "t_derivative_integral", "to_hyperbolic",
]
