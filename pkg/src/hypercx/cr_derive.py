"""Exact derivation of component Cauchy-Riemann systems.

A function ``f = sum_p e_p f_p`` with real components ``f_p`` is pushed
through a catalog operator symbolically: each term ``L d^I (e_p f_p) R``
contributes the coefficient vector of ``L e_p R`` to the unknown
``d^I f_p``.  Collecting per basis component gives one real linear
relation per component, with rational coefficients.

Systems are compared by row space over the rationals (via RREF), so two
presentations of the same system compare equal regardless of scaling,
ordering or taking linear combinations.

Unknowns are pairs ``(p, I)``: component index and sorted multi-index of
real coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .algebra import AlgebraDescriptor, preset
from .errors import EliminationFailed, UnknownGoldenId, UnknownOperator
from .operators import LinDiffOp, Pair, catalog, operator

Unknown = tuple[int, tuple[int, ...]]
Row = dict  # Unknown -> Fraction


def _unknown_key(u: Unknown):
    return (len(u[1]), u[0], u[1])


def _clean(row: Row) -> Row:
    return {k: v for k, v in row.items() if v != 0}


def symbolic_rows(op: LinDiffOp, components: Iterable[int] | None = None) -> list[Row]:
    """One relation per basis component of ``op`` applied to ``sum_p e_p f_p``."""
    alg = op.algebra
    comps = range(alg.dim) if components is None else list(components)
    rows: list[Row] = [dict() for _ in range(alg.dim)]
    for t in op.terms:
        for p in comps:
            c = t.left * alg.basis(p, "rational")
            if t.right is not None:
                c = c * t.right
            for k, v in enumerate(c.coeffs):
                if v:
                    key = (p, t.index)
                    rows[k][key] = rows[k].get(key, Fraction(0)) + v
    return [r for r in map(_clean, rows) if r]


@dataclass(frozen=True)
class CRSystem:
    """Linear relations among partials of the components, kept in RREF."""

    components: int
    coordinates: int
    unknowns: tuple[Unknown, ...]  # column order
    rows: tuple[tuple[Fraction, ...], ...]  # canonical RREF rows
    algebra: str | None = None

    @classmethod
    def from_rows(cls, rows: Sequence[Row], components: int, coordinates: int,
                  algebra: str | None = None, unknowns: Sequence[Unknown] | None = None) -> "CRSystem":
        cols = set(unknowns or ())
        for r in rows:
            cols.update(r)
        cols = tuple(sorted(cols, key=_unknown_key))
        dense = [[Fraction(r.get(c, 0)) for c in cols] for r in rows]
        canon = _linalg.rref(dense)
        return cls(components, coordinates, cols, tuple(tuple(r) for r in canon), algebra)

    @property
    def order(self) -> int:
        return max((len(u[1]) for u in self.unknowns), default=0)

    def relations(self) -> list[Row]:
        return [{u: v for u, v in zip(self.unknowns, r) if v} for r in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    def reindexed(self, unknowns: Sequence[Unknown]) -> list[list[Fraction]]:
        """Rows as dense vectors over a (super)set of unknowns."""
        pos = {u: i for i, u in enumerate(unknowns)}
        out = []
        for r in self.rows:
            v = [Fraction(0)] * len(unknowns)
            for u, x in zip(self.unknowns, r):
                if x:
                    v[pos[u]] = x
            out.append(v)
        return out

    def same_space(self, other: "CRSystem") -> bool:
        return not compare(self, other).nonempty

    def contains(self, other: "CRSystem") -> bool:
        """Every relation of ``other`` lies in this system's row space."""
        return not compare(other, self).extra

    def format(self, names: Sequence[str] | None = None) -> list[str]:
        return [format_relation(r, names) for r in self.relations()]

    def to_json(self) -> list[dict]:
        return [
            [{"component": u[0], "derivative": list(u[1]), "coef": str(v)} for u, v in r.items()]
            for r in self.relations()
        ]


def format_relation(row: Row, names: Sequence[str] | None = None) -> str:
    parts = []
    for (p, idx), v in sorted(row.items(), key=lambda kv: _unknown_key(kv[0])):
        var = "".join(names[k] if names else f"x{k}" for k in idx)
        sym = f"d{var} f{p}"
        mag = abs(v)
        coef = "" if mag == 1 else f"{mag}*"
        sign = "-" if v < 0 else "+"
        parts.append(f"{sign} {coef}{sym}")
    text = " ".join(parts) if parts else "0"
    return (text[2:] if text.startswith("+ ") else "-" + text[2:]) + " = 0"


@dataclass(frozen=True)
class Diff:
    missing: tuple[Row, ...]  # in the reference but not implied by the candidate
    extra: tuple[Row, ...]  # in the candidate but not implied by the reference

    @property
    def nonempty(self) -> bool:
        return bool(self.missing or self.extra)

    def to_json(self) -> dict:
        def enc(rows):
            return [format_relation(r) for r in rows]

        return {"missing": enc(self.missing), "extra": enc(self.extra)}


def compare(candidate: CRSystem, reference: CRSystem) -> Diff:
    cols = tuple(sorted(set(candidate.unknowns) | set(reference.unknowns), key=_unknown_key))
    a = candidate.reindexed(cols)
    b = reference.reindexed(cols)
    ra, rb = _linalg.rank(a), _linalg.rank(b)

    def outside(rows, space, base_rank):
        return tuple(
            {u: v for u, v in zip(cols, r) if v}
            for r in rows if _linalg.rank(space + [r]) > base_rank
        )

    return Diff(missing=outside(b, a, ra), extra=outside(a, b, rb))


# ---------------------------------------------------------------------------
# derivation


def derive_cr(algebra: AlgebraDescriptor | str, ops: Sequence[str],
              components: Iterable[int] | None = None) -> CRSystem:
    """CR system of the operators in ``ops``; optionally only the relations
    that involve nothing but the listed components."""
    alg = preset(algebra) if isinstance(algebra, str) else algebra
    if isinstance(ops, str):
        ops = [o for o in ops.split(",") if o]
    rows: list[Row] = []
    for name in ops:
        rows.extend(symbolic_rows(operator(alg, name)))
    system = CRSystem.from_rows(rows, alg.dim, alg.dim, alg.name)
    if components is not None:
        system = restrict(system, components)
    return system


def restrict(system: CRSystem, components: Iterable[int]) -> CRSystem:
    """Relations of the row space that only involve the given components."""
    keep = set(components)
    relations = eliminate(system.relations(), lambda u: u[0] in keep)
    return CRSystem.from_rows(relations, system.components, system.coordinates, system.algebra)


def eliminate(relations: Sequence[Row], keep) -> list[Row]:
    """Basis of the part of span(relations) that only uses unknowns with keep(u)."""
    cols = set()
    for r in relations:
        cols.update(r)
    dropped = sorted((c for c in cols if not keep(c)), key=_unknown_key)
    kept = sorted((c for c in cols if keep(c)), key=_unknown_key)
    order = dropped + kept
    dense = [[Fraction(r.get(c, 0)) for c in order] for r in relations]
    reduced = _linalg.rref(dense)
    n_drop = len(dropped)
    out = []
    for r in reduced:
        lead = next(i for i, x in enumerate(r) if x)
        if lead >= n_drop:
            out.append({c: x for c, x in zip(order, r) if x})
    return out


def prolong(relations: Sequence[Row], coordinates: int) -> list[Row]:
    """Differentiate every relation by every coordinate."""
    out = []
    for r in relations:
        for k in range(coordinates):
            out.append({(p, tuple(sorted(idx + (k,)))): v for (p, idx), v in r.items()})
    return out


def second_order_consequences(system: CRSystem,
                              groups: Sequence[Sequence[int]] | None = None) -> dict[tuple[int, ...], CRSystem]:
    """Pure second-order relations satisfied by each group of components.

    The first-order relations are prolonged by every coordinate; then all
    second partials of components outside the group are eliminated.  With
    no ``groups`` every component is treated on its own.
    """
    if groups is None:
        groups = [(p,) for p in range(system.components)]
    prolonged = prolong(system.relations(), system.coordinates)
    out = {}
    for g in groups:
        keep = set(g)
        rel = eliminate(prolonged, lambda u: u[0] in keep)
        if not rel:
            raise EliminationFailed(f"no pure second-order relation for components {tuple(g)}")
        out[tuple(g)] = CRSystem.from_rows(rel, system.components, system.coordinates, system.algebra)
    return out


def operator_system(op: LinDiffOp | tuple[str, str], components: Iterable[int]) -> CRSystem:
    """Relations ``op f = 0`` for ``f`` supported on the given components."""
    if isinstance(op, tuple):
        op = operator(*op)
    comps = list(components)
    rows = symbolic_rows(op, comps)
    return CRSystem.from_rows(rows, op.algebra.dim, op.algebra.dim, op.algebra.name)


def groups_of(algebra: str) -> list[tuple[int, int]]:
    """Component groups matching the algebra's Wirtinger variables."""
    return [(p.a, p.b) for p in catalog(algebra).pairs]


# ---------------------------------------------------------------------------
# Wirtinger-grouped presentation


@dataclass(frozen=True)
class WUnknown:
    """Real or inner-unit part of d f_P / d V (or d V-bar when ``conj``)."""

    component: int  # group index P
    variable: int  # group index V
    conj: bool
    part: int  # 0 real part, 1 inner-unit part


def wirtinger_rows(system: CRSystem, pairs: Sequence[Pair]) -> list[dict]:
    """Rewrite first-order relations in Wirtinger unknowns.

    With ``f_P = g + u h`` and ``V = a + u b`` (u^2 = s), the real partials are
    ``g_a = A + C``, ``h_a = B + D``, ``g_b = s (B - D)``, ``h_b = A - C`` where
    ``d_V f_P = A + u B`` and ``d_Vbar f_P = C + u D``.
    """
    comp_of = {}
    for P, pr in enumerate(pairs):
        comp_of[pr.a] = (P, 0)
        comp_of[pr.b] = (P, 1)
    var_of = {}
    for V, pr in enumerate(pairs):
        var_of[pr.a] = (V, 0, pr.square)
        var_of[pr.b] = (V, 1, pr.square)
    out = []
    for rel in system.relations():
        row: dict = {}
        for (p, idx), c in rel.items():
            if len(idx) != 1:
                raise ValueError("Wirtinger presentation needs a first-order system")
            P, role = comp_of[p]
            V, vrole, s = var_of[idx[0]]
            A, B = WUnknown(P, V, False, 0), WUnknown(P, V, False, 1)
            C, D = WUnknown(P, V, True, 0), WUnknown(P, V, True, 1)
            if (role, vrole) == (0, 0):
                terms = {A: 1, C: 1}
            elif (role, vrole) == (1, 0):
                terms = {B: 1, D: 1}
            elif (role, vrole) == (0, 1):
                terms = {B: s, D: -s}
            else:
                terms = {A: 1, C: -1}
            for w, m in terms.items():
                row[w] = row.get(w, Fraction(0)) + c * m
        out.append({k: v for k, v in row.items() if v})
    return out


def wirtinger_space(rows: Sequence[dict]) -> list[tuple]:
    cols = sorted({k for r in rows for k in r}, key=lambda w: (w.component, w.variable, w.conj, w.part))
    dense = [[Fraction(r.get(c, 0)) for c in cols] for r in rows]
    return [tuple((c, x) for c, x in zip(cols, r) if x) for r in _linalg.rref(dense)]


# ---------------------------------------------------------------------------
# golden systems

# K-form term: (coefficient (real, inner-unit part), component group, variable group, conj)
KTerm = tuple[tuple[int, int], int, int, bool]


def _real(*eqs) -> list[Row]:
    return [{(p, (k,)): Fraction(c) for p, k, c in eq} for eq in eqs]


def k_form_rows(equations: Sequence[Sequence[KTerm]], pairs: Sequence[Pair]) -> list[Row]:
    """Real relations of equations sum coef * d_V f_P = 0 written over the inner unit.

    d_V f = 1/2[(g_a + h_b) + u(h_a + s g_b)],  d_Vbar f = 1/2[(g_a - h_b) + u(h_a - s g_b)],
    and (al + u be)(X + u Y) = al X + s be Y + u(al Y + be X).
    """
    rows = []
    for eq in equations:
        re_row: Row = {}
        u_row: Row = {}
        for (al, be), P, V, conj in eq:
            g, h = pairs[P].a, pairs[P].b
            a, b, s = pairs[V].a, pairs[V].b, pairs[V].square
            t = -1 if conj else 1
            X = {(g, (a,)): Fraction(1, 2), (h, (b,)): Fraction(t, 2)}
            Y = {(h, (a,)): Fraction(1, 2), (g, (b,)): Fraction(t * s, 2)}
            for k, v in X.items():
                re_row[k] = re_row.get(k, 0) + al * v
                u_row[k] = u_row.get(k, 0) + be * v
            for k, v in Y.items():
                re_row[k] = re_row.get(k, 0) + s * be * v
                u_row[k] = u_row.get(k, 0) + al * v
        rows.extend(r for r in (_clean(re_row), _clean(u_row)) if r)
    return rows


def _k(*terms) -> list[KTerm]:
    return [((c if isinstance(c, tuple) else (c, 0)), P, V, conj) for c, P, V, conj in terms]


_ONE, _MINUS_U = (1, 0), (0, -1)

# f0 = d_w f1 and d_w f0 = sigma d_z f1 with sigma in {1, -1, u}
_PAIR_SYSTEM = {
    "plus": [_k((1, 0, 0, False), (-1, 1, 1, False)), _k((1, 0, 1, False), (-1, 1, 0, False))],
    "minus": [_k((1, 0, 0, False), (-1, 1, 1, False)), _k((1, 0, 1, False), (1, 1, 0, False))],
    "unit": [_k((1, 0, 0, False), (-1, 1, 1, False)), _k((1, 0, 1, False), (_MINUS_U, 1, 0, False))],
}


@dataclass(frozen=True)
class Golden:
    ident: str
    claim: str
    algebra: str
    ops: tuple[str, ...]
    components: tuple[int, ...] | None = None
    real: tuple = ()
    k_form: tuple = ()

    def system(self) -> CRSystem:
        alg = preset(self.algebra)
        if self.k_form:
            rows = k_form_rows(self.k_form, catalog(self.algebra).pairs)
        else:
            rows = list(self.real)
        return CRSystem.from_rows(rows, alg.dim, alg.dim, alg.name)

    def derived(self) -> CRSystem:
        return derive_cr(self.algebra, self.ops, self.components)


def _golden_table() -> dict[str, Golden]:
    conj_pair = [
        _k((1, 0, 0, True), (-1, 1, 1, True)),
        _k((1, 0, 1, True), (-1, 1, 0, True)),
    ]
    entries = [
        Golden("CR3", "classical Cauchy-Riemann system", "complex", ("dzbar",),
               real=tuple(_real([(0, 0, 1), (1, 1, -1)], [(0, 1, 1), (1, 0, 1)]))),
        Golden("CR6", "hyperbolic Cauchy-Riemann system", "hyperbolic_complex", ("dzstar",),
               real=tuple(_real([(0, 0, 1), (1, 1, -1)], [(0, 1, 1), (1, 0, -1)]))),
        Golden("CR8", "eight-equation hyperbolic 4-real system", "four_real_hyperbolic",
               ("dalphastar", "dbetastar"),
               real=tuple(_real(
                   [(0, 0, 1), (2, 2, -1)], [(0, 2, 1), (2, 0, -1)],
                   [(1, 0, 1), (3, 2, -1)], [(1, 2, 1), (3, 0, -1)],
                   [(0, 1, 1), (2, 3, -1)], [(0, 3, 1), (2, 1, -1)],
                   [(1, 1, 1), (3, 3, -1)], [(1, 3, 1), (3, 1, -1)],
               ))),
        Golden("CR6pp", "bicomplex Cauchy-Riemann system", "bicomplex", ("dalphastar",),
               k_form=tuple(map(tuple, _PAIR_SYSTEM["minus"]))),
        Golden("CR6ppp", "double-complex Cauchy-Riemann system", "double_complex", ("dalphastar",),
               k_form=tuple(map(tuple, _PAIR_SYSTEM["unit"]))),
        Golden("CR21", "hyperbolic bicomplex Cauchy-Riemann system", "hyperbolic_bicomplex",
               ("dalphastar",), k_form=tuple(map(tuple, _PAIR_SYSTEM["plus"]))),
        Golden("CR22", "elliptic bicomplex Cauchy-Riemann system (Price form)", "bicomplex",
               ("dalphastar",), k_form=tuple(map(tuple, _PAIR_SYSTEM["minus"]))),
        Golden("CR5thm", "hyperbolic double-complex holomorphy system", "hyperbolic_double_complex",
               ("dqstar",), k_form=tuple(map(tuple, _PAIR_SYSTEM["unit"]))),
        Golden("CR27", "coquaternion even/odd part system with its conjugate companion",
               "coquaternion", ("dqstar", "dqbarstar"),
               k_form=tuple(map(tuple, _PAIR_SYSTEM["plus"] + conj_pair))),
        Golden("CR9a", "hyperbolic CR(x0, x2) system", "four_real_hyperbolic", ("dalphastar",), (0, 2),
               real=tuple(_real([(0, 0, 1), (2, 2, -1)], [(0, 2, 1), (2, 0, -1)]))),
        Golden("CR9b", "hyperbolic CR(x1, x3) system", "four_real_hyperbolic", ("dbetastar",), (1, 3),
               real=tuple(_real([(1, 1, 1), (3, 3, -1)], [(1, 3, 1), (3, 1, -1)]))),
    ]
    return {g.ident: g for g in entries}


GOLDEN = _golden_table()


def golden(ident: str) -> Golden:
    try:
        return GOLDEN[ident]
    except KeyError:
        raise UnknownGoldenId(f"unknown golden id {ident!r}; choose from {', '.join(GOLDEN)}") from None


def golden_compare(derived: CRSystem, ident: str) -> Diff:
    return compare(derived, golden(ident).system())


# ---------------------------------------------------------------------------
# second-order expectations


@dataclass(frozen=True)
class SecondOrderCase:
    ident: str
    source: str  # golden id
    groups: tuple[tuple[int, ...], ...]
    operators: tuple[str, ...]  # one catalog operator per group
    exact: bool = True  # equality (True) or containment (False)

    def run(self) -> dict:
        g = golden(self.source)
        cons = second_order_consequences(g.system(), self.groups)
        report = {}
        for grp, name in zip(self.groups, self.operators):
            expected = operator_system((g.algebra, name), grp)
            got = cons[grp]
            ok = got.same_space(expected) if self.exact else got.contains(expected)
            report[grp] = (ok, got, expected)
        return report


SECOND_ORDER_CASES = {
    "laplace_from_CR3": SecondOrderCase("laplace_from_CR3", "CR3", ((0,), (1,)), ("laplace", "laplace")),
    "wave_from_CR6": SecondOrderCase("wave_from_CR6", "CR6", ((0,), (1,)), ("wave", "wave")),
    "delta_h_from_CR21": SecondOrderCase("delta_h_from_CR21", "CR21", ((0, 1), (2, 3)), ("delta_h", "delta_h")),
    "wave02_from_CR9a": SecondOrderCase("wave02_from_CR9a", "CR9a", ((0,), (2,)), ("wave02", "wave02")),
    "wave13_from_CR9b": SecondOrderCase("wave13_from_CR9b", "CR9b", ((1,), (3,)), ("wave13", "wave13")),
    "delta_plus_from_CR6ppp": SecondOrderCase("delta_plus_from_CR6ppp", "CR6ppp", ((0, 1), (2, 3)),
                                              ("delta_plus", "delta_plus")),
    "delta_zw_from_CR27": SecondOrderCase("delta_zw_from_CR27", "CR27", ((0, 1), (2, 3)),
                                          ("delta_zw", "delta_zw"), exact=False),
    "delta_zbarwbar_from_CR27": SecondOrderCase("delta_zbarwbar_from_CR27", "CR27", ((0, 1), (2, 3)),
                                                ("delta_zbarwbar", "delta_zbarwbar"), exact=False),
}


def ops_or_raise(algebra: str, names: Sequence[str]) -> None:
    for n in names:
        operator(algebra, n)  # raises UnknownOperator


__all__ = [
    "CRSystem", "Diff", "GOLDEN", "SECOND_ORDER_CASES", "UnknownOperator", "compare", "derive_cr",
    "golden", "golden_compare", "operator_system", "second_order_consequences", "symbolic_rows",
    "SecondOrderCase", "WUnknown", "eliminate", "k_form_rows", "prolong", "restrict", "wirtinger_rows",
    "wirtinger_space",
]
