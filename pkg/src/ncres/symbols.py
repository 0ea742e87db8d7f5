"""Catalog of boundary symbols at x0 with |xi'| = 1, as first-order jets in x_n.

Each entry stores the symbol value at the boundary point and (where needed)
its normal derivative, with the substitutions d_xn|xi|^2 = h and
d_xn c(xi') = (h/2) c(xi') already applied.  Entries are tagged with the
equation numbers of the printed derivation they instantiate, so reports can
be diffed against the source text directly.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .clifford import CliffordElem, TraceConvention, sigma0_codxn_coefficient
from .rational import (
    CP_ONE,
    CoeffPoly,
    GQ_I,
    GaussianRational,
    RationalFn,
    XiPoly,
)


class UnsupportedConfigurationError(ValueError):
    """Operator pair outside the covered theorem families."""


COVERED_FAMILIES = "(2m+2,1,2m-1), (2m+1,1,2m-1), (2m+1,1,2m-2), (2m,1,2m-2), (2m+3,2,2m-1)"


def resolve_config(n: int, p1: int, p2: int) -> tuple[int, str]:
    """Map (n, p1, p2) to (m, theorem id); raise if not covered."""
    if p1 == 1 and p2 >= 1 and p2 % 2 == 1:
        m = (p2 + 1) // 2
        if n == 2 * m + 2:
            return m, "1.1"
        if n == 2 * m + 1:
            return m, "3.1"
    if p1 == 1 and p2 >= 0 and p2 % 2 == 0:
        m = (p2 + 2) // 2
        if n == 2 * m + 1:
            return m, "3.2"
        if n == 2 * m:
            return m, "3.3"
    if p1 == 2 and p2 >= 1 and p2 % 2 == 1:
        m = (p2 + 1) // 2
        if n == 2 * m + 3:
            return m, "3.4"
    raise UnsupportedConfigurationError(
        f"unsupported configuration (n={n}, p1={p1}, p2={p2}): the symbol catalog "
        f"holds orders r in {{-p1, -p1-1}} only for the families {COVERED_FAMILIES}")


def inv_norm(k: int) -> RationalFn:
    """(1 + xi^2)^(-k) in canonical pole form, k >= 0."""
    if k < 0:
        return norm_power(-k)
    if k == 0:
        return RationalFn.one()
    return RationalFn.from_fraction(XiPoly.const(CP_ONE), k, k)


def norm_power(p: int) -> RationalFn:
    """(1 + xi^2)^p for any integer p."""
    if p < 0:
        return inv_norm(-p)
    base = RationalFn(poly={0: CP_ONE, 2: CP_ONE})
    return base ** p


def _h(scale: Fraction | int = 1, im: bool = False, degree: int = 1) -> CoeffPoly:
    g = GaussianRational.of(0, Fraction(scale)) if im else GaussianRational.of(Fraction(scale))
    return CoeffPoly({degree: g})


@dataclass(frozen=True)
class SymbolJet:
    """Boundary symbol at x0, |xi'| = 1: value and first x_n-jet."""

    value: CliffordElem
    dxn: CliffordElem | None
    order: int
    label: str
    eq_tag: str
    xn_family: tuple[str, int] | None = None  # metric-model realization hook

    def require_dxn(self) -> CliffordElem:
        if self.dxn is None:
            raise ValueError(f"{self.label} carries no x_n-jet")
        return self.dxn


@dataclass(frozen=True)
class PlusSymbol:
    """A pi^+-projected left factor (value and optional x_n derivative)."""

    value: CliffordElem
    dxn: CliffordElem | None
    order: int
    label: str
    eq_tag: str
    source: SymbolJet | None = None

    def require_dxn(self) -> CliffordElem:
        if self.dxn is None:
            raise ValueError(f"{self.label} carries no x_n-jet")
        return self.dxn


def d_xi_n(s: SymbolJet, k: int) -> SymbolJet:
    """k-fold xi_n derivative applied to both jet components."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return s
    value, dxn = s.value, s.dxn
    for _ in range(k):
        value = value.differentiate()
        dxn = dxn.differentiate() if dxn is not None else None
    return SymbolJet(value, dxn, s.order - k, f"d_xi^{k} {s.label}", s.eq_tag, None)


def pi_plus_jet(s: SymbolJet) -> PlusSymbol:
    """Apply the half-plane projection coefficient-wise to the whole jet.

    pi^+ acts in xi_n only, so it commutes with d_xn.
    """
    return PlusSymbol(
        value=s.value.pi_plus(),
        dxn=s.dxn.pi_plus() if s.dxn is not None else None,
        order=s.order,
        label=f"pi+{s.label}",
        eq_tag=s.eq_tag,
        source=s,
    )


# ---- catalog constructors ----

def sigma_leading_inverse_power(m: int) -> SymbolJet:
    """sigma_{1-2m}(D^{1-2m}) = i c(xi) / |xi|^(2m); m=1 gives sigma_{-1}(D^{-1})."""
    if m < 1:
        raise ValueError("m must be >= 1")
    val = CliffordElem.c_xi().scale(inv_norm(m).scale(GQ_I))
    dxn = (CliffordElem.c_xi_prime(inv_norm(m).scale(_h(Fraction(1, 2), im=True)))
           + CliffordElem.c_xi().scale(inv_norm(m + 1).scale(_h(-m, im=True))))
    return SymbolJet(val, dxn, 1 - 2 * m, f"sigma_{1-2*m}_D{1-2*m}",
                     "(3.3)/(3.11); d_xn per (3.17)", xn_family=("odd", m))


def sigma_minus2_D2(m: int) -> SymbolJet:
    """sigma_{2-2m}(D^{2-2m}) = (|xi|^2)^(1-m)  (identity Clifford word)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    val = CliffordElem.scalar(norm_power(1 - m))
    dxn = CliffordElem.scalar(inv_norm(m).scale(_h(1 - m)))
    return SymbolJet(val, dxn, 2 - 2 * m, f"sigma_{2-2*m}_D{2-2*m}",
                     "(3.3)", xn_family=("even", m))


def sigma0_D(n: int) -> CliffordElem:
    """sigma_0(D)(x0) = c0 c(dxn), c0 = (1-n)/4 h."""
    return CliffordElem.c_dxn(RationalFn.const(sigma0_codxn_coefficient(n)))


def sigma_minus3_D2(n: int) -> CliffordElem:
    """sigma_{-3}(D^{-2})(x0)|_{|xi'|=1}, the printed (3.36) constant."""
    xi = RationalFn.xi()
    scalar = (xi * inv_norm(2)).scale(_h(Fraction(-(n - 1), 2), im=True)) \
        + (xi * inv_norm(3)).scale(_h(-2, im=True))
    w = inv_norm(2).scale(_h(Fraction(1, 2), im=True))
    return CliffordElem((scalar, RationalFn.zero(), RationalFn.zero(), w))


def sigma_subleading_even(q: int, n: int) -> CliffordElem:
    """sigma_{-2q-1}(D^{-2q}) from the composition expansion; zero for q = 0.

    Equals q * (|xi|^2)^(1-q) * sigma_{-3}(D^{-2}) plus the scalar k-sum
    contribution -i (q^2 - q) h xi_n (1+xi_n^2)^(-q-2), cf. (3.4)/(3.35).
    """
    if q < 0:
        raise ValueError("q must be >= 0")
    if q == 0:
        return CliffordElem.zero()
    base = sigma_minus3_D2(n).scale(norm_power(1 - q).scale(GaussianRational.of(q)))
    ksum = CliffordElem.scalar((RationalFn.xi() * inv_norm(q + 2)).scale(_h(-(q * q - q), im=True)))
    return base + ksum


def sigma_minus2m_D1minus2m(m: int, n: int) -> CliffordElem:
    """sigma_{-2m}(D^{1-2m}) assembled mechanically from the composition terms.

    Three ingredients: |xi|^(-2m) sigma_0(D); the xi_n-slot of the alpha-sum,
    -2m xi_n (1+xi_n^2)^(-m-1) d_xn c(xi'); and sigma_{-2m-1}(D^{-2m}) * i c(xi).
    Matches the printed closed form (3.37) term by term.
    """
    t1 = sigma0_D(n).scale(inv_norm(m))
    t2 = CliffordElem.c_xi_prime((RationalFn.xi() * inv_norm(m + 1)).scale(_h(-m)))
    t3 = sigma_subleading_even(m, n) * CliffordElem.c_xi().scale(RationalFn.const(GQ_I))
    return t1 + t2 + t3


def b_one(n: int) -> CliffordElem:
    """The B1 half of pi^+ sigma_{-2}(D^{-1}), per the printed (3.26) bracket."""
    u = CliffordElem.c_xi_prime()
    v = CliffordElem.c_dxn()
    s0 = sigma0_D(n)
    dc = CliffordElem.c_xi_prime(RationalFn.const(_h(Fraction(1, 2))))
    i_rf = RationalFn.const(GQ_I)
    a1 = (u * s0 * u).scale(i_rf) + (v * s0 * v).scale(i_rf) + (u * v * dc).scale(i_rf)
    upv = u + v.scale(i_rf)
    a2 = upv * s0 * upv + u * v * dc - dc.scale(i_rf)
    quarter = CoeffPoly.const(GaussianRational.of(Fraction(-1, 4)))
    return a1.scale(RationalFn.pole("upper", 1, quarter)) \
        + a2.scale(RationalFn.pole("upper", 2, quarter))


def b_two() -> CliffordElem:
    """The B2 half of pi^+ sigma_{-2}(D^{-1}), per the printed (3.23) bracket."""
    u = CliffordElem.c_xi_prime()
    v = CliffordElem.c_dxn()
    i_rf = RationalFn.const(GQ_I)
    g1 = RationalFn.pole("upper", 1, CoeffPoly.const(GaussianRational.of(0, Fraction(-1, 4))))
    g2 = RationalFn.pole("upper", 2, CoeffPoly.const(Fraction(1, 8)))
    # (3 xi - 7i)/(8 (xi-i)^3)
    g3 = RationalFn.from_fraction(
        XiPoly({1: CoeffPoly.const(Fraction(3, 8)), 0: CoeffPoly.const(GaussianRational.of(0, Fraction(-7, 8)))}),
        3, 0)
    return (v.scale(g1) + (v - u.scale(i_rf)).scale(g2)
            + (u.scale(i_rf) - v).scale(g3)).scale(RationalFn.const(_h(Fraction(1, 2))))


def pi_plus_sigma_minus2_Dinv(n: int) -> CliffordElem:
    """pi^+ sigma_{-2}(D^{-1}) = B1 - B2, the printed (3.20)-(3.26) input.

    Built literally from the printed bracket structure with sigma_0(D) and
    d_xn c(xi') substituted; independently reproduced by projecting the
    m = 1 composition assembly (see tests).
    """
    return b_one(n) - b_two()


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    eq_tag: str
    kind: str                    # "jet" | "value" | "pi+jet" | "pi+value"
    value: CliffordElem
    dxn: CliffordElem | None
    order: int


@dataclass(frozen=True)
class Catalog:
    """All symbol factors needed by one covered configuration."""

    n: int
    p1: int
    p2: int
    m: int
    theorem: str
    conv: TraceConvention
    left: dict  # r -> PlusSymbol
    right: dict  # ell -> SymbolJet

    def entries(self) -> list[CatalogEntry]:
        out = []
        for ell in sorted(self.right, reverse=True):
            jet = self.right[ell]
            out.append(CatalogEntry(jet.label, jet.eq_tag,
                                    "jet" if jet.dxn is not None else "value",
                                    jet.value, jet.dxn, jet.order))
        for r in sorted(self.left, reverse=True):
            ps = self.left[r]
            out.append(CatalogEntry(ps.label, ps.eq_tag,
                                    "pi+jet" if ps.dxn is not None else "pi+value",
                                    ps.value, ps.dxn, ps.order))
        return out

    def find(self, label: str) -> CatalogEntry | None:
        for e in self.entries():
            if e.label == label:
                return e
        return None


@functools.lru_cache(maxsize=64)
def build_catalog(n: int, p1: int, p2: int) -> Catalog:
    m, theorem = resolve_config(n, p1, p2)
    left: dict[int, PlusSymbol] = {}
    right: dict[int, SymbolJet] = {}

    if p1 == 1:
        left[-1] = pi_plus_jet(sigma_leading_inverse_power(1))
        left[-2] = PlusSymbol(pi_plus_sigma_minus2_Dinv(n), None, -2,
                              "pi+sigma_-2_D-1", "(3.20)-(3.26)")
    elif p1 == 2:
        left[-2] = pi_plus_jet(sigma_minus2_D2(2))
        left[-3] = PlusSymbol(sigma_minus3_D2(n).pi_plus(), None, -3,
                              "pi+sigma_-3_D-2", "(3.36)")

    if p2 == 2 * m - 1:
        right[1 - 2 * m] = sigma_leading_inverse_power(m)
        right[-2 * m] = SymbolJet(sigma_minus2m_D1minus2m(m, n), None, -2 * m,
                                  f"sigma_{-2*m}_D{1-2*m}", "(3.5)/(3.37)")
    elif p2 == 2 * m - 2:
        right[2 - 2 * m] = sigma_minus2_D2(m)
        right[1 - 2 * m] = SymbolJet(sigma_subleading_even(m - 1, n), None, 1 - 2 * m,
                                     f"sigma_{1-2*m}_D{2-2*m}", "(3.4)")

    return Catalog(n, p1, p2, m, theorem, TraceConvention(n), left, right)
