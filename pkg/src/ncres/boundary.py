"""Boundary-term case enumeration, exact case values, and theorem assembly.

The boundary contribution is a sum over index tuples (r, ell, k, j, alpha)
subject to r + ell - k - j - alpha - 1 = -n with r <= -p1, ell <= -p2.  Each
case integrates the spinor trace of

    d_xn^j d_xi'^alpha d_xin^k (pi+ sigma_r)  x  d_x'^alpha d_xin^(j+1) d_xn^k sigma_ell

against the prefactor (-i)^(alpha+j+k+1) / (alpha! (j+k+1)!).  All alpha >= 1
cases vanish because the tangential derivatives of every catalog symbol are
zero at the chosen boundary point.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .clifford import CliffordElem
from .rational import (
    CP_ZERO,
    CoeffPoly,
    GQ_I,
    GaussianRational,
    RationalFn,
    XiPoly,
    deriv_at_plus_i,
)
from .symbols import Catalog, build_catalog, resolve_config

THEOREM_CONFIGS = {
    "1.1": lambda m: (2 * m + 2, 1, 2 * m - 1),
    "3.1": lambda m: (2 * m + 1, 1, 2 * m - 1),
    "3.2": lambda m: (2 * m + 1, 1, 2 * m - 2),
    "3.3": lambda m: (2 * m, 1, 2 * m - 2),
    "3.4": lambda m: (2 * m + 3, 2, 2 * m - 1),
}

# theorems whose statement carries the interior scalar-curvature term
THEOREMS_WITH_INTERIOR = ("1.1", "3.2", "3.4")


def config_for(theorem: str, m: int) -> tuple[int, int, int]:
    if theorem not in THEOREM_CONFIGS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    if m < 1:
        raise ValueError("m must be >= 1")
    return THEOREM_CONFIGS[theorem](m)


@dataclass(frozen=True)
class CaseIndex:
    r: int
    ell: int
    k: int
    j: int
    alpha: int

    def constraint_holds(self, n: int) -> bool:
        return self.r + self.ell - self.k - self.j - self.alpha - 1 == -n

    def as_tuple(self):
        return (self.r, self.ell, self.k, self.j, self.alpha)


@dataclass(frozen=True)
class ExactValue:
    """Exact scalar q * pi^a; q in Q(i)[h].  Sphere-volume units kept formal."""

    coeff: CoeffPoly = CP_ZERO
    pi_pow: int = 1

    @staticmethod
    def zero(pi_pow: int = 1) -> "ExactValue":
        return ExactValue(CP_ZERO, pi_pow)

    def __add__(self, other: "ExactValue") -> "ExactValue":
        if bool(self.coeff) and bool(other.coeff) and self.pi_pow != other.pi_pow:
            raise ValueError("cannot add values with different pi powers")
        pi_pow = self.pi_pow if self.coeff else other.pi_pow
        return ExactValue(self.coeff + other.coeff, pi_pow)

    def is_zero(self) -> bool:
        return not self.coeff

    def h_degree(self) -> int | None:
        return self.coeff.homogeneous_degree()

    def is_real(self) -> bool:
        return self.coeff.is_real()

    def numeric(self, h_value: float = 1.0) -> complex:
        return self.coeff.eval(h_value) * math.pi**self.pi_pow

    def __str__(self):
        pi = "" if self.pi_pow == 0 else ("*pi" if self.pi_pow == 1 else f"*pi^{self.pi_pow}")
        return f"({self.coeff}){pi}"


@dataclass(frozen=True)
class CaseValue:
    index: CaseIndex
    label: str
    integrand_trace: RationalFn
    value: ExactValue
    byparts_value: ExactValue | None = None

    @property
    def byparts_consistent(self) -> bool | None:
        if self.byparts_value is None:
            return None
        return self.byparts_value == self.value


@dataclass
class PhiReport:
    n: int
    p1: int
    p2: int
    m: int
    theorem: str
    cases: list[CaseValue]
    phi: ExactValue
    L0: ExactValue | None
    K_coefficient: CoeffPoly  # K(x0) = ((1-n)/2) h

    def homogeneity_ok(self) -> bool:
        """Nonzero even-n case values are h-degree 1; odd-n leading case is degree 0."""
        expected = 0 if self.theorem == "3.1" else 1
        for c in self.cases:
            if not c.value.is_zero() and c.value.h_degree() != expected:
                return False
        return True

    def reality_ok(self) -> bool:
        return all(c.value.is_real() for c in self.cases) and self.phi.is_real()


def case_label(idx: CaseIndex, p1: int, p2: int) -> str:
    if idx.alpha > 0:
        return "aI"
    if idx.j > 0:
        return "aII"
    if idx.k > 0:
        return "aIII"
    if idx.r == -p1 - 1:
        return "b"
    if idx.ell == -p2 - 1:
        return "c"
    return "leading"


def enumerate_cases(n: int, p1: int, p2: int) -> list[CaseIndex]:
    """All representable index tuples, in derivation order (aI aII aIII b c)."""
    resolve_config(n, p1, p2)
    out: list[CaseIndex] = []
    for ell in (-p2, -p2 - 1):
        for r in (-p1, -p1 - 1):
            s = n - 1 + r + ell  # k + j + alpha
            if s < 0:
                continue
            if s > 1:
                # within catalog depth every covered family has s <= 1
                raise AssertionError(f"case depth {s} exceeds first-order jets")
            if s == 1:
                if r == -p1 and ell == -p2:
                    out.extend([CaseIndex(r, ell, 0, 0, 1),
                                CaseIndex(r, ell, 0, 1, 0),
                                CaseIndex(r, ell, 1, 0, 0)])
                else:
                    # never reached for covered configurations
                    raise AssertionError("subleading case with derivatives")
            else:
                out.append(CaseIndex(r, ell, 0, 0, 0))
    return out


def case_prefactor(idx: CaseIndex) -> GaussianRational:
    """(-i)^(alpha+j+k+1) / (alpha! (j+k+1)!)."""
    power = (-GQ_I) ** (idx.alpha + idx.j + idx.k + 1)
    denom = math.factorial(idx.alpha) * math.factorial(idx.j + idx.k + 1)
    return power / GaussianRational.of(denom)


def case_factors(idx: CaseIndex, cat: Catalog) -> tuple[GaussianRational, CliffordElem, CliffordElem]:
    """Prefactor and the two traced factors of a non-vanishing case."""
    if idx.alpha > 0:
        raise ValueError("alpha >= 1 cases vanish; they have no factors")
    if idx.j > 1 or idx.k > 1:
        raise ValueError("jets are first order in x_n")
    left_entry = cat.left[idx.r]
    right_entry = cat.right[idx.ell]
    left = left_entry.require_dxn() if idx.j else left_entry.value
    for _ in range(idx.k):
        left = left.differentiate()
    right = right_entry.require_dxn() if idx.k else right_entry.value
    for _ in range(idx.j + 1):
        right = right.differentiate()
    return case_prefactor(idx), left, right


def _byparts_integrand(idx: CaseIndex, cat: Catalog) -> RationalFn:
    """Equivalent integrand with all xi_n-derivatives moved to the left factor.

    Moving one derivative flips the sign; the boundary terms vanish because
    every traced product decays at infinity.
    """
    left_entry = cat.left[idx.r]
    right_entry = cat.right[idx.ell]
    left = left_entry.require_dxn() if idx.j else left_entry.value
    right = right_entry.require_dxn() if idx.k else right_entry.value
    moves = idx.j + 1  # derivatives moved off the right factor
    for _ in range(idx.k + moves):
        left = left.differentiate()
    sign = GaussianRational.of((-1) ** moves)
    return (left * right).trace(cat.conv).scale(sign)


def compute_case(idx: CaseIndex, cat: Catalog) -> CaseValue:
    label = case_label(idx, cat.p1, cat.p2)
    if idx.alpha > 0:
        # tangential derivative of every catalog symbol vanishes at x0
        return CaseValue(idx, label, RationalFn.zero(), ExactValue.zero())
    pref, left, right = case_factors(idx, cat)
    integrand = (left * right).trace(cat.conv)
    value = ExactValue(integrand.integrate_line().coeff * pref)
    bp = _byparts_integrand(idx, cat)
    bp_value = ExactValue(bp.integrate_line().coeff * pref)
    return CaseValue(idx, label, integrand, value, bp_value)


@functools.lru_cache(maxsize=64)
def compute_phi(n: int, p1: int, p2: int) -> PhiReport:
    """Enumerate and evaluate all cases; reports are shared and read-only."""
    m, theorem = resolve_config(n, p1, p2)
    cat = build_catalog(n, p1, p2)
    cases = [compute_case(idx, cat) for idx in enumerate_cases(n, p1, p2)]
    phi = ExactValue.zero()
    for c in cases:
        phi = phi + c.value
    K_coeff = CoeffPoly({1: GaussianRational.of(Fraction(1 - n, 2))})
    L0 = None
    if theorem == "1.1":
        # Phi = h * Vol(S^(n-2)) * L0 once K(x0) = ((1-n)/2) h is substituted
        degs = phi.coeff.degrees()
        if degs not in (set(), {1}):
            raise AssertionError(f"Theorem 1.1 boundary sum not homogeneous of degree 1: {phi}")
        L0 = ExactValue(CoeffPoly.const(phi.coeff.coefficient(1)), 1)
    return PhiReport(n, p1, p2, m, theorem, cases, phi, L0, K_coeff)


# ---- closed-form bracket sum for the dimension constant ----

@dataclass(frozen=True)
class L0ClosedForm:
    """The four printed brackets of the L0 formula (3.42), evaluated exactly.

    Bracket four is printed with literal 2*pi summands inside a polynomial
    bracket; those slots are kept as a formal variable tau, with tau -> 2m
    the reading consistent with the mechanical computation.  Every bracket is
    the coefficient of pi in the corresponding term.
    """

    m: int
    bracket1: CoeffPoly
    bracket2: CoeffPoly
    bracket3: CoeffPoly
    bracket4_tau: CoeffPoly
    bracket4_two_m: CoeffPoly

    def brackets_two_m(self) -> list[CoeffPoly]:
        return [self.bracket1, self.bracket2, self.bracket3, self.bracket4_two_m]

    def sum_two_m(self) -> CoeffPoly:
        return self.bracket1 + self.bracket2 + self.bracket3 + self.bracket4_two_m

    def bracket4_printed_numeric(self) -> float:
        """Bracket four with the literal 2*pi substituted numerically."""
        return self.bracket4_tau.eval(2 * math.pi).real


def l0_closed_form(m: int) -> L0ClosedForm:
    """Evaluate the four printed brackets of the L0 sum, independent of the
    case pipeline: exact derivatives at xi = +i of explicit rational functions.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 2 * m + 2

    def gq(x) -> CoeffPoly:
        return CoeffPoly.const(GaussianRational.of(Fraction(x)))

    def gqi(x) -> CoeffPoly:
        return CoeffPoly.const(GaussianRational.of(0, Fraction(x)))

    b1 = deriv_at_plus_i(XiPoly.const(gq(1)), m, m + 2) \
        * GaussianRational.of(Fraction(2**m, 12 * math.factorial(m + 2)))

    n2 = XiPoly({2: gqi(-1), 1: gq(-2 * m), 0: gqi(2 * m - 1)})
    b2 = deriv_at_plus_i(n2, m + 1, m + 3) \
        * GaussianRational.of(0, Fraction(2**m, math.factorial(m + 3)))

    n3 = XiPoly({2: gq(Fraction(4 * m * m - 1, 4)),
                 1: gqi(Fraction(-4 * m * m - 6 * m + 2, 4)),
                 0: gq(Fraction(-(n + 1), 4))})
    b3 = deriv_at_plus_i(n3, m + 1, m + 2) \
        * GaussianRational.of(0, Fraction(2 ** (m + 1), math.factorial(m + 2)))

    # tau marks the printed "2 pi" slots; coefficients live in Q(i)[tau]
    tau = CoeffPoly.h()
    n4 = XiPoly({3: gqi(2 * n * m - 2 * m - n + 1),
                 2: gq(-2 * m + 1) + tau,
                 1: gqi(2 * n * m - 2 * m + 4 * m * m - n + 1),
                 0: gq(n - 1) + tau})
    b4_tau = deriv_at_plus_i(n4, m + 2, m + 2) \
        * GaussianRational.of(Fraction(-(2 ** (m - 1)), math.factorial(m + 2)))
    b4_two_m = b4_tau.substitute(CoeffPoly.const(2 * m))

    return L0ClosedForm(m, b1, b2, b3, b4_tau, b4_two_m)


# ---- interior term (documented constant, never derived) ----

@dataclass(frozen=True)
class InteriorConstant:
    """(2-n)(2pi)^(n/2) / (12 Gamma(n/2)) with Gamma evaluated exactly.

    Half-integer Gamma values carry a formal sqrt(pi), which cancels; odd n
    leaves a residual sqrt(2) factor.
    """

    n: int
    rational: Fraction
    pi_power: int
    sqrt2: bool

    def numeric(self) -> float:
        value = float(self.rational) * math.pi**self.pi_power
        return value * math.sqrt(2) if self.sqrt2 else value

    def display(self) -> str:
        s = f"({self.rational})"
        if self.sqrt2:
            s += "*sqrt(2)"
        if self.pi_power:
            s += f"*pi^{self.pi_power}" if self.pi_power != 1 else "*pi"
        return s


def interior_constant(n: int) -> InteriorConstant:
    if n % 2 == 0:
        k = n // 2
        q = Fraction(2 - n) * Fraction(2**k) / Fraction(12 * math.factorial(k - 1))
        return InteriorConstant(n, q, k, False)
    k = (n - 1) // 2
    # Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!); the sqrt(pi) cancels
    q = Fraction(2 - n) * Fraction(8**k * math.factorial(k)) / Fraction(12 * math.factorial(2 * k))
    return InteriorConstant(n, q, k, True)


# ---- theorem assembly ----

@dataclass
class TheoremReport:
    theorem: str
    m: int
    phi_report: PhiReport
    interior: InteriorConstant | None
    closed_form: L0ClosedForm | None

    @property
    def boundary_vanishes(self) -> bool:
        return self.phi_report.phi.is_zero()


def theorem_report(theorem: str, m: int) -> TheoremReport:
    n, p1, p2 = config_for(theorem, m)
    phi_report = compute_phi(n, p1, p2)
    interior = interior_constant(n) if theorem in THEOREMS_WITH_INTERIOR else None
    closed = l0_closed_form(m) if theorem == "1.1" else None
    return TheoremReport(theorem, m, phi_report, interior, closed)
