"""Reduced Clifford algebra at a boundary point with |xi'| = 1.

Every expression in the covered boundary-term computations involves only the
two Clifford actions c(xi') and c(dxn), so the full algebra collapses to the
4-dimensional span of {1, c(xi'), c(dxn), c(xi')c(dxn)} with

    c(xi')^2 = c(dxn)^2 = -1,      c(dxn)c(xi') = -c(xi')c(dxn).

Odd words are traceless, which also implements the sphere-parity rule (odd
products of xi'-components integrate to zero over |xi'| = 1); the sphere
integral then contributes exactly a Vol(S^(n-2)) factor.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import CP_H, CoeffPoly, GaussianRational, RationalFn

# basis word indices
ONE, U, V, W = 0, 1, 2, 3
WORD_NAMES = ("1", "c(xi')", "c(dxn)", "c(xi')c(dxn)")

# (x, y) -> (word, sign) for the ordered basis {1, u, v, w=uv}
_MUL = {
    (ONE, ONE): (ONE, 1), (ONE, U): (U, 1), (ONE, V): (V, 1), (ONE, W): (W, 1),
    (U, ONE): (U, 1), (U, U): (ONE, -1), (U, V): (W, 1), (U, W): (V, -1),
    (V, ONE): (V, 1), (V, U): (W, -1), (V, V): (ONE, -1), (V, W): (U, 1),
    (W, ONE): (W, 1), (W, U): (V, 1), (W, V): (U, -1), (W, W): (ONE, -1),
}


@dataclass(frozen=True)
class TraceConvention:
    """Spinor trace normalization for ambient dimension n."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("ambient dimension must be >= 2")

    @property
    def dim(self) -> int:
        """Spinor trace dimension 2^floor(n/2)."""
        return 2 ** (self.n // 2)


class CliffordElem:
    """Element of the reduced algebra with RationalFn coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = (RationalFn.zero(),) * 4
        coeffs = tuple(c if isinstance(c, RationalFn) else RationalFn.const(c)
                       for c in coeffs)
        if len(coeffs) != 4:
            raise ValueError("need 4 basis coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    # ---- constructors ----

    @staticmethod
    def zero() -> "CliffordElem":
        return CliffordElem()

    @staticmethod
    def word(idx: int, coeff=1) -> "CliffordElem":
        cs = [RationalFn.zero()] * 4
        cs[idx] = coeff if isinstance(coeff, RationalFn) else RationalFn.const(coeff)
        return CliffordElem(cs)

    @staticmethod
    def scalar(coeff) -> "CliffordElem":
        return CliffordElem.word(ONE, coeff)

    @staticmethod
    def c_xi_prime(coeff=1) -> "CliffordElem":
        return CliffordElem.word(U, coeff)

    @staticmethod
    def c_dxn(coeff=1) -> "CliffordElem":
        return CliffordElem.word(V, coeff)

    @staticmethod
    def c_xi(xi_coeff=1) -> "CliffordElem":
        """c(xi) = c(xi') + xi_n * c(dxn), optionally scaled."""
        base = CliffordElem((RationalFn.zero(), RationalFn.one(), RationalFn.xi(),
                             RationalFn.zero()))
        return base.scale(xi_coeff) if xi_coeff != 1 else base

    # ---- algebra ----

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, CliffordElem) and self.coeffs == other.coeffs

    def __add__(self, other):
        return CliffordElem(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return CliffordElem(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CliffordElem(tuple(-a for a in self.coeffs))

    def scale(self, s) -> "CliffordElem":
        if isinstance(s, RationalFn):
            return CliffordElem(tuple(c * s for c in self.coeffs))
        return CliffordElem(tuple(c.scale(s) for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, CliffordElem):
            return self.scale(other)
        out = [RationalFn.zero()] * 4
        for x in range(4):
            cx = self.coeffs[x]
            if not cx:
                continue
            for y in range(4):
                cy = other.coeffs[y]
                if not cy:
                    continue
                z, sgn = _MUL[(x, y)]
                term = cx * cy
                out[z] = out[z] + (term if sgn > 0 else -term)
        return CliffordElem(out)

    def __rmul__(self, other):
        # scalar coefficients commute with basis words
        return self.scale(other)

    # ---- coefficient-wise calculus ----

    def differentiate(self) -> "CliffordElem":
        return CliffordElem(tuple(c.differentiate() for c in self.coeffs))

    def pi_plus(self) -> "CliffordElem":
        return CliffordElem(tuple(c.pi_plus() for c in self.coeffs))

    def trace(self, conv: TraceConvention) -> RationalFn:
        """Spinor trace: dim times the identity-word coefficient."""
        return self.coeffs[ONE].scale(conv.dim)

    def h_degrees(self) -> set[int]:
        out: set[int] = set()
        for c in self.coeffs:
            out |= c.h_degrees()
        return out

    def describe(self) -> str:
        parts = []
        for idx, c in enumerate(self.coeffs):
            if c:
                parts.append(f"[{WORD_NAMES[idx]}] {c}")
        return "\n".join(parts) if parts else "0"

    def __repr__(self):
        return f"CliffordElem<{'; '.join(f'{WORD_NAMES[i]}: {c}' for i, c in enumerate(self.coeffs) if c)}>"


def mul(a: CliffordElem, b: CliffordElem) -> CliffordElem:
    return a * b


def trace(a: CliffordElem, conv: TraceConvention) -> RationalFn:
    return a.trace(conv)


def d_xn_c_xi_prime() -> CliffordElem:
    """Normal derivative of c(xi') at the boundary point: (h/2) c(xi')."""
    return CliffordElem.c_xi_prime(CoeffPoly({1: GaussianRational.of(Fraction(1, 2))}))


def sigma0_codxn_coefficient(n: int) -> CoeffPoly:
    """c0 = (1-n)/4 * h, the c(dxn)-coefficient of the order-zero Dirac symbol."""
    return CoeffPoly({1: GaussianRational.of(Fraction(1 - n, 4))})


@dataclass(frozen=True)
class TraceCheck:
    table: str
    name: str
    expected: RationalFn
    got: RationalFn

    @property
    def passed(self) -> bool:
        return self.expected == self.got


def verify_trace_table(conv: TraceConvention) -> list[TraceCheck]:
    """Evaluate every printed trace identity through mul/trace.

    Substitutions: sigma_0(D) = c0 c(dxn) with c0 = (1-n)/4 h, and
    d_xn c(xi') = (h/2) c(xi').  Table entries printed as powers of 2^m are
    expressed through the run's trace dimension d = 2^floor(n/2).
    """
    d = conv.dim
    u = CliffordElem.c_xi_prime()
    v = CliffordElem.c_dxn()
    dc = d_xn_c_xi_prime()
    c0 = sigma0_codxn_coefficient(conv.n)
    s0 = CliffordElem.c_dxn(c0)
    half_h = CoeffPoly({1: GaussianRational.of(Fraction(1, 2))})

    def const(cp) -> RationalFn:
        return RationalFn.const(cp)

    checks = [
        TraceCheck("(3.12)", "tr[c(xi')c(dxn)] = 0", RationalFn.zero(), (u * v).trace(conv)),
        TraceCheck("(3.12)", "tr[c(dxn)^2] = -d", const(-d), (v * v).trace(conv)),
        TraceCheck("(3.12)", "tr[c(xi')^2] = -d", const(-d), (u * u).trace(conv)),
        TraceCheck("(3.12)", "tr[d_xn(c(xi')) c(dxn)] = 0", RationalFn.zero(), (dc * v).trace(conv)),
        TraceCheck("(3.12)", "tr[d_xn(c(xi')) c(xi')] = -(d/2) h", const(half_h * GaussianRational.of(-d)),
                   (dc * u).trace(conv)),
        TraceCheck("(3.29)", "tr[c(xi') s0 c(xi') c(dxn)] = -c0 d", const(c0 * GaussianRational.of(-d)),
                   (u * s0 * u * v).trace(conv)),
        TraceCheck("(3.29)", "tr[c(dxn) s0 c(dxn)^2] = c0 d", const(c0 * GaussianRational.of(d)),
                   (v * s0 * v * v).trace(conv)),
        TraceCheck("(3.29)", "tr[c(xi')c(dxn) d_xn(c(xi')) c(dxn)] = -(d/2) h",
                   const(half_h * GaussianRational.of(-d)), (u * v * dc * v).trace(conv)),
        TraceCheck("(3.29)", "tr[c(dxn) s0 c(xi')^2] = c0 d", const(c0 * GaussianRational.of(d)),
                   (v * s0 * u * u).trace(conv)),
        TraceCheck("(3.51)", "tr[c(xi')] = 0", RationalFn.zero(), u.trace(conv)),
        TraceCheck("(3.51)", "tr[c(dxn)] = 0", RationalFn.zero(), v.trace(conv)),
        TraceCheck("(3.51)", "tr[d_xn(c(xi'))] = 0", RationalFn.zero(), dc.trace(conv)),
        TraceCheck("(3.54)", "tr[c(xi') s0 c(xi')] = 0", RationalFn.zero(), (u * s0 * u).trace(conv)),
        TraceCheck("(3.54)", "tr[c(dxn) s0 c(dxn)] = 0", RationalFn.zero(), (v * s0 * v).trace(conv)),
        TraceCheck("(3.54)", "tr[c(xi')c(dxn) d_xn(c(xi'))] = 0", RationalFn.zero(),
                   (u * v * dc).trace(conv)),
    ]
    return checks
