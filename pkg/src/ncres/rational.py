"""Exact arithmetic for rational functions of the conormal variable xi.

Everything is built over the Gaussian rationals Q(i).  Coefficients carry an
extra formal variable h (the boundary metric datum h'(0)), so the scalar ring
is Q(i)[h].  Rational functions are kept in a canonical pole form

    f(xi) = sum_k  up_k / (xi - i)^k  +  sum_k  lo_k / (xi + i)^k  +  poly(xi),

which is the natural normal form here: every symbol in the boundary-term
computation has finite poles only at +-i once restricted to |xi'| = 1.  In
this form the half-plane projection pi^+ is a field selection and residues
are coefficient read-offs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class PoleProximityError(ValueError):
    """Numeric evaluation requested too close to a pole."""


class NonIntegrableError(ValueError):
    """Real-line integral of a non-decaying rational function."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex rational a + b*i."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(_frac(re), _frac(im))

    @staticmethod
    def i() -> "GaussianRational":
        return GaussianRational(Fraction(0), Fraction(1))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = _coerce_gq(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce_gq(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_gq(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_gq(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_gq(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce_gq(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational.of(1) / self ** (-k)
        out = GaussianRational.of(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i" if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}*i"
        return f"({self.re} {sign} {istr})"


def _coerce_gq(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(_frac(x), Fraction(0))
    return NotImplemented


GQ_ZERO = GaussianRational()
GQ_ONE = GaussianRational.of(1)
GQ_I = GaussianRational.i()


class CoeffPoly:
    """Polynomial in one formal variable (h by default) over Q(i).

    Stored as a degree -> GaussianRational map with no zero entries.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, GaussianRational] | None = None):
        c = {}
        if coeffs:
            for d, g in coeffs.items():
                g = _coerce_gq(g)
                if g is NotImplemented:
                    raise TypeError("bad coefficient")
                if g:
                    c[int(d)] = g
        object.__setattr__(self, "c", c)

    @staticmethod
    def const(g) -> "CoeffPoly":
        g = _coerce_gq(g)
        return CoeffPoly({0: g})

    @staticmethod
    def h(power: int = 1) -> "CoeffPoly":
        return CoeffPoly({power: GQ_ONE})

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = CoeffPoly.const(other)
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        other = _coerce_cp(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.c)
        for d, g in other.c.items():
            s = out.get(d, GQ_ZERO) + g
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return CoeffPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CoeffPoly({d: -g for d, g in self.c.items()})

    def __sub__(self, other):
        other = _coerce_cp(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_cp(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_cp(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, GaussianRational] = {}
        for d1, g1 in self.c.items():
            for d2, g2 in other.c.items():
                d = d1 + d2
                s = out.get(d, GQ_ZERO) + g1 * g2
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return CoeffPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = _coerce_gq(other)
        if g is NotImplemented:
            return NotImplemented
        return CoeffPoly({d: v / g for d, v in self.c.items()})

    def degree(self) -> int:
        """Degree in the formal variable; -1 for the zero polynomial."""
        return max(self.c) if self.c else -1

    def degrees(self) -> set[int]:
        return set(self.c)

    def homogeneous_degree(self) -> int | None:
        """The single degree if homogeneous (zero counts as any), else None."""
        if not self.c:
            return 0
        ds = set(self.c)
        return ds.pop() if len(ds) == 1 else None

    def coefficient(self, degree: int) -> GaussianRational:
        return self.c.get(degree, GQ_ZERO)

    def is_real(self) -> bool:
        return all(g.im == 0 for g in self.c.values())

    def substitute(self, value: "CoeffPoly") -> "CoeffPoly":
        """Replace the formal variable by another CoeffPoly."""
        out = CoeffPoly()
        for d, g in sorted(self.c.items()):
            term = CoeffPoly.const(g)
            for _ in range(d):
                term = term * value
            out = out + term
        return out

    def eval(self, value: complex) -> complex:
        return sum((g.to_complex() * value**d for d, g in self.c.items()), 0j)

    def __str__(self) -> str:
        return self.to_str("h")

    def to_str(self, var: str = "h") -> str:
        if not self.c:
            return "0"
        parts = []
        for d in sorted(self.c):
            g = self.c[d]
            gs = str(g)
            if "/" in gs or "+" in gs[1:] or "-" in gs[1:] or gs.startswith("-"):
                gs = gs if gs.startswith("(") else f"({gs})"
            if d == 0:
                parts.append(gs)
            else:
                vp = var if d == 1 else f"{var}^{d}"
                parts.append(vp if gs == "1" else f"{gs}*{vp}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CoeffPoly({self})"


def _coerce_cp(x):
    if isinstance(x, CoeffPoly):
        return x
    g = _coerce_gq(x)
    if g is NotImplemented:
        return NotImplemented
    return CoeffPoly({0: g})


CP_ZERO = CoeffPoly()
CP_ONE = CoeffPoly.const(1)
CP_H = CoeffPoly.h()


class XiPoly:
    """Polynomial in xi with CoeffPoly coefficients (internal helper)."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, CoeffPoly] | None = None):
        c = {}
        if coeffs:
            for d, p in coeffs.items():
                p = _coerce_cp(p)
                if p:
                    c[int(d)] = p
        object.__setattr__(self, "c", c)

    @staticmethod
    def const(p) -> "XiPoly":
        return XiPoly({0: _coerce_cp(p)})

    @staticmethod
    def xi(power: int = 1) -> "XiPoly":
        return XiPoly({power: CP_ONE})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, XiPoly) and self.c == other.c

    def __add__(self, other):
        out = dict(self.c)
        for d, p in other.c.items():
            s = out.get(d, CP_ZERO) + p
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return XiPoly(out)

    def __neg__(self):
        return XiPoly({d: -p for d, p in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict[int, CoeffPoly] = {}
        for d1, p1 in self.c.items():
            for d2, p2 in other.c.items():
                d = d1 + d2
                s = out.get(d, CP_ZERO) + p1 * p2
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return XiPoly(out)

    def scale(self, s) -> "XiPoly":
        s = _coerce_cp(s)
        return XiPoly({d: p * s for d, p in self.c.items()})

    def degree(self) -> int:
        return max(self.c) if self.c else -1

    def shift(self, center: GaussianRational) -> list[CoeffPoly]:
        """Coefficients of w^t in self(center + w), t = 0..degree."""
        deg = self.degree()
        out = [CP_ZERO] * (deg + 1)
        for d, p in self.c.items():
            for t in range(d + 1):
                binom = GaussianRational.of(math.comb(d, t)) * center ** (d - t)
                if binom:
                    out[t] = out[t] + p * binom
        return out

    def eval(self, z: complex, h_value: complex) -> complex:
        return sum((p.eval(h_value) * z**d for d, p in self.c.items()), 0j)

    def __repr__(self):
        terms = [f"({p})*xi^{d}" for d, p in sorted(self.c.items())]
        return " + ".join(terms) if terms else "0"


def _inv_pole_series(center: GaussianRational, order: int, nterms: int) -> list[GaussianRational]:
    """Taylor coefficients of (w + center)^(-order) about w = 0, t = 0..nterms-1."""
    if order == 0:
        return [GQ_ONE] + [GQ_ZERO] * (nterms - 1)
    out = []
    for t in range(nterms):
        sign = -1 if t % 2 else 1
        coef = GaussianRational.of(sign * math.comb(order + t - 1, t))
        out.append(coef * center ** (-(order + t)))
    return out


_CENTER_UP = GaussianRational.of(0, 1)    # pole at +i
_CENTER_LO = GaussianRational.of(0, -1)   # pole at -i
_TWO_I = GaussianRational.of(0, 2)


class RationalFn:
    """Rational function of xi in canonical pole form (poles only at +-i)."""

    __slots__ = ("upper", "lower", "poly")

    def __init__(self, upper=None, lower=None, poly=None):
        object.__setattr__(self, "upper", _clean(upper))
        object.__setattr__(self, "lower", _clean(lower))
        object.__setattr__(self, "poly", _clean(poly))

    # ---- constructors ----

    @staticmethod
    def zero() -> "RationalFn":
        return RationalFn()

    @staticmethod
    def const(p) -> "RationalFn":
        return RationalFn(poly={0: _coerce_cp(p)})

    @staticmethod
    def one() -> "RationalFn":
        return RationalFn.const(1)

    @staticmethod
    def xi(power: int = 1) -> "RationalFn":
        return RationalFn(poly={power: CP_ONE})

    @staticmethod
    def pole(which: str, k: int, coeff=1) -> "RationalFn":
        """coeff / (xi -+ i)^k with which in {'upper','lower'}."""
        if k < 1:
            raise ValueError("pole order must be >= 1")
        if which == "upper":
            return RationalFn(upper={k: _coerce_cp(coeff)})
        if which == "lower":
            return RationalFn(lower={k: _coerce_cp(coeff)})
        raise ValueError("which must be 'upper' or 'lower'")

    @staticmethod
    def from_fraction(numer: XiPoly, a: int, b: int) -> "RationalFn":
        """Canonical decomposition of numer / ((xi-i)^a (xi+i)^b)."""
        if a < 0 or b < 0:
            raise ValueError("pole orders must be >= 0")
        if not numer:
            return RationalFn()
        upper: dict[int, CoeffPoly] = {}
        lower: dict[int, CoeffPoly] = {}
        if a > 0:
            shifted = numer.shift(_CENTER_UP)           # xi = i + w
            inv = _inv_pole_series(_TWO_I, b, a)        # (w + 2i)^(-b)
            for k in range(1, a + 1):                   # coefficient of (xi-i)^(-k)
                t = a - k
                acc = CP_ZERO
                for s in range(min(t, len(shifted) - 1) + 1):
                    acc = acc + shifted[s] * inv[t - s]
                if acc:
                    upper[k] = acc
        if b > 0:
            shifted = numer.shift(_CENTER_LO)           # xi = -i + w
            inv = _inv_pole_series(-_TWO_I, a, b)       # (w - 2i)^(-a)
            for k in range(1, b + 1):
                t = b - k
                acc = CP_ZERO
                for s in range(min(t, len(shifted) - 1) + 1):
                    acc = acc + shifted[s] * inv[t - s]
                if acc:
                    lower[k] = acc
        poly: dict[int, CoeffPoly] = {}
        if numer.degree() >= a + b:
            den = _pole_product(a, b)
            q = _poly_div(numer, den)
            poly = dict(q.c)
        return RationalFn(upper, lower, poly)

    # ---- ring operations ----

    def __bool__(self):
        return bool(self.upper) or bool(self.lower) or bool(self.poly)

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        return (self.upper == other.upper and self.lower == other.lower
                and self.poly == other.poly)

    def __hash__(self):
        def f(d):
            return frozenset(d.items())
        return hash((f(self.upper), f(self.lower), f(self.poly)))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, CoeffPoly)):
            other = RationalFn.const(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(
            _merge(self.upper, other.upper),
            _merge(self.lower, other.lower),
            _merge(self.poly, other.poly),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(
            {k: -p for k, p in self.upper.items()},
            {k: -p for k, p in self.lower.items()},
            {k: -p for k, p in self.poly.items()},
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, CoeffPoly)):
            other = RationalFn.const(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "RationalFn":
        s = _coerce_cp(s)
        if not s:
            return RationalFn()
        return RationalFn(
            {k: p * s for k, p in self.upper.items()},
            {k: p * s for k, p in self.lower.items()},
            {k: p * s for k, p in self.poly.items()},
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, CoeffPoly)):
            return self.scale(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        if not self or not other:
            return RationalFn()
        n1, a1, b1 = self.to_fraction()
        n2, a2, b2 = other.to_fraction()
        return RationalFn.from_fraction(n1 * n2, a1 + a2, b1 + b2)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported; use from_fraction")
        out = RationalFn.one()
        for _ in range(k):
            out = out * self
        return out

    # ---- canonical form round trip ----

    def to_fraction(self) -> tuple[XiPoly, int, int]:
        """(numer, a, b) with self = numer / ((xi-i)^a (xi+i)^b), exactly."""
        a = max(self.upper) if self.upper else 0
        b = max(self.lower) if self.lower else 0
        numer = XiPoly()
        up_full = _pole_factor(_CENTER_UP, 1)
        lo_full = _pole_factor(_CENTER_LO, 1)
        if self.poly:
            numer = numer + XiPoly(self.poly) * _pole_product(a, b)
        for k, p in self.upper.items():
            numer = numer + XiPoly.const(p) * _pole_power(up_full, a - k) * _pole_power(lo_full, b)
        for k, p in self.lower.items():
            numer = numer + XiPoly.const(p) * _pole_power(up_full, a) * _pole_power(lo_full, b - k)
        return numer, a, b

    # ---- calculus ----

    def differentiate(self) -> "RationalFn":
        up = {}
        for k, p in self.upper.items():
            up[k + 1] = up.get(k + 1, CP_ZERO) + p * GaussianRational.of(-k)
        lo = {}
        for k, p in self.lower.items():
            lo[k + 1] = lo.get(k + 1, CP_ZERO) + p * GaussianRational.of(-k)
        po = {}
        for d, p in self.poly.items():
            if d > 0:
                po[d - 1] = po.get(d - 1, CP_ZERO) + p * GaussianRational.of(d)
        return RationalFn(up, lo, po)

    def pi_plus(self) -> "RationalFn":
        """Projection onto the part with poles at +i only."""
        return RationalFn(upper=dict(self.upper))

    def pi_minus(self) -> "RationalFn":
        """Complement: lower-pole part plus polynomial part."""
        return RationalFn(lower=dict(self.lower), poly=dict(self.poly))

    def residue_upper(self) -> CoeffPoly:
        """Residue at xi = +i (a coefficient read-off in canonical form)."""
        return self.upper.get(1, CP_ZERO)

    def residue_lower(self) -> CoeffPoly:
        return self.lower.get(1, CP_ZERO)

    def decay_order(self) -> int:
        """D such that f = O(|xi|^-D) at infinity; large when f = 0."""
        if not self:
            return 10**9
        numer, a, b = self.to_fraction()
        return a + b - numer.degree()

    def pi_prime(self) -> CoeffPoly:
        """Contour functional (1/2pi) * closed integral over the upper poles.

        Equals i * Res_{+i}; matches (1/2pi) * real-line integral whenever the
        function is integrable.
        """
        if self.poly:
            raise NonIntegrableError(
                "pi_prime undefined: polynomial part " + _poly_str(self.poly))
        return self.residue_upper() * GQ_I

    def integrate_line(self) -> "PiMultiple":
        """Exact real-line integral: 2*pi*i times the residue at +i."""
        if self.poly:
            raise NonIntegrableError(
                "non-integrable: polynomial part " + _poly_str(self.poly))
        if self and self.decay_order() < 2:
            tail = self.upper.get(1, CP_ZERO) + self.lower.get(1, CP_ZERO)
            raise NonIntegrableError(
                f"non-integrable: 1/xi tail with coefficient ({tail})")
        return PiMultiple(self.residue_upper() * GaussianRational.of(0, 2))

    def eval_at(self, z: complex, h_value: float = 1.0) -> complex:
        z = complex(z)
        if abs(z - 1j) < 1e-12 or abs(z + 1j) < 1e-12:
            raise PoleProximityError(f"evaluation within 1e-12 of a pole: z={z}")
        out = 0j
        for k, p in self.upper.items():
            out += p.eval(h_value) / (z - 1j) ** k
        for k, p in self.lower.items():
            out += p.eval(h_value) / (z + 1j) ** k
        for d, p in self.poly.items():
            out += p.eval(h_value) * z**d
        return out

    def subs_h(self, value: CoeffPoly) -> "RationalFn":
        return RationalFn(
            {k: p.substitute(value) for k, p in self.upper.items()},
            {k: p.substitute(value) for k, p in self.lower.items()},
            {k: p.substitute(value) for k, p in self.poly.items()},
        )

    def h_degrees(self) -> set[int]:
        out: set[int] = set()
        for d in (self.upper, self.lower, self.poly):
            for p in d.values():
                out |= p.degrees()
        return out

    def __str__(self) -> str:
        from .exprio import print_rationalfn
        return print_rationalfn(self)

    def __repr__(self):
        return f"RationalFn({self})"


class PiMultiple:
    """Exact scalar q * pi, q in Q(i)[h]."""

    __slots__ = ("coeff",)

    def __init__(self, coeff: CoeffPoly):
        self.coeff = _coerce_cp(coeff)

    def __eq__(self, other):
        return isinstance(other, PiMultiple) and self.coeff == other.coeff

    def __add__(self, other):
        return PiMultiple(self.coeff + other.coeff)

    def scale(self, s) -> "PiMultiple":
        return PiMultiple(self.coeff * _coerce_cp(s))

    def is_zero(self) -> bool:
        return not self.coeff

    def eval(self, h_value: float = 1.0) -> complex:
        return self.coeff.eval(h_value) * math.pi

    def __str__(self):
        return f"({self.coeff})*pi"

    def __repr__(self):
        return f"PiMultiple({self})"


# ---- module-internal helpers ----

def _clean(d) -> dict:
    out = {}
    if d:
        for k, p in d.items():
            p = _coerce_cp(p)
            if p:
                out[int(k)] = p
    return out


def _merge(d1: dict, d2: dict) -> dict:
    out = dict(d1)
    for k, p in d2.items():
        s = out.get(k, CP_ZERO) + p
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pole_factor(center: GaussianRational, k: int) -> XiPoly:
    # (xi - center)^k as XiPoly for k = 1
    return XiPoly({1: CP_ONE, 0: CoeffPoly.const(-center)})


def _pole_power(factor: XiPoly, k: int) -> XiPoly:
    out = XiPoly.const(CP_ONE)
    for _ in range(k):
        out = out * factor
    return out


def _pole_product(a: int, b: int) -> XiPoly:
    return _pole_power(_pole_factor(_CENTER_UP, 1), a) * _pole_power(_pole_factor(_CENTER_LO, 1), b)


def _poly_div(numer: XiPoly, den: XiPoly) -> XiPoly:
    """Quotient of exact division by a monic denominator (numer = q*den + r)."""
    q: dict[int, CoeffPoly] = {}
    rem = numer
    dd = den.degree()
    while rem.degree() >= dd:
        rd = rem.degree()
        factor = rem.c[rd]
        q[rd - dd] = q.get(rd - dd, CP_ZERO) + factor
        rem = rem - XiPoly({rd - dd: factor}) * den
    return XiPoly(q)


def _poly_str(poly: dict) -> str:
    terms = []
    for d in sorted(poly):
        terms.append(f"({poly[d]})*xi^{d}" if d else f"({poly[d]})")
    return " + ".join(terms)


def deriv_at_plus_i(numer: XiPoly, lower_pole_order: int, p: int) -> CoeffPoly:
    """Exact p-th derivative of numer(xi)/(xi+i)^q at xi = +i.

    Evaluated as p! times the w^p Taylor coefficient of
    numer(i+w) * (w+2i)^(-q); the function is analytic at +i.
    """
    shifted = numer.shift(_CENTER_UP)
    inv = _inv_pole_series(_TWO_I, lower_pole_order, p + 1)
    acc = CP_ZERO
    for s in range(min(p, len(shifted) - 1) + 1):
        acc = acc + shifted[s] * inv[p - s]
    return acc * GaussianRational.of(math.factorial(p))
