"""Independent floating-point verification of the exact engine.

Four independent mechanisms, none of which reuses the symbolic route it
checks: explicit gamma-matrix representations (vs the reduced-algebra
trace), adaptive real-line quadrature with an analytic tail bound (vs
residue calculus), Monte Carlo sampling over the unit sphere in xi'
(vs the Vol(S^(n-2)) reduction), and finite differences in x_n under the
metric model h(x_n) = 1 + h*x_n (vs the jet rewrite rules).  A pointwise
contour integral provides the quadrature cross-check of the half-plane
projection.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

from .boundary import CaseIndex, case_factors
from .clifford import CliffordElem
from .symbols import Catalog, SymbolJet, build_catalog


def vol_sphere(n: int) -> float:
    """Surface volume of the unit sphere S^(n-2) in R^(n-1)."""
    return 2.0 * math.pi ** ((n - 1) / 2) / math.gamma((n - 1) / 2)


@dataclass(frozen=True)
class GammaRep:
    n: int
    dim: int
    matrices: tuple  # n complex (dim x dim) arrays with c_j^2 = -1


def gamma_matrices(n: int) -> GammaRep:
    """Anticommuting Clifford matrices with c_j c_k + c_k c_j = -2 delta_jk.

    Standard tensor-product construction of Hermitian Euclidean generators,
    multiplied by i to bake in the c(v)^2 = -|v|^2 sign convention.
    """
    if not 2 <= n <= 12:
        raise ValueError(f"dimension n={n} outside the supported range 2..12")
    k = n // 2
    s1 = np.array([[0, 1], [1, 0]], dtype=complex)
    s2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
    s3 = np.array([[1, 0], [0, -1]], dtype=complex)
    iden = np.eye(2, dtype=complex)
    herm = []
    for j in range(1, k + 1):
        for s in (s1, s2):
            g = np.array([[1]], dtype=complex)
            for factor in [s3] * (j - 1) + [s] + [iden] * (k - j):
                g = np.kron(g, factor)
            herm.append(g)
    if n % 2 == 1:
        g = np.array([[1]], dtype=complex)
        for factor in [s3] * k:
            g = np.kron(g, factor)
        herm.append(g)
    mats = tuple(1j * g for g in herm[:n])
    dim = 2**k
    for a in range(n):
        for b in range(n):
            acom = mats[a] @ mats[b] + mats[b] @ mats[a]
            target = -2.0 * np.eye(dim) if a == b else np.zeros((dim, dim))
            if np.max(np.abs(acom - target)) > 1e-12:
                raise AssertionError("gamma relations violated")
    return GammaRep(n, dim, mats)


def realize(elem: CliffordElem, rep: GammaRep, xi_prime: np.ndarray,
            xi_n: float, h_value: float = 1.0) -> np.ndarray:
    """Matrix realization: c(xi') -> sum_j xi'_j gamma_j, c(dxn) -> gamma_n."""
    xi_prime = np.asarray(xi_prime, dtype=float)
    if abs(np.linalg.norm(xi_prime) - 1.0) > 1e-12:
        raise ValueError("xi' must be a unit vector")
    u = sum(xi_prime[j] * rep.matrices[j] for j in range(rep.n - 1))
    v = rep.matrices[rep.n - 1]
    words = (np.eye(rep.dim, dtype=complex), u, v, u @ v)
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for coeff, word in zip(elem.coeffs, words):
        if coeff:
            out += coeff.eval_at(xi_n, h_value) * word
    return out


@dataclass(frozen=True)
class QuadratureConfig:
    sphere_samples: int = 64
    seed: int = 42
    h_value: float = 1.0
    quad_tol: float = 1e-10
    tail_tol: float = 1e-10
    base_cutoff: float = 32.0


def sphere_points(rng: np.random.Generator, count: int, ambient: int) -> np.ndarray:
    """count unit vectors in R^ambient (deterministic given the generator state)."""
    v = rng.standard_normal((count, ambient))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def elem_decay(elem: CliffordElem) -> int:
    """Conservative decay order of a matrix realization at large |xi_n|."""
    orders = [c.decay_order() for c in elem.coeffs if c]
    return min(orders) if orders else 10**9


def tail_cutoff(g, decay: int, tol: float, base: float = 32.0) -> tuple[float, float]:
    """Cutoff T with the analytic tail bound of the |xi|^-decay envelope below tol.

    The decay order is capped before exponentiation; a capped envelope is
    still an upper bound, it only pushes the cutoff further out.
    """
    if decay < 2:
        raise ValueError("integrand does not decay fast enough for a finite cutoff")
    decay = min(decay, 40)
    scale = max(abs(g(base)), abs(g(-base)))
    if scale < 1e-250:
        return base, 0.0
    c_env = scale * base**decay
    t_needed = (2.0 * c_env / ((decay - 1) * tol)) ** (1.0 / (decay - 1))
    t_cut = max(base, t_needed)
    tail = 2.0 * c_env * t_cut ** (1 - decay) / (decay - 1)
    return t_cut, tail


def quad_complex(g, t_cut: float, tol: float) -> tuple[complex, float]:
    import warnings

    with warnings.catch_warnings():
        # integrands that vanish identically up to matmul noise trip the
        # roundoff detector; the returned error estimate still covers them
        warnings.simplefilter("ignore")
        re, re_err = quad(lambda t: g(t).real, -t_cut, t_cut, limit=300, epsabs=tol, epsrel=tol)
        im, im_err = quad(lambda t: g(t).imag, -t_cut, t_cut, limit=300, epsabs=tol, epsrel=tol)
    return re + 1j * im, re_err + im_err


@dataclass
class NumericCase:
    index: CaseIndex
    value: complex
    sphere_spread: float
    quad_error: float
    tail_bound: float
    cutoff: float
    note: str = ""


def numeric_case(idx: CaseIndex, cat: Catalog, cfg: QuadratureConfig,
                 rep: GammaRep | None = None) -> NumericCase:
    """Quadrature/Monte-Carlo evaluation of one boundary case.

    The traced product is rebuilt from matrix realizations of the same
    catalog factors the exact route uses; trace, sphere reduction and
    xi_n-integration are all performed numerically.
    """
    if idx.alpha > 0:
        return NumericCase(idx, 0.0 + 0j, 0.0, 0.0, 0.0, 0.0,
                           "vanishes through the tangential-derivative factor")
    if rep is None:
        rep = gamma_matrices(cat.n)
    pref, left, right = case_factors(idx, cat)
    rng = np.random.default_rng(cfg.seed)
    pts = sphere_points(rng, cfg.sphere_samples, cat.n - 1)

    eye = np.eye(rep.dim, dtype=complex)
    v_mat = rep.matrices[rep.n - 1]
    u_stack = np.einsum("sj,jab->sab", pts, np.stack(rep.matrices[:rep.n - 1]))
    word_stacks = (np.broadcast_to(eye, u_stack.shape), u_stack,
                   np.broadcast_to(v_mat, u_stack.shape), u_stack @ v_mat)

    def realized(elem: CliffordElem, xi_n: float) -> np.ndarray:
        out = np.zeros_like(u_stack)
        for coeff, words in zip(elem.coeffs, word_stacks):
            if coeff:
                out = out + coeff.eval_at(xi_n, cfg.h_value) * words
        return out

    spreads = []

    def traced(xi_n: float) -> complex:
        lm = realized(left, xi_n)
        rm = realized(right, xi_n)
        traces = np.einsum("sij,sji->s", lm, rm)
        spreads.append(np.std(traces) / (1.0 + np.max(np.abs(traces))))
        return complex(np.mean(traces))

    decay = elem_decay(left) + elem_decay(right)
    t_cut, tail = tail_cutoff(traced, decay, cfg.tail_tol, cfg.base_cutoff)
    integral, quad_err = quad_complex(traced, t_cut, cfg.quad_tol)
    value = pref.to_complex() * vol_sphere(cat.n) * integral
    return NumericCase(idx, value, float(max(spreads)), quad_err, tail, t_cut)


@dataclass(frozen=True)
class CompareVerdict:
    passed: bool
    exact_numeric: complex
    oracle_value: complex
    error: float
    mode: str  # "relative" | "absolute"


def compare(exact, numeric: complex, n: int, h_value: float,
            tol_rel: float = 1e-6, tol_abs: float = 1e-8) -> CompareVerdict:
    """Substitute h and Vol(S^(n-2)) into the exact value and compare."""
    exact_num = exact.numeric(h_value) * vol_sphere(n)
    if exact_num == 0:
        err = abs(numeric)
        return CompareVerdict(err <= tol_abs, exact_num, numeric, err, "absolute")
    err = abs(numeric - exact_num) / abs(exact_num)
    return CompareVerdict(err <= tol_rel, exact_num, numeric, err, "relative")


# ---- finite-difference validation of the x_n-jets ----

def _metric_model_value(family: str, q: int, rep: GammaRep, xi_prime: np.ndarray,
                        xi_n: float, h_value: float, x_n: float) -> np.ndarray:
    """Closed x_n-dependent form of the leading symbol families.

    Metric model: the squared covector norm is h(x_n)|xi'|^2 + xi_n^2 with
    h(x_n) = 1 + h*x_n, and c(xi')(x_n) = sqrt(h(x_n)) c(xi')(0).
    """
    hx = 1.0 + h_value * x_n
    u = sum(xi_prime[j] * rep.matrices[j] for j in range(rep.n - 1))
    v = rep.matrices[rep.n - 1]
    norm2 = hx + xi_n**2
    if family == "odd":
        return 1j * (math.sqrt(hx) * u + xi_n * v) / norm2**q
    if family == "even":
        return norm2 ** (1 - q) * np.eye(rep.dim, dtype=complex)
    raise ValueError(f"unknown symbol family {family!r}")


@dataclass(frozen=True)
class JetCheck:
    label: str
    max_rel_err: float
    richardson_order: float


def validate_jet_fd(jet: SymbolJet, rep: GammaRep, cfg: QuadratureConfig,
                    eps: float = 2e-3) -> JetCheck:
    """Central finite difference of the metric-model realization vs the jet.

    Validates the rewrite rules d_xn c(xi') = (h/2) c(xi') and
    d_xn |xi|^2 = h used to build every stored x_n-derivative.  The step is
    kept large enough that truncation dominates roundoff, so the Richardson
    ratio exposes the quadratic convergence of the central difference.
    """
    if jet.xn_family is None:
        raise ValueError(f"{jet.label} has no metric-model realization")
    family, q = jet.xn_family
    rng = np.random.default_rng(cfg.seed)
    pts = sphere_points(rng, 4, rep.n - 1)
    rel_errs, orders = [], []
    for xi_n in (0.0, 0.7, -1.3):
        for xp in pts:
            exact = realize(jet.require_dxn(), rep, xp, xi_n, cfg.h_value)
            scale = max(np.max(np.abs(exact)), 1e-12)

            def fd(e: float) -> np.ndarray:
                hi = _metric_model_value(family, q, rep, xp, xi_n, cfg.h_value, e)
                lo = _metric_model_value(family, q, rep, xp, xi_n, cfg.h_value, -e)
                return (hi - lo) / (2 * e)

            err1 = np.max(np.abs(fd(eps) - exact))
            err2 = np.max(np.abs(fd(eps / 2) - exact))
            rel_errs.append(err1 / scale)
            if err2 > 1e-14 * scale:
                orders.append(math.log2(err1 / err2))
    return JetCheck(jet.label, float(max(rel_errs)), float(np.median(orders)))


def contour_pi_plus(f, xi0: float, radius: float = 0.6, npts: int = 512) -> complex:
    """Half-plane projection by a contour integral around the upper pole.

    (1/2 pi i) times the closed integral of f(z)/(xi0 - z) over a circle
    enclosing z = +i; spectrally accurate for the rational functions here.
    """
    theta = 2.0 * np.pi * (np.arange(npts) + 0.5) / npts
    z = 1j + radius * np.exp(1j * theta)
    dz = 1j * radius * np.exp(1j * theta) * (2.0 * np.pi / npts)
    vals = np.array([f(zz) for zz in z])
    return complex(np.sum(vals / (xi0 - z) * dz) / (2j * np.pi))


# ---- whole-configuration oracle run ----

@dataclass
class OracleCaseReport:
    index: CaseIndex
    label: str
    exact: str
    exact_numeric: complex
    oracle_value: complex
    error: float
    mode: str
    passed: bool
    sphere_spread: float
    quad_error: float
    tail_bound: float


@dataclass
class OracleReport:
    n: int
    p1: int
    p2: int
    h_value: float
    seed: int
    cases: list[OracleCaseReport] = field(default_factory=list)
    total_exact: complex = 0.0
    total_oracle: complex = 0.0
    total_passed: bool = True
    jet_checks: list[JetCheck] = field(default_factory=list)

    @property
    def agreement(self) -> bool:
        return self.total_passed and all(c.passed for c in self.cases)


def run_oracle(n: int, p1: int, p2: int, cfg: QuadratureConfig,
               tol_rel: float = 1e-6, tol_abs: float = 1e-8) -> OracleReport:
    from .boundary import compute_case, compute_phi

    cat = build_catalog(n, p1, p2)
    rep = gamma_matrices(n)
    report = OracleReport(n, p1, p2, cfg.h_value, cfg.seed)
    phi = compute_phi(n, p1, p2)
    for case in phi.cases:
        num = numeric_case(case.index, cat, cfg, rep)
        verdict = compare(case.value, num.value, n, cfg.h_value, tol_rel, tol_abs)
        report.cases.append(OracleCaseReport(
            case.index, case.label, str(case.value), verdict.exact_numeric,
            num.value, verdict.error, verdict.mode, verdict.passed,
            num.sphere_spread, num.quad_error, num.tail_bound))
    report.total_exact = phi.phi.numeric(cfg.h_value) * vol_sphere(n)
    report.total_oracle = sum(c.oracle_value for c in report.cases)
    total = compare(phi.phi, report.total_oracle, n, cfg.h_value, tol_rel, tol_abs)
    report.total_passed = total.passed
    seen = set()
    jets = [j for j in cat.right.values()]
    jets += [p.source for p in cat.left.values() if getattr(p, "source", None) is not None]
    for jet in jets:
        if jet.xn_family is None or jet.dxn is None or not jet.dxn or jet.label in seen:
            continue
        seen.add(jet.label)
        report.jet_checks.append(validate_jet_fd(jet, rep, cfg))
    return report
