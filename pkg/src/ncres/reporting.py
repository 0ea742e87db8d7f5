"""Report assembly and serialization.

Reports are plain dicts serialized canonically (sorted keys, fixed
separators, no timestamps), so identical run configurations produce
byte-identical documents and re-parsing a report round-trips exactly.
"""
from __future__ import annotations

import json
from typing import Any

from .boundary import PhiReport, TheoremReport
from .oracle import OracleReport, vol_sphere
from .printed import ComparisonResult


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, separators=(",", ": "),
                      allow_nan=False) + "\n"


def _cplx(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def phi_report_dict(phi: PhiReport, h_value: float) -> dict[str, Any]:
    vol = vol_sphere(phi.n)
    cases = []
    for c in phi.cases:
        cases.append({
            "index": {"r": c.index.r, "ell": c.index.ell, "k": c.index.k,
                      "j": c.index.j, "alpha": c.index.alpha},
            "label": c.label,
            "integrand": str(c.integrand_trace),
            "value_q": str(c.value.coeff),
            "value_units": f"pi^{c.value.pi_pow}*Vol(S^{phi.n-2})",
            "value_numeric": c.value.numeric(h_value).real * vol,
            "byparts_consistent": c.byparts_consistent,
        })
    out: dict[str, Any] = {
        "config": {"n": phi.n, "p1": phi.p1, "p2": phi.p2, "m": phi.m,
                   "theorem": phi.theorem},
        "K_normalization": f"K(x0) = ({phi.K_coefficient})",
        "cases": cases,
        "phi": {"q": str(phi.phi.coeff),
                "units": f"pi^{phi.phi.pi_pow}*Vol(S^{phi.n-2})",
                "numeric": phi.phi.numeric(h_value).real * vol,
                "h_degrees": sorted(phi.phi.coeff.degrees())},
        "numeric_at": {"h_value": h_value, "vol_sphere": vol},
        "homogeneity_ok": phi.homogeneity_ok(),
        "reality_ok": phi.reality_ok(),
    }
    out["L0"] = None if phi.L0 is None else {
        "q": str(phi.L0.coeff), "units": "pi",
        "numeric": phi.L0.numeric(h_value).real}
    return out


def theorem_report_dict(tr: TheoremReport, comparisons: list[ComparisonResult],
                        oracle: OracleReport | None, h_value: float) -> dict[str, Any]:
    doc = phi_report_dict(tr.phi_report, h_value)
    doc["theorem"] = tr.theorem
    doc["boundary_vanishes"] = tr.boundary_vanishes
    doc["interior"] = None if tr.interior is None else {
        "display": tr.interior.display(),
        "rational": str(tr.interior.rational),
        "pi_power": tr.interior.pi_power,
        "sqrt2": tr.interior.sqrt2,
        "numeric": tr.interior.numeric(),
        "note": "documented closed-form constant of the interior term; not derived",
    }
    doc["closed_form"] = None if tr.closed_form is None else {
        "bracket1": str(tr.closed_form.bracket1),
        "bracket2": str(tr.closed_form.bracket2),
        "bracket3": str(tr.closed_form.bracket3),
        "bracket4_tau": tr.closed_form.bracket4_tau.to_str("tau"),
        "bracket4_two_m": str(tr.closed_form.bracket4_two_m),
        "sum_two_m": str(tr.closed_form.sum_two_m()),
        "note": "printed bracket sum; tau marks the literal 2*pi slots",
    }
    doc["paper_comparisons"] = [comparison_dict(c) for c in comparisons]
    doc["oracle"] = None if oracle is None else oracle_report_dict(oracle)
    return doc


def comparison_dict(c: ComparisonResult) -> dict[str, Any]:
    return {"eq": c.eq, "description": c.description, "severity": c.severity,
            "status": c.status, "detail": c.detail}


def oracle_report_dict(rep: OracleReport) -> dict[str, Any]:
    return {
        "config": {"n": rep.n, "p1": rep.p1, "p2": rep.p2,
                   "h_value": rep.h_value, "seed": rep.seed},
        "agreement": rep.agreement,
        "cases": [{
            "index": {"r": c.index.r, "ell": c.index.ell, "k": c.index.k,
                      "j": c.index.j, "alpha": c.index.alpha},
            "label": c.label,
            "exact": c.exact,
            "exact_numeric": _cplx(c.exact_numeric),
            "oracle_value": _cplx(c.oracle_value),
            "error": c.error,
            "mode": c.mode,
            "passed": c.passed,
            "sphere_spread": c.sphere_spread,
            "quad_error": c.quad_error,
            "tail_bound": c.tail_bound,
        } for c in rep.cases],
        "total": {"exact": _cplx(rep.total_exact), "oracle": _cplx(rep.total_oracle),
                  "passed": rep.total_passed},
        "jet_checks": [{"label": j.label, "max_rel_err": j.max_rel_err,
                        "richardson_order": j.richardson_order} for j in rep.jet_checks],
    }


def render_text(doc: dict, indent: int = 0) -> str:
    """Stable plain-text rendering of a report document."""
    lines: list[str] = []

    def emit(key, value, depth):
        pad = "  " * depth
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k in sorted(value):
                emit(k, value[k], depth + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                head = item.get("label") or item.get("eq") or ""
                lines.append(f"{pad}  - {head}")
                for k in sorted(item):
                    if k not in ("label", "eq"):
                        emit(k, item[k], depth + 2)
        else:
            lines.append(f"{pad}{key}: {value}")

    for k in sorted(doc):
        emit(k, doc[k], indent)
    return "\n".join(lines) + "\n"
