"""Case enumeration, exact case values, theorem sums, closed-form brackets.

Expected case values were computed twice before being frozen here: by an
independent residue computation in a computer algebra system, and by the
package's own numeric oracle (gamma matrices + quadrature); the two agree
to ~1e-10 relative.
"""
from fractions import Fraction

import pytest

from ncres.boundary import (
    CaseIndex,
    case_prefactor,
    compute_case,
    compute_phi,
    config_for,
    enumerate_cases,
    interior_constant,
    l0_closed_form,
    theorem_report,
)
from ncres.rational import CoeffPoly, GaussianRational
from ncres.symbols import UnsupportedConfigurationError, build_catalog

# frozen boundary-case table for the (2m+2, 1, 2m-1) family: coefficient of
# pi * h * Vol(S^(n-2)) per case
CASE_TABLE = {
    1: {"aI": 0, "aII": "-3/8", "aIII": "3/8", "b": "9/8", "c": "-9/8"},
    2: {"aI": 0, "aII": "-15/16", "aIII": "25/16", "b": "55/16", "c": "-65/16"},
    3: {"aI": 0, "aII": "-63/32", "aIII": "147/32", "b": "273/32", "c": "-357/32"},
    4: {"aI": 0, "aII": "-63/16", "aIII": "189/16", "b": "315/16", "c": "-441/16"},
}

# frozen printed brackets (coefficient of pi); bracket 4 under the 2m reading
BRACKETS = {
    1: ("-1/96", "3/8", "9/8", "-9/8"),
    2: ("-5/192", "25/16", "55/16", "-65/16"),
    3: ("-7/128", "147/32", "273/32", "-357/32"),
    4: ("-7/64", "189/16", "315/16", "-441/16"),
}

T31_TABLE = {1: "1/2", 2: "3/4", 3: "5/4"}


def coeff_of(value, degree):
    return value.coeff.coefficient(degree)


class TestEnumeration:
    def test_paper_order_even_family(self):
        cases = enumerate_cases(6, 1, 3)
        assert [c.as_tuple() for c in cases] == [
            (-1, -3, 0, 0, 1), (-1, -3, 0, 1, 0), (-1, -3, 1, 0, 0),
            (-2, -3, 0, 0, 0), (-1, -4, 0, 0, 0)]

    def test_single_case_families(self):
        assert [c.as_tuple() for c in enumerate_cases(5, 1, 3)] == [(-1, -3, 0, 0, 0)]
        assert [c.as_tuple() for c in enumerate_cases(4, 1, 2)] == [(-1, -2, 0, 0, 0)]

    def test_constraint_soundness_and_exhaustiveness(self):
        for (n, p1, p2) in [(4, 1, 1), (6, 1, 3), (5, 1, 3), (5, 1, 2), (4, 1, 2), (7, 2, 3)]:
            got = {c.as_tuple() for c in enumerate_cases(n, p1, p2)}
            for c in got:
                assert CaseIndex(*c).constraint_holds(n)
            # brute force within catalog depth and bounded derivative orders
            brute = set()
            for r in (-p1, -p1 - 1):
                for ell in (-p2, -p2 - 1):
                    for k in range(4):
                        for j in range(4):
                            for alpha in range(4):
                                if r + ell - k - j - alpha - 1 == -n:
                                    brute.add((r, ell, k, j, alpha))
            assert got == brute

    def test_unsupported_configuration(self):
        with pytest.raises(UnsupportedConfigurationError):
            enumerate_cases(6, 2, 2)


class TestPrefactor:
    def test_values(self):
        minus_i = -GaussianRational.i()
        assert case_prefactor(CaseIndex(-1, -1, 0, 0, 1)) == GaussianRational.of(-1)
        assert case_prefactor(CaseIndex(-1, -1, 0, 1, 0)) == GaussianRational.of(Fraction(-1, 2))
        assert case_prefactor(CaseIndex(-1, -1, 1, 0, 0)) == GaussianRational.of(Fraction(-1, 2))
        assert case_prefactor(CaseIndex(-2, -1, 0, 0, 0)) == minus_i


class TestCaseValues:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_even_family_case_table(self, m):
        phi = compute_phi(2 * m + 2, 1, 2 * m - 1)
        by_label = {c.label: c for c in phi.cases}
        assert set(by_label) == {"aI", "aII", "aIII", "b", "c"}
        for label, want in CASE_TABLE[m].items():
            got = coeff_of(by_label[label].value, 1)
            assert got == GaussianRational.of(Fraction(want)), (m, label)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_total_vanishes(self, m):
        phi = compute_phi(2 * m + 2, 1, 2 * m - 1)
        assert phi.phi.is_zero()
        assert phi.L0 is not None and phi.L0.is_zero()

    def test_case_aI_zero_with_zero_integrand(self):
        cat = build_catalog(6, 1, 3)
        case = compute_case(CaseIndex(-1, -3, 0, 0, 1), cat)
        assert case.value.is_zero()
        assert not case.integrand_trace

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_byparts_equivalence(self, m):
        for theorem in ("1.1", "3.1", "3.2", "3.3", "3.4"):
            phi = compute_phi(*config_for(theorem, m))
            for c in phi.cases:
                assert c.byparts_consistent in (None, True), (theorem, m, c.label)

    def test_aII_documented_print_discrepancy(self):
        """The mechanical j=1 case value is exactly 36 x the printed bracket."""
        for m in (1, 2):
            phi = compute_phi(2 * m + 2, 1, 2 * m - 1)
            aII = {c.label: c for c in phi.cases}["aII"].value
            printed = l0_closed_form(m).bracket1
            assert aII.coeff == printed * CoeffPoly.h() * GaussianRational.of(36)


class TestOddFamily:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_theorem31_value(self, m):
        phi = compute_phi(2 * m + 1, 1, 2 * m - 1)
        assert len(phi.cases) == 1
        assert coeff_of(phi.phi, 0) == GaussianRational.of(Fraction(T31_TABLE[m]))
        assert phi.phi.h_degree() == 0

    def test_matches_printed_product_formula(self):
        # 2^-m m(m+1)...(2m-1) / m!
        import math
        for m in (1, 2, 3, 4):
            phi = compute_phi(2 * m + 1, 1, 2 * m - 1)
            prod = 1
            for t in range(m):
                prod *= m + t
            want = Fraction(prod, 2**m * math.factorial(m))
            assert coeff_of(phi.phi, 0) == GaussianRational.of(want)


class TestVanishingFamilies:
    @pytest.mark.parametrize("theorem", ["3.2", "3.3", "3.4"])
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_phi_zero_casewise(self, theorem, m):
        phi = compute_phi(*config_for(theorem, m))
        assert phi.phi.is_zero()
        for c in phi.cases:
            assert c.value.is_zero(), (theorem, m, c.label)


class TestHomogeneityAndReality:
    @pytest.mark.parametrize("theorem", ["1.1", "3.1", "3.2", "3.3", "3.4"])
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_symbolic_invariants(self, theorem, m):
        phi = compute_phi(*config_for(theorem, m))
        assert phi.homogeneity_ok()
        assert phi.reality_ok()


class TestClosedForm:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_frozen_brackets(self, m):
        cf = l0_closed_form(m)
        got = [cf.bracket1, cf.bracket2, cf.bracket3, cf.bracket4_two_m]
        for g, want in zip(got, BRACKETS[m]):
            assert g == CoeffPoly.const(Fraction(want)), (m, str(g), want)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_brackets_are_rational_multiples_of_pi(self, m):
        cf = l0_closed_form(m)
        for b in (cf.bracket1, cf.bracket2, cf.bracket3, cf.bracket4_two_m):
            assert b.degrees() in (set(), {0})
            assert b.coefficient(0).im == 0

    def test_first_bracket_m1(self):
        # (2 pi / 72) * (-3/8) = -pi/96
        cf = l0_closed_form(1)
        assert cf.bracket1 == CoeffPoly.const(Fraction(-1, 96))

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_dual_path_brackets_two_three_four(self, m):
        """Brackets 2 and 3 equal the k=1 and r=-2 case values; bracket 4
        equals the ell=-2m case under the 2m reading of the printed 2*pi."""
        phi = compute_phi(2 * m + 2, 1, 2 * m - 1)
        by_label = {c.label: c for c in phi.cases}
        cf = l0_closed_form(m)
        h = CoeffPoly.h()
        assert by_label["aIII"].value.coeff == cf.bracket2 * h
        assert by_label["b"].value.coeff == cf.bracket3 * h
        assert by_label["c"].value.coeff == cf.bracket4_two_m * h

    def test_bracket4_tau_structure(self, ):
        cf = l0_closed_form(1)
        # -3/4 - (3/16) tau; tau = 2m = 2 gives -9/8
        assert cf.bracket4_tau.coefficient(0) == GaussianRational.of(Fraction(-3, 4))
        assert cf.bracket4_tau.coefficient(1) == GaussianRational.of(Fraction(-3, 16))
        assert cf.bracket4_printed_numeric() == pytest.approx(-3 / 4 - 3 / 16 * 2 * 3.141592653589793)


class TestInteriorConstant:
    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9, 10])
    def test_exact_gamma_evaluation(self, n):
        import math
        ic = interior_constant(n)
        direct = (2 - n) * (2 * math.pi) ** (n / 2) / (12 * math.gamma(n / 2))
        assert ic.numeric() == pytest.approx(direct, rel=1e-13)

    def test_even_carries_no_sqrt2(self):
        assert not interior_constant(6).sqrt2
        assert interior_constant(7).sqrt2

    def test_four_dimensional_value(self):
        ic = interior_constant(4)
        assert ic.rational == Fraction(-2, 3) and ic.pi_power == 2


class TestTheoremReport:
    def test_t11_report_shape(self):
        tr = theorem_report("1.1", 2)
        assert tr.boundary_vanishes
        assert tr.interior is not None
        assert tr.closed_form is not None

    def test_t33_total_zero_no_interior(self):
        tr = theorem_report("3.3", 2)
        assert tr.boundary_vanishes
        assert tr.interior is None

    def test_t34_has_interior(self):
        tr = theorem_report("3.4", 1)
        assert tr.interior is not None
        assert tr.boundary_vanishes

    def test_t31_no_interior_nonzero_boundary(self):
        tr = theorem_report("3.1", 1)
        assert tr.interior is None
        assert not tr.boundary_vanishes
