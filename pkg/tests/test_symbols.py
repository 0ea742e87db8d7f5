"""Symbol catalog: constructors, projections, jets, assembly, coverage."""
import pytest

from ncres.clifford import ONE, U, V, W, CliffordElem, TraceConvention
from ncres.exprio import parse_rationalfn as parse
from ncres.rational import CoeffPoly, GaussianRational, RationalFn
from ncres.symbols import (
    UnsupportedConfigurationError,
    b_two,
    build_catalog,
    d_xi_n,
    pi_plus_jet,
    pi_plus_sigma_minus2_Dinv,
    resolve_config,
    sigma0_D,
    sigma_leading_inverse_power,
    sigma_minus2_D2,
    sigma_minus2m_D1minus2m,
    sigma_minus3_D2,
    sigma_subleading_even,
)


def elem(one="0", u="0", v="0", w="0"):
    return CliffordElem((parse(one), parse(u), parse(v), parse(w)))


class TestLeadingOddFamily:
    def test_value_m1(self):
        jet = sigma_leading_inverse_power(1)
        assert jet.value == elem(u="i/(1+xi^2)", v="i*xi/(1+xi^2)")

    def test_projected_value_m1(self):
        plus = pi_plus_jet(sigma_leading_inverse_power(1))
        assert plus.value == elem(u="1/(2*(xi-i))", v="i/(2*(xi-i))")

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_dxn_general(self, m):
        jet = sigma_leading_inverse_power(m)
        want = elem(u=f"i*h/(2*(1+xi^2)^{m}) - i*{m}*h/(1+xi^2)^{m+1}",
                    v=f"-i*{m}*h*xi/(1+xi^2)^{m+1}")
        assert jet.dxn == want


class TestEvenFamily:
    def test_value_m2(self):
        jet = sigma_minus2_D2(2)
        assert jet.value == elem(one="1/(1+xi^2)")

    def test_dxn_m2(self):
        # d_xn |xi|^2 = h at the base point; checked against finite
        # differences of the metric model in test_oracle.py
        jet = sigma_minus2_D2(2)
        assert jet.dxn == elem(one="-h/(1+xi^2)^2")

    def test_m1_is_constant_identity(self):
        jet = sigma_minus2_D2(1)
        assert jet.value == elem(one="1")
        assert jet.dxn == CliffordElem.zero()


class TestOrderZeroAndMinusThree:
    @pytest.mark.parametrize("n,coeff", [(6, "-5/4"), (4, "-3/4")])
    def test_sigma0(self, n, coeff):
        assert sigma0_D(n) == elem(v=f"({coeff})*h")

    def test_sigma0_traceless(self):
        assert sigma0_D(6).trace(TraceConvention(6)) == RationalFn.zero()

    def test_sigma_minus3_w_component(self):
        got = sigma_minus3_D2(6)
        assert got.coeffs[W] == parse("i*h/(2*(1+xi^2)^2)")

    def test_sigma_minus3_scalar_component_n6(self):
        got = sigma_minus3_D2(6)
        assert got.coeffs[ONE] == parse("-5*i*h*xi/(2*(1+xi^2)^2) - 2*i*h*xi/(1+xi^2)^3")

    def test_scalar_component_odd_in_xi(self):
        f = sigma_minus3_D2(6).coeffs[ONE]
        flipped = RationalFn(
            upper={k: p * GaussianRational.of((-1) ** k) for k, p in f.lower.items()},
            lower={k: p * GaussianRational.of((-1) ** k) for k, p in f.upper.items()},
            poly={d: p * GaussianRational.of((-1) ** d) for d, p in f.poly.items()})
        assert flipped == -f  # f(-xi) = -f(xi)


class TestAssembledSubleading:
    def test_first_summand(self):
        n, m = 6, 2
        got = sigma_minus2m_D1minus2m(m, n)
        first = elem(v=f"({1-n})*h/(4*(1+xi^2)^{m})")
        # subtracting the remaining summands leaves the first
        rest = got - first
        assert rest.coeffs[V] != got.coeffs[V]

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_ksum_vanishes_iff_m_is_1(self, m):
        n = 2 * m + 2
        q = m
        ks = sigma_subleading_even(q, n) - sigma_minus3_D2(n).scale(
            parse(f"{q}/(1+xi^2)^{q-1}") if q > 1 else RationalFn.const(q))
        expected = CliffordElem.scalar(
            parse(f"-i*({q*q-q})*h*xi/(1+xi^2)^{q+2}"))
        assert ks == expected
        if m == 1:
            assert ks == CliffordElem.zero()

    def test_words_are_u_and_v_only(self):
        got = sigma_minus2m_D1minus2m(2, 6)
        assert got.coeffs[ONE] == RationalFn.zero()
        assert got.coeffs[W] == RationalFn.zero()
        assert got.coeffs[U] and got.coeffs[V]


class TestPiPlusSigmaMinus2:
    def test_b2_c_dxn_coefficient(self):
        # (h/2)[1/(4i(xi-i)) + 1/(8(xi-i)^2) - (3xi-7i)/(8(xi-i)^3)]
        want = parse("h/2*(1/(4*i*(xi-i)) + 1/(8*(xi-i)^2) - (3*xi-7*i)/(8*(xi-i)^3))")
        assert b_two().coeffs[V] == want

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
    def test_given_equals_projected_assembly(self, n):
        # the m=1 composition assembly is sigma_-2(D^-1) itself
        assembled = sigma_minus2m_D1minus2m(1, n).pi_plus()
        assert assembled == pi_plus_sigma_minus2_Dinv(n)

    def test_poles_at_plus_i_only(self):
        given = pi_plus_sigma_minus2_Dinv(6)
        for c in given.coeffs:
            assert not c.lower and not c.poly


class TestJetOps:
    def test_pi_plus_jet_dxn_cancellation(self):
        plus = pi_plus_jet(sigma_leading_inverse_power(1))
        assert plus.dxn == elem(u="i*h/(4*(xi-i)^2)", v="i*i*h/(4*(xi-i)^2)")

    def test_pi_plus_jet_on_polynomial_jet(self):
        from ncres.symbols import SymbolJet
        jet = SymbolJet(CliffordElem.scalar(RationalFn.xi(2)),
                        CliffordElem.scalar(RationalFn.const(CoeffPoly.h())),
                        0, "poly", "-")
        plus = pi_plus_jet(jet)
        assert plus.value == CliffordElem.zero()
        assert plus.dxn == CliffordElem.zero()

    def test_d_xi_n_printed_forms(self):
        jet = sigma_leading_inverse_power(2)
        d1 = d_xi_n(jet, 1)
        assert d1.value == elem(u="-2*2*i*xi/(1+xi^2)^3", v="i*(1+(1-4)*xi^2)/(1+xi^2)^3")

    def test_d_xi_n_identity(self):
        jet = sigma_leading_inverse_power(1)
        assert d_xi_n(jet, 0) is jet

    def test_pi_plus_commutes_with_d_xi(self):
        for m in (1, 2, 3):
            jet = sigma_leading_inverse_power(m)
            a = pi_plus_jet(d_xi_n(jet, 1))
            b = pi_plus_jet(jet)
            assert a.value == b.value.differentiate()
            assert a.dxn == b.dxn.differentiate()


class TestCatalog:
    def test_resolve_config_families(self):
        assert resolve_config(6, 1, 3) == (2, "1.1")
        assert resolve_config(5, 1, 3) == (2, "3.1")
        assert resolve_config(5, 1, 2) == (2, "3.2")
        assert resolve_config(4, 1, 2) == (2, "3.3")
        assert resolve_config(7, 2, 3) == (2, "3.4")

    def test_resolve_config_rejects(self):
        with pytest.raises(UnsupportedConfigurationError, match="unsupported"):
            resolve_config(6, 2, 2)
        with pytest.raises(UnsupportedConfigurationError):
            resolve_config(6, 1, 2)

    def test_entries_carry_tags(self):
        cat = build_catalog(6, 1, 3)
        entry = cat.find("sigma_-4_D-3")
        assert entry is not None
        assert entry.eq_tag == "(3.5)/(3.37)"

    def test_decay_bookkeeping(self):
        """Underived catalog values: balanced pole form with bounded numerator.

        Fraction form has denominator (1+xi^2)^N and numerator degree at
        most 2N + order + 1, which guarantees integrability downstream.
        """
        for (n, p1, p2) in [(4, 1, 1), (6, 1, 3), (8, 1, 5), (5, 1, 2), (7, 2, 3)]:
            cat = build_catalog(n, p1, p2)
            for ell, jet in cat.right.items():
                for comp in jet.value.coeffs:
                    if not comp:
                        continue
                    numer, a, b = comp.to_fraction()
                    assert a == b
                    assert numer.degree() <= 2 * a + jet.order + 1

    def test_left_depth_matches_orders(self):
        cat = build_catalog(7, 2, 3)
        assert set(cat.left) == {-2, -3}
        assert set(cat.right) == {-3, -4}
