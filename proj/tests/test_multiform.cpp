#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aknsmf/multiform.hpp"
#include "helpers.hpp"

#include <memory>

using namespace aknsmf;
using namespace aknsmf::testing;

namespace {

std::shared_ptr<const AknsFrame> frame10() {
    static auto fr = std::make_shared<const AknsFrame>(build_frame(10));
    return fr;
}

Poly Q() { return Qv(); }
Poly R() { return Rv(); }
Poly Qj(std::initializer_list<std::pair<int, int>> jet) { return Qv(JetIndex(jet)); }
Poly Rj(std::initializer_list<std::pair<int, int>> jet) { return Rv(JetIndex(jet)); }

VBForm dEl(int j) { return VBForm::vertical(Variable::e(j)); }
VBForm dFl(int j) { return VBForm::vertical(Variable::f(j)); }

}  // namespace

TEST_CASE("hamiltonian coefficients in the phase chart") {
    const AknsFrame& fr = *frame10();
    GaussianRational i = gi();

    Poly h12 = hamiltonian_coeff(fr, 1, 2).value;
    CHECK(h12 == (E(2) * F(2)).scaled(gi(-2)) - E(1) * E(1) * F(1) * F(1));

    Poly h13 = hamiltonian_coeff(fr, 1, 3).value;
    CHECK(h13 == (E(2) * F(3) + E(3) * F(2)).scaled(gi(-2)) -
                     (E(1) * F(1) * (F(1) * E(2) + E(1) * F(2))).scaled(G(3, 2, 0, 1)));

    Poly h23 = hamiltonian_coeff(fr, 2, 3).value;
    Poly pair = E(1) * F(2) + F(1) * E(2);
    CHECK(h23 == (E(3) * F(3)).scaled(gi(-2)) +
                     (E(1) * F(1) * (F(1) * E(3) + E(1) * F(3))).scaled(G(1, 2, 0, 1)) -
                     pair * pair +
                     (E(1) * E(1) * E(1) * F(1) * F(1) * F(1)).scaled(G(0, 1, 1, 8)));

    // antisymmetry and structural invariants
    CHECK(hamiltonian_coeff(fr, 2, 1).value == -h12);
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            Poly h = hamiltonian_coeff(fr, a, b).value;
            CHECK(h.monomial_balance());
            CHECK(h.max_ef_index() <= b);
        }
    CHECK_THROWS_AS(hamiltonian_coeff(fr, 5, 6), Error);
}

TEST_CASE("hamiltonian coefficients in the q,r chart") {
    const AknsFrame& fr = *frame10();
    QrChart chart(5);
    Poly q1 = Qj({{1, 1}}), r1 = Rj({{1, 1}});
    Poly q11 = Qj({{1, 2}}), r11 = Rj({{1, 2}});

    CHECK(chart.ef_to_qr(hamiltonian_coeff(fr, 1, 2).value) ==
          (q1 * r1 - Q() * Q() * R() * R()).scaled(G(-1, 4, 0, 1)));
    CHECK(chart.ef_to_qr(hamiltonian_coeff(fr, 1, 3).value) ==
          (q1 * r11 - r1 * q11).scaled(G(0, 1, 1, 8)));
    Poly wr = R() * q1 - Q() * r1;
    CHECK(chart.ef_to_qr(hamiltonian_coeff(fr, 2, 3).value) ==
          (q11 * r11).scaled(G(-1, 16, 0, 1)) +
              (Q() * R() * (R() * q11 + Q() * r11)).scaled(G(1, 8, 0, 1)) -
              (wr * wr).scaled(G(1, 16, 0, 1)) -
              (Q() * Q() * Q() * R() * R() * R()).scaled(G(1, 4, 0, 1)));
}

TEST_CASE("lagrangian coefficients match the displayed Lagrangians") {
    const AknsFrame& fr = *frame10();
    QrChart chart(8);

    Poly q2 = Qj({{2, 1}}), r2 = Rj({{2, 1}});
    Poly q1 = Qj({{1, 1}}), r1 = Rj({{1, 1}});
    Poly q11 = Qj({{1, 2}}), r11 = Rj({{1, 2}});
    Poly q3 = Qj({{3, 1}}), r3 = Rj({{3, 1}});
    Poly q111 = Qj({{1, 3}}), r111 = Rj({{1, 3}});

    Poly l12 = chart.ef_to_qr(lagrangian_coeff(fr, 1, 2).value);
    Poly l12_expect = (q2 * R() - Q() * r2).scaled(G(0, 1, 1, 4)) +
                      (R() * q11 + Q() * r11).scaled(G(1, 8, 0, 1)) -
                      (Q() * Q() * R() * R()).scaled(G(1, 4, 0, 1));
    CHECK(l12 == l12_expect);

    Poly l13 = chart.ef_to_qr(lagrangian_coeff(fr, 1, 3).value);
    Poly l13_expect = (R() * q3 - Q() * r3).scaled(G(0, 1, 1, 4)) +
                      (q111 * R() - Q() * r111).scaled(G(0, 1, 1, 16)) +
                      (Q() * R() * (Q() * r1 - R() * q1)).scaled(G(0, 1, 3, 16));
    CHECK(l13 == l13_expect);

    Poly l23 = chart.ef_to_qr(lagrangian_coeff(fr, 2, 3).value);
    Poly q112 = Qj({{1, 2}, {2, 1}}), r112 = Rj({{1, 2}, {2, 1}});
    Poly q12 = Qj({{1, 1}, {2, 1}}), r12 = Rj({{1, 1}, {2, 1}});
    Poly q13 = Qj({{1, 1}, {3, 1}}), r13 = Rj({{1, 1}, {3, 1}});
    Poly wr = Q() * r1 - q1 * R();
    Poly l23_expect =
        (R() * q112 - Q() * r112).scaled(G(0, 1, 1, 16)) +
        (q1 * r12 - q12 * r1).scaled(G(0, 1, 1, 16)) -
        (q11 * r2 - q2 * r11).scaled(G(0, 1, 1, 16)) -
        (Q() * R() * (R() * q2 - Q() * r2)).scaled(G(0, 1, 3, 16)) -
        (q13 * R() + Q() * r13).scaled(G(1, 8, 0, 1)) +
        (r1 * q3 + q1 * r3).scaled(G(1, 8, 0, 1)) +
        (q11 * r11).scaled(G(1, 16, 0, 1)) -
        (Q() * R() * (Q() * r11 + q11 * R())).scaled(G(1, 8, 0, 1)) +
        (wr * wr).scaled(G(1, 16, 0, 1)) +
        (Q() * Q() * Q() * R() * R() * R()).scaled(G(1, 4, 0, 1));
    CHECK(l23 == l23_expect);

    // antisymmetry
    CHECK(lagrangian_coeff(fr, 2, 1).value == -lagrangian_coeff(fr, 1, 2).value);
    CHECK(lagrangian_coeff(fr, 3, 3).value.is_zero());
}

TEST_CASE("symplectic coefficients") {
    const AknsFrame& fr = *frame10();

    CHECK(symplectic_coeff(fr, 0).omega1.is_zero());
    CHECK(symplectic_coeff(fr, 0).omega.is_zero());

    CHECK(symplectic_coeff(fr, 1).omega == wedge(dFl(1), dEl(1)));
    CHECK(symplectic_coeff(fr, 2).omega == wedge(dFl(1), dEl(2)) + wedge(dFl(2), dEl(1)));
    CHECK(symplectic_coeff(fr, 3).omega ==
          wedge(dFl(1), dEl(3)) + wedge(dFl(2), dEl(2)) + wedge(dFl(3), dEl(1)));

    // omega1_k agrees with (1/2) sum (f_m delta e_{k+1-m} - e_m delta f_{k+1-m})
    for (int k = 0; k <= 4; ++k) {
        VBForm expect;
        for (int m = 1; m <= k; ++m) {
            expect = expect + dEl(k + 1 - m).scaled(F(m).scaled(G(1, 2, 0, 1)));
            expect = expect - dFl(k + 1 - m).scaled(E(m).scaled(G(1, 2, 0, 1)));
        }
        CHECK(symplectic_coeff(fr, k).omega1 == expect);
    }

    // omega_3 in the q,r chart
    QrChart chart(4);
    VBForm w3 = ef_to_qr(chart, symplectic_coeff(fr, 3).omega);
    VBForm dq = VBForm::vertical(Variable::q()), dr = VBForm::vertical(Variable::r());
    VBForm dq1 = VBForm::vertical(Variable::q({{1, 1}})), dr1 = VBForm::vertical(Variable::r({{1, 1}}));
    VBForm dq11 = VBForm::vertical(Variable::q({{1, 2}})), dr11 = VBForm::vertical(Variable::r({{1, 2}}));
    VBForm expect3 = wedge(dr, dq11).scaled(G(0, 1, 1, 8)) +
                     wedge(dr11, dq).scaled(G(0, 1, 1, 8)) +
                     wedge(dq1, dr1).scaled(G(0, 1, 1, 8)) +
                     wedge(dq, dr).scaled((Q() * R()).scaled(G(0, 1, 3, 4)));
    CHECK(w3 == expect3);
}

TEST_CASE("darboux identity") {
    const AknsFrame& fr = *frame10();
    for (int k = 0; k <= 6; ++k) {
        CheckResult res = darboux_check(fr, k);
        INFO("k = ", k, " witness: ", res.witness);
        CHECK(res.pass);
    }
}

TEST_CASE("legendre consistency") {
    const AknsFrame& fr = *frame10();
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}) {
        CheckResult res = legendre_check(fr, i, j);
        INFO("pair (", i, ",", j, ") witness: ", res.witness);
        CHECK(res.pass);
    }
}

TEST_CASE("multiform hamilton equations reproduce the listed systems") {
    const AknsFrame& fr = *frame10();

    // pair (1,2): the unreduced NLS system
    VBForm residual;
    {
        VBForm omega1f = symplectic_coeff(fr, 1).omega;
        VBForm omega2f = symplectic_coeff(fr, 2).omega;
        residual = vertical_delta(VBForm::from_poly(hamiltonian_coeff(fr, 1, 2).value)) -
                   vertical_lift_contract(2, omega1f) + vertical_lift_contract(1, omega2f);
    }
    VBForm expect =
        dEl(1).scaled(dF(1, 2) - dF(2, 1) - (E(1) * F(1) * F(1)).scaled(GaussianRational(2))) +
        dEl(2).scaled(dF(1, 1) - F(2).scaled(gi(2))) +
        dFl(1).scaled(dE(2, 1) - dE(1, 2) - (E(1) * E(1) * F(1)).scaled(GaussianRational(2))) +
        dFl(2).scaled(-dE(1, 1) - E(2).scaled(gi(2)));
    CHECK(residual == expect);

    // pair (1,3): the listed equations appear among the extracted ones
    std::vector<Poly> eqs13 = hamilton_equations(fr, 1, 3);
    auto contains = [&](const Poly& p) {
        for (const Poly& e : eqs13)
            if (e == p || e == -p) return true;
        return false;
    };
    CHECK(contains(dF(1, 1) - F(2).scaled(gi(2))));
    CHECK(contains(dE(1, 1) + E(2).scaled(gi(2))));
    CHECK(contains(dF(1, 2) - F(3).scaled(gi(2)) - (E(1) * F(1) * F(1)).scaled(G(3, 2, 0, 1))));
    CHECK(contains(dE(1, 2) + E(3).scaled(gi(2)) + (E(1) * E(1) * F(1)).scaled(G(3, 2, 0, 1))));
    CHECK(contains(dF(1, 3) - dF(3, 1) - (E(2) * F(1) * F(1)).scaled(G(3, 2, 0, 1)) -
                   (E(1) * F(1) * F(2)).scaled(GaussianRational(3))));
    CHECK(contains(dE(3, 1) - dE(1, 3) - (E(1) * E(1) * F(2)).scaled(G(3, 2, 0, 1)) -
                   (E(1) * F(1) * E(2)).scaled(GaussianRational(3))));

    // pair (2,3): first listed pair of equations
    std::vector<Poly> eqs23 = hamilton_equations(fr, 2, 3);
    auto contains23 = [&](const Poly& p) {
        for (const Poly& e : eqs23)
            if (e == p || e == -p) return true;
        return false;
    };
    CHECK(contains23(dF(2, 1) - F(3).scaled(gi(2)) + (E(1) * F(1) * F(1)).scaled(G(1, 2, 0, 1))));
    CHECK(contains23(dE(2, 1) + E(3).scaled(gi(2)) - (E(1) * E(1) * F(1)).scaled(G(1, 2, 0, 1))));
}

TEST_CASE("delta-d extraction contains the NLS system") {
    const AknsFrame& fr = *frame10();
    VBForm lag =
        wedge(VBForm::from_poly(lagrangian_coeff(fr, 1, 2).value),
              wedge(VBForm::horizontal(1), VBForm::horizontal(2))) +
        wedge(VBForm::from_poly(lagrangian_coeff(fr, 2, 3).value),
              wedge(VBForm::horizontal(2), VBForm::horizontal(3))) +
        wedge(VBForm::from_poly(lagrangian_coeff(fr, 3, 1).value),
              wedge(VBForm::horizontal(3), VBForm::horizontal(1)));
    VBForm dd = vertical_delta(horizontal_d(lag, {1, 2, 3}));
    REQUIRE_FALSE(dd.is_zero());  // genuine equations, not an off-shell identity

    auto contains = [&dd](const Poly& p) {
        for (const VBTerm& t : dd.terms())
            if (t.coeff == p || t.coeff == -p) return true;
        return false;
    };
    CHECK(contains(dF(1, 2) - dF(2, 1) - (E(1) * F(1) * F(1)).scaled(GaussianRational(2))));
    CHECK(contains(dE(2, 1) - dE(1, 2) - (E(1) * E(1) * F(1)).scaled(GaussianRational(2))));
    CHECK(contains(dF(1, 1) - F(2).scaled(gi(2))));
    CHECK(contains(dE(1, 1) + E(2).scaled(gi(2))));
}

TEST_CASE("EL equations reduce on-shell") {
    auto fr = frame10();
    FlowSet flows(fr);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
        CheckResult res = el_pair_check(*fr, flows, i, j);
        INFO("pair (", i, ",", j, ") witness: ", res.witness);
        CHECK(res.pass);
    }
    CheckResult triple = el_triple_check(*fr, flows, 1, 2, 3);
    INFO("triple witness: ", triple.witness);
    CHECK(triple.pass);
}

TEST_CASE("closure relation") {
    auto fr = frame10();
    FlowSet flows(fr);
    for (auto [i, j, k] : std::vector<std::array<int, 3>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}) {
        CheckResult res = closure_check(*fr, flows, i, j, k);
        INFO("triple (", i, ",", j, ",", k, ") witness: ", res.witness);
        CHECK(res.pass);
        CHECK(ham_closure_check(*fr, flows, i, j, k).pass);
    }
    CHECK_THROWS_AS(closure_check(*fr, flows, 1, 1, 2), Error);
}

TEST_CASE("omega1 defining relation and symplectic closure") {
    auto fr = frame10();
    FlowSet flows(fr);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
        CheckResult res = omega1_check(*fr, flows, i, j);
        INFO("pair (", i, ",", j, ") witness: ", res.witness);
        CHECK(res.pass);
        CHECK(omega_closure_check(*fr, flows, i, j).pass);
    }
}

TEST_CASE("conservation laws") {
    auto fr = frame10();
    FlowSet flows(fr);
    CheckResult res = conservation_check(*fr, flows, 4);
    INFO("witness: ", res.witness);
    CHECK(res.pass);

    QrChart chart(5);
    CHECK(chart.ef_to_qr(fr->a_coeff(2)) == (Q() * R()).scaled(G(0, 1, -1, 2)));
    Poly q1 = Qj({{1, 1}}), r1 = Rj({{1, 1}});
    CHECK(chart.ef_to_qr(fr->a_coeff(3)) == (q1 * R() - Q() * r1).scaled(G(1, 4, 0, 1)));
    // d1 a3 = d2 a2 on the flows
    CHECK(flows.apply(1, fr->a_coeff(3)) == flows.apply(2, fr->a_coeff(2)));
}

TEST_CASE("flow commutation check helper") {
    auto fr = frame10();
    FlowSet flows(fr);
    CHECK(flow_commute_check(flows, 1, 2, 3).pass);
    CHECK(flow_commute_check(flows, 0, 3, 2).pass);
}

TEST_CASE("generating biseries") {
    const AknsFrame& fr = *frame10();
    BiSeries h = hamiltonian_biseries(fr, 3, 3);
    CHECK(h.coeff(1, 2) == hamiltonian_coeff(fr, 1, 2).value);
    CHECK(h.coeff(2, 1) == -hamiltonian_coeff(fr, 1, 2).value);
    CHECK(h.coeff(1, 1).is_zero());
    BiSeries l = lagrangian_biseries(fr, 3, 3);
    CHECK(l.coeff(1, 2) == lagrangian_coeff(fr, 1, 2).value);
    CHECK_THROWS_AS(h.coeff(4, 1), Error);
}
