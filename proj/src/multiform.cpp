#include "aknsmf/multiform.hpp"

#include "aknsmf/poisson.hpp"

#include <algorithm>

namespace aknsmf {

namespace {

using FormMat = std::array<VBForm, 4>;

GaussianRational imag() { return GaussianRational::imag_unit(); }

Poly jet1(VarKind kind, int index, int time) {
    Variable v{kind, index, {{time, 1}}};
    return Poly::var(v);
}

// Entrywise delta of a 2x2 polynomial matrix.
FormMat delta_mat(const std::array<Poly, 4>& m) {
    FormMat out;
    for (int i = 0; i < 4; ++i) out[i] = vertical_delta(VBForm::from_poly(m[i]));
    return out;
}

FormMat mul(const std::array<Poly, 4>& a, const FormMat& b) {
    FormMat out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i * 2 + j] = b[0 * 2 + j].scaled(a[i * 2 + 0]) + b[1 * 2 + j].scaled(a[i * 2 + 1]);
    return out;
}

FormMat wedge_mat(const FormMat& a, const FormMat& b) {
    FormMat out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i * 2 + j] = wedge(a[i * 2 + 0], b[0 * 2 + j]) + wedge(a[i * 2 + 1], b[1 * 2 + j]);
    return out;
}

// Tr(Q_0 m) with Q_0 = diag(-i, i).
VBForm trace_q0(const FormMat& m) {
    return m[0].scaled(-imag()) + m[3].scaled(imag());
}

VBForm dx(int t) { return VBForm::horizontal(t); }

Poly reduced_lagrangian(const AknsFrame& frame, const FlowSet& flows, int i, int j) {
    return onshell_reduce(lagrangian_coeff(frame, i, j).value, flows);
}

}  // namespace

Poly kinetic_coeff(int i, int j) {
    if (i < 1 || j < 1) throw Error("kinetic_coeff: time indices must be >= 1");
    GaussianRational half(mpq_class(1, 2), 0);
    Poly out;
    for (int k = 1; k <= j; ++k) {
        out += Poly::f(k) * jet1(VarKind::E, j + 1 - k, i);
        out -= Poly::e(k) * jet1(VarKind::F, j + 1 - k, i);
    }
    for (int k = 1; k <= i; ++k) {
        out -= Poly::f(k) * jet1(VarKind::E, i + 1 - k, j);
        out += Poly::e(k) * jet1(VarKind::F, i + 1 - k, j);
    }
    return out.scaled(half);
}

Poly potential_coeff(const AknsFrame& frame, int i, int j) {
    if (i < 0 || j < 0) throw Error("potential_coeff: time indices must be >= 0");
    if (i == j) return Poly();
    if (i > j) return -potential_coeff(frame, j, i);
    frame.require_order(i + j + 1, "potential_coeff(" + std::to_string(i) + "," + std::to_string(j) + ")");
    Poly out;
    for (int k = 0; k <= i; ++k) {
        int m = i + j + 1 - k;
        out += GaussianRational(2) * (frame.a_coeff(k) * frame.a_coeff(m));
        out += frame.b_coeff(k) * frame.c_coeff(m);
        out += frame.c_coeff(k) * frame.b_coeff(m);
    }
    return out;
}

LagrangianCoeff lagrangian_coeff(const AknsFrame& frame, int i, int j) {
    if (i < 1 || j < 1) throw Error("lagrangian_coeff: time indices must be >= 1");
    if (i == j) return {i, j, Poly()};
    if (i > j) {
        LagrangianCoeff l = lagrangian_coeff(frame, j, i);
        return {i, j, -l.value};
    }
    frame.require_order(i + j + 1, "lagrangian_coeff(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return {i, j, kinetic_coeff(i, j) - potential_coeff(frame, i, j)};
}

HamiltonianCoeff hamiltonian_coeff(const AknsFrame& frame, int i, int j) {
    frame.require_order(i + j + 1, "hamiltonian_coeff(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return {i, j, potential_coeff(frame, i, j)};
}

SymplecticCoeff symplectic_coeff(const AknsFrame& frame, int k) {
    if (k < 0) throw Error("symplectic_coeff: time index must be >= 0");
    frame.require_order(std::max(k, 1), "symplectic_coeff(" + std::to_string(k) + ")");
    SymplecticCoeff out;
    out.k = k;
    for (int m = 1; m <= k; ++m) {
        std::array<Poly, 4> psi_m = frame.psi.coeff(m);
        FormMat dphi = delta_mat(frame.phi.coeff(k + 1 - m));
        // Tr(Q0 psi_m dphi) with Q0 folded into the psi rows
        std::array<Poly, 4> q0psi{psi_m[0].scaled(-imag()), psi_m[1].scaled(-imag()),
                                  psi_m[2].scaled(imag()), psi_m[3].scaled(imag())};
        out.omega1 = out.omega1 + dphi[0].scaled(q0psi[0]) + dphi[2].scaled(q0psi[1]) +
                     dphi[1].scaled(q0psi[2]) + dphi[3].scaled(q0psi[3]);
    }
    out.omega = vertical_delta(out.omega1);
    return out;
}

BiSeries lagrangian_biseries(const AknsFrame& frame, int order1, int order2) {
    BiSeries s(order1, order2);
    for (int i = 1; i <= order1; ++i)
        for (int j = 1; j <= order2; ++j)
            if (i != j) s.set(i, j, lagrangian_coeff(frame, i, j).value);
    return s;
}

BiSeries hamiltonian_biseries(const AknsFrame& frame, int order1, int order2) {
    BiSeries s(order1, order2);
    for (int i = 0; i <= order1; ++i)
        for (int j = 0; j <= order2; ++j)
            if (i != j) s.set(i, j, potential_coeff(frame, i, j));
    return s;
}

CheckResult darboux_check(const AknsFrame& frame, int k) {
    if (k < 0) throw Error("darboux_check: time index must be >= 0");
    frame.require_order(std::max(k, 1), "darboux_check(" + std::to_string(k) + ")");

    // Darboux expression sum_{m=1}^{k} delta f_m ^ delta e_{k+1-m}
    VBForm darboux;
    for (int m = 1; m <= k; ++m)
        darboux = darboux + wedge(VBForm::vertical(Variable::f(m)),
                                  VBForm::vertical(Variable::e(k + 1 - m)));

    // omega_k from -Tr(Q0 psi dphi ^ psi dphi), coefficient of z^{k+1}
    std::vector<FormMat> A(k + 1);  // A[p] = sum_{m+n=p, n>=1} psi_m dphi_n
    for (int p = 1; p <= k; ++p) {
        for (int n = 1; n <= p; ++n) {
            FormMat part = mul(frame.psi.coeff(p - n), delta_mat(frame.phi.coeff(n)));
            for (int t = 0; t < 4; ++t) A[p][t] = A[p][t] + part[t];
        }
    }
    VBForm from_trace;
    for (int p = 1; p <= k; ++p) {
        int q = k + 1 - p;
        if (q < 1 || q > k) continue;
        from_trace = from_trace - trace_q0(wedge_mat(A[p], A[q]));
    }

    CheckResult res = CheckResult::of(from_trace - darboux);
    res.merge(CheckResult::of(symplectic_coeff(frame, k).omega - darboux));
    return res;
}

std::vector<Poly> hamilton_equations(const AknsFrame& frame, int i, int j) {
    if (i < 1 || j < 1) throw Error("hamilton_equations: time indices must be >= 1");
    frame.require_order(i + j + 1, "hamilton_equations(" + std::to_string(i) + "," + std::to_string(j) + ")");
    VBForm omega_i = symplectic_coeff(frame, i).omega;
    VBForm omega_j = symplectic_coeff(frame, j).omega;
    Poly h = potential_coeff(frame, i, j);
    // delta H_ij = i(lift_j) omega_i - i(lift_i) omega_j
    VBForm residual = vertical_delta(VBForm::from_poly(h)) - vertical_lift_contract(j, omega_i) +
                      vertical_lift_contract(i, omega_j);
    std::vector<Poly> eqs;
    eqs.reserve(residual.terms().size());
    for (const VBTerm& t : residual.terms()) eqs.push_back(t.coeff);
    return eqs;
}

CheckResult el_pair_check(const AknsFrame& frame, const FlowSet& flows, int i, int j) {
    for (const Poly& eq : hamilton_equations(frame, i, j)) {
        Poly res = onshell_reduce(eq, flows);
        if (!res.is_zero()) return CheckResult::failed(res.str());
    }
    return CheckResult::ok();
}

CheckResult el_triple_check(const AknsFrame& frame, const FlowSet& flows, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k)) throw Error("el_triple_check: need 1 <= i < j < k");
    frame.require_order(i + j + k, "el_triple_check(" + std::to_string(i) + "," + std::to_string(j) +
                                       "," + std::to_string(k) + ")");
    VBForm lag =
        wedge(VBForm::from_poly(lagrangian_coeff(frame, i, j).value), wedge(dx(i), dx(j))) +
        wedge(VBForm::from_poly(lagrangian_coeff(frame, j, k).value), wedge(dx(j), dx(k))) +
        wedge(VBForm::from_poly(lagrangian_coeff(frame, k, i).value), wedge(dx(k), dx(i)));
    VBForm deltad = vertical_delta(horizontal_d(lag, {i, j, k}));
    for (const VBTerm& t : deltad.terms()) {
        Poly res = onshell_reduce(t.coeff, flows);
        if (!res.is_zero()) return CheckResult::failed(res.str());
    }
    return CheckResult::ok();
}

CheckResult closure_check(const AknsFrame& frame, const FlowSet& flows, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k)) throw Error("closure_check: need 1 <= i < j < k");
    frame.require_order(i + j + k, "closure_check(" + std::to_string(i) + "," + std::to_string(j) +
                                       "," + std::to_string(k) + ")");
    Poly sum = flows.apply(i, reduced_lagrangian(frame, flows, j, k));
    sum += flows.apply(k, reduced_lagrangian(frame, flows, i, j));
    sum += flows.apply(j, reduced_lagrangian(frame, flows, k, i));
    return CheckResult::of(sum);
}

CheckResult ham_closure_check(const AknsFrame& frame, const FlowSet& flows, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k)) throw Error("ham_closure_check: need 1 <= i < j < k");
    Poly sum = flows.apply(i, potential_coeff(frame, j, k));
    sum += flows.apply(k, potential_coeff(frame, i, j));
    sum += flows.apply(j, potential_coeff(frame, k, i));
    return CheckResult::of(sum);
}

CheckResult legendre_check(const AknsFrame& frame, int i, int j) {
    if (i < 1 || j < 1) throw Error("legendre_check: time indices must be >= 1");
    frame.require_order(i + j + 1, "legendre_check(" + std::to_string(i) + "," + std::to_string(j) + ")");
    VBForm omega1_i = symplectic_coeff(frame, i).omega1;
    VBForm omega1_j = symplectic_coeff(frame, j).omega1;
    VBForm lifted = vertical_lift_contract(i, omega1_j) - vertical_lift_contract(j, omega1_i);
    if (lifted.terms().size() > 1 || (!lifted.is_zero() && lifted.terms()[0].vdeg() + lifted.terms()[0].hdeg() != 0))
        return CheckResult::failed(lifted.str());
    Poly contraction = lifted.is_zero() ? Poly() : lifted.terms()[0].coeff;

    CheckResult res = CheckResult::of(contraction - kinetic_coeff(i, j));
    // Legendre transform of L: the contraction minus L equals H from the
    // closed-form coefficient formula
    Poly legendre_h = contraction - lagrangian_coeff(frame, i, j).value;
    res.merge(CheckResult::of(legendre_h - potential_coeff(frame, i, j)));
    return res;
}

CheckResult omega1_check(const AknsFrame& frame, const FlowSet& flows, int i, int j) {
    if (!(1 <= i && i < j)) throw Error("omega1_check: need 1 <= i < j");
    frame.require_order(i + j + 1, "omega1_check(" + std::to_string(i) + "," + std::to_string(j) + ")");
    VBForm omega1_form = wedge(symplectic_coeff(frame, i).omega1, dx(i)) +
                         wedge(symplectic_coeff(frame, j).omega1, dx(j));
    VBForm total = wedge(vertical_delta(VBForm::from_poly(lagrangian_coeff(frame, i, j).value)),
                         wedge(dx(i), dx(j))) +
                   horizontal_d(omega1_form, {i, j});
    VBForm component = total.horizontal_pair_component(i, j);
    return CheckResult::of(onshell_reduce(component, flows));
}

CheckResult omega_closure_check(const AknsFrame& frame, const FlowSet& flows, int i, int j) {
    if (!(1 <= i && i < j)) throw Error("omega_closure_check: need 1 <= i < j");
    frame.require_order(i + j, "omega_closure_check(" + std::to_string(i) + "," + std::to_string(j) + ")");
    VBForm omega_form = wedge(symplectic_coeff(frame, i).omega, dx(i)) +
                        wedge(symplectic_coeff(frame, j).omega, dx(j));
    VBForm component = horizontal_d(omega_form, {i, j}).horizontal_pair_component(i, j);
    return CheckResult::of(onshell_reduce(component, flows));
}

CheckResult conservation_check(const AknsFrame& frame, const FlowSet& flows, int max_index) {
    if (max_index < 1) throw Error("conservation_check: max_index must be >= 1");
    frame.require_order(std::max(2 * max_index, max_index + 1),
                        "conservation_check(max_index=" + std::to_string(max_index) + ")");

    // (a) the 1-form A_k = a_{k+1} satisfies the Hamiltonian criterion
    HamOneForm a_form = HamOneForm::conservation_form(frame, max_index);
    HamiltonianVerdict verdict = is_hamiltonian_oneform(a_form);
    if (!verdict.ok) return CheckResult::failed("conservation 1-form not Hamiltonian: " + verdict.reason);

    CheckResult res = CheckResult::ok();
    // (b) D_i a_{j+1} = D_j a_{i+1}
    for (int i = 0; i <= max_index; ++i) {
        for (int j = i + 1; j <= max_index; ++j) {
            Poly lhs = flows.apply(i, frame.a_coeff(j + 1));
            Poly rhs = flows.apply(j, frame.a_coeff(i + 1));
            res.merge(CheckResult::of(lhs - rhs));
        }
    }
    // (c) the scaling contraction of delta H_ij vanishes; equivalently every
    // H_ij has balanced monomials
    for (int i = 0; i <= max_index; ++i) {
        for (int j = i + 1; j <= max_index; ++j) {
            Poly h = potential_coeff(frame, i, j);
            VBForm dh = vertical_delta(VBForm::from_poly(h));
            VectorField xi;
            int top = h.max_ef_index();
            for (int m = 1; m <= top; ++m) {
                xi += VectorField::term(-Poly::e(m), {VFGenerator::partial(Variable::e(m))});
                xi += VectorField::term(Poly::f(m), {VFGenerator::partial(Variable::f(m))});
            }
            VBForm contracted = interior(xi, dh);
            res.merge(CheckResult::of(contracted));
            if (!h.monomial_balance())
                res.merge(CheckResult::failed("H_" + std::to_string(i) + std::to_string(j) +
                                              " monomial balance violated"));
        }
    }
    return res;
}

CheckResult flow_commute_check(const FlowSet& flows, int j, int k, int m) {
    Poly em = Poly::e(m), fm = Poly::f(m);
    CheckResult res = CheckResult::of(flows.apply(j, flows.apply(k, em)) -
                                      flows.apply(k, flows.apply(j, em)));
    res.merge(CheckResult::of(flows.apply(j, flows.apply(k, fm)) -
                              flows.apply(k, flows.apply(j, fm))));
    return res;
}

}  // namespace aknsmf
