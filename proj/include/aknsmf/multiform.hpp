#pragma once

#include "aknsmf/check.hpp"

namespace aknsmf {

/// Coefficient L_ij of the Lagrangian multiform (i, j >= 1, L_ji = -L_ij):
/// a polynomial in the phase variables and their first i/j-time jets.
struct LagrangianCoeff {
    int i = 0, j = 0;
    Poly value;
};

/// Coefficient H_ij of the Hamiltonian multiform: a jet-free phase
/// polynomial, antisymmetric in (i, j), with balanced monomials, depending
/// only on indices up to max(i, j).
struct HamiltonianCoeff {
    int i = 0, j = 0;
    Poly value;
};

/// omega^(1)_k (a (1,0)-form) and omega_k = delta omega^(1)_k (a (2,0)-form).
struct SymplecticCoeff {
    int k = 0;
    VBForm omega1;
    VBForm omega;
};

/// The kinetic part of L_ij:
/// (1/2) sum_{k=1}^{j} (f_k d_i e_{j+1-k} - e_k d_i f_{j+1-k}) - (i <-> j).
Poly kinetic_coeff(int i, int j);

/// The potential V_ij = sum_{k=0}^{min(i,j)} Tr(Q_k Q_{i+j+1-k}); equals the
/// Hamiltonian coefficient.
Poly potential_coeff(const AknsFrame& frame, int i, int j);

LagrangianCoeff lagrangian_coeff(const AknsFrame& frame, int i, int j);
HamiltonianCoeff hamiltonian_coeff(const AknsFrame& frame, int i, int j);
SymplecticCoeff symplectic_coeff(const AknsFrame& frame, int k);

/// Generating-series forms of the multiforms: coefficient (i,j) of
/// L(lam, mu) resp. H(lam, mu).
BiSeries lagrangian_biseries(const AknsFrame& frame, int order1, int order2);
BiSeries hamiltonian_biseries(const AknsFrame& frame, int order1, int order2);

/// omega_k from the trace formula -Tr(Q0 psi dphi ^ psi dphi) equals the
/// Darboux expression sum_{m=1}^{k} delta f_m ^ delta e_{k+1-m}.
CheckResult darboux_check(const AknsFrame& frame, int k);

/// The multiform Hamilton equations for the pair (i, j): the coefficient
/// equations of delta H_ij - i(lift_j) omega_i + i(lift_i) omega_j = 0.
/// Returned as the list of equation polynomials (one per delta e_k /
/// delta f_k generator, in canonical leg order).
std::vector<Poly> hamilton_equations(const AknsFrame& frame, int i, int j);

/// Every Hamilton equation of the pair reduces to zero on the flows.
CheckResult el_pair_check(const AknsFrame& frame, const FlowSet& flows, int i, int j);

/// delta d of (L_ij dx^ij + L_jk dx^jk + L_ki dx^ki) over the time set
/// {i,j,k}: every coefficient of a vertical generator reduces to zero.
CheckResult el_triple_check(const AknsFrame& frame, const FlowSet& flows, int i, int j, int k);

/// On-shell closure of the Lagrangian multiform:
/// D_i(red L_jk) + D_k(red L_ij) + D_j(red L_ki) = 0.
CheckResult closure_check(const AknsFrame& frame, const FlowSet& flows, int i, int j, int k);

/// On-shell closure in Hamiltonian form: D_i H_jk + D_k H_ij + D_j H_ki = 0.
CheckResult ham_closure_check(const AknsFrame& frame, const FlowSet& flows, int i, int j, int k);

/// i(lift_i) omega1_j - i(lift_j) omega1_i equals the kinetic part of L_ij
/// off-shell, hence the Legendre transform of L reproduces hamiltonian_coeff.
CheckResult legendre_check(const AknsFrame& frame, int i, int j);

/// The (i, j) component of delta L + d Omega^(1) reduces to zero on-shell.
CheckResult omega1_check(const AknsFrame& frame, const FlowSet& flows, int i, int j);

/// The (i, j) component of d Omega reduces to zero on-shell.
CheckResult omega_closure_check(const AknsFrame& frame, const FlowSet& flows, int i, int j);

/// The conservation 1-form A_k = a_{k+1}: (a) Hamiltonian criterion holds,
/// (b) D_i a_{j+1} = D_j a_{i+1} for i, j <= max_index, (c) the contraction
/// of delta H_ij with the scaling field vanishes (monomial balance).
CheckResult conservation_check(const AknsFrame& frame, const FlowSet& flows, int max_index);

/// D_j D_k = D_k D_j on e_m, f_m.
CheckResult flow_commute_check(const FlowSet& flows, int j, int k, int m);

}  // namespace aknsmf
