#pragma once

#include "aknsmf/check.hpp"

#include <array>

namespace aknsmf {

/// 2x2 matrix of polynomials (entries may carry spectral parameters).
using PolyMat = std::array<Poly, 4>;

PolyMat mat_sub(const PolyMat& a, const PolyMat& b);
PolyMat mat_mul(const PolyMat& a, const PolyMat& b);
PolyMat mat_commutator(const PolyMat& a, const PolyMat& b);
bool mat_is_zero(const PolyMat& m);

/// Horizontal Hamiltonian 1-form candidate: components F_k, k = 0..max_time.
struct HamOneForm {
    std::map<int, Poly> comps;
    int max_time = 0;

    const Poly& comp(int k) const;
    /// A = sum_k a_{k+1} dx^k, the conservation-law 1-form.
    static HamOneForm conservation_form(const AknsFrame& frame, int max_time);
};

struct HamiltonianVerdict {
    bool ok = true;
    std::string reason;
    VectorField field;
};

/// Criterion for a 1-form to be Hamiltonian: F_0 constant, F_k depends only
/// on e_1..e_k, f_1..f_k, and the shift conditions
/// dF_k/de_j = dF_{k+1}/de_{j+1}, dF_k/df_j = dF_{k+1}/df_{j+1} hold.
/// On success carries the representative Hamiltonian vector field
/// xi_F = sum_k ( -dF_k/df_1 d/de_k + dF_k/de_1 d/df_k ).
HamiltonianVerdict is_hamiltonian_oneform(const HamOneForm& F);

/// Every 0-form is Hamiltonian with multivector field
/// xi_H = sum_i ( -dH/df_i d/de_1 ^ d_i + dH/de_i d/df_1 ^ d_i ).
VectorField hamiltonian_vf_zeroform(const Poly& H);

/// Single-time bracket at time k:
/// {F,G}_k = sum_{j=1}^k ( dF/df_j dG/de_{k-j+1} - dF/de_j dG/df_{k-j+1} ).
/// Arguments must not involve phase indices beyond k.
Poly single_time_pb(const Poly& F, const Poly& G, int k);

/// Multi-time bracket of two Hamiltonian 1-forms; components {F_k, G_k}_k.
/// Errors on non-Hamiltonian arguments.
HamOneForm multi_time_pb(const HamOneForm& F, const HamOneForm& G);
/// Same bracket through the defining contraction -i(xi_F) delta G, for
/// cross-checking the decomposition.
HamOneForm multi_time_pb_interior(const HamOneForm& F, const HamOneForm& G);
/// {|H|}{G} for a 0-form H against a 1-form G: i(xi_H) delta G, a 0-form.
Poly multi_time_pb(const Poly& H, const HamOneForm& G);
/// {|F|}{H} for a 1-form F against a 0-form H: -i(xi_F) delta H, a 0-form.
Poly multi_time_pb(const HamOneForm& F, const Poly& H);

/// The Lax form W(lambda) = sum_k Q^{(k)}(lambda) dx^k with entries as
/// polynomials in the spectral parameter.
struct LaxForm {
    int spectral_id = 1;
    int max_time = 0;
    std::map<int, PolyMat> comps;
};

LaxForm lax_form(const AknsFrame& frame, int max_time, int spectral_id);
/// Q^{(k)}(lambda) as a 2x2 polynomial matrix in the given spectral variable.
PolyMat lax_poly(const AknsFrame& frame, int k, int spectral_id);
/// One matrix-entry column of W as a scalar Hamiltonian 1-form candidate:
/// entry 0 -> sigma_3 part (a), 1 -> sigma_+ part (b), 2 -> sigma_- part (c).
HamOneForm lax_entry_form(const LaxForm& W, int entry);

/// {|H|}{W}: contraction of the 0-form's field with delta W, entrywise.
PolyMat multi_time_pb_matrix(const Poly& H, const LaxForm& W);

/// Sklyanin structure at time k: (lam - mu) * M = -[P12, Q1 + Q2] exactly,
/// where M is the 4x4 matrix of entrywise single-time brackets, plus the
/// divisibility witness that the right-hand side vanishes at lam = mu.
CheckResult rmatrix_check(const AknsFrame& frame, int k);

/// All nine single-time bracket families of a_i, b_j, c_j at time k against
/// the closed-form values (b/2a/-c families and the vanishing ones).
CheckResult pb_lemma_check(const AknsFrame& frame, int k);

/// Zero curvature as multiform Hamilton equations for the pair (i, j):
/// {|H_ij|}{W} = [Q^{(i)}, Q^{(j)}] and D_i Q^{(j)} - D_j Q^{(i)} =
/// [Q^{(i)}, Q^{(j)}].
CheckResult zc_hamiltonian_check(const AknsFrame& frame, const FlowSet& flows, int i, int j);

/// Coefficientwise generating identity behind the zero-curvature theorem,
/// with the (mu - lam)(nu - lam) denominators cleared: for every m, n,
/// [Q_m, Q_n] = T_{mn} - lam T_{m,n-1} - lam T_{m-1,n} + lam^2 T_{m-1,n-1}.
CheckResult zc_generating_check(const AknsFrame& frame, int m, int n);

/// Jacobi identity for three Hamiltonian 1-forms, including closure of the
/// bracket (each inner bracket is itself Hamiltonian).
CheckResult jacobi_check(const HamOneForm& F, const HamOneForm& G, const HamOneForm& K);
/// Jacobi identity for two 1-forms and one 0-form.
CheckResult jacobi_check(const HamOneForm& F, const HamOneForm& G, const Poly& H);

}  // namespace aknsmf
