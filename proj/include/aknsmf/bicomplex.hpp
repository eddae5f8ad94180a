#pragma once

#include "aknsmf/akns.hpp"

#include <variant>

namespace aknsmf {

/// One term of a (p, q)-form: a Poly coefficient times a wedge of vertical
/// generators delta(variable) and horizontal generators dx^t. Legs are kept
/// canonically sorted (verticals first, then horizontals ascending) with the
/// permutation sign folded into the coefficient.
struct VBTerm {
    Poly coeff;
    std::vector<Variable> vlegs;
    std::vector<int> hlegs;

    int vdeg() const { return static_cast<int>(vlegs.size()); }
    int hdeg() const { return static_cast<int>(hlegs.size()); }
};

/// Finite sum of VBTerms in canonical form; equality is structural, so an
/// identity check reduces to "is the canonical form zero".
class VBForm {
public:
    VBForm() = default;

    static VBForm from_poly(Poly p);
    /// delta(v)
    static VBForm vertical(const Variable& v);
    /// dx^t
    static VBForm horizontal(int t);
    static VBForm term(Poly coeff, std::vector<Variable> vlegs, std::vector<int> hlegs);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<VBTerm>& terms() const { return terms_; }

    VBForm operator-() const;
    friend VBForm operator+(const VBForm& a, const VBForm& b);
    friend VBForm operator-(const VBForm& a, const VBForm& b);
    VBForm scaled(const Poly& c) const;
    VBForm scaled(const GaussianRational& c) const;

    friend VBForm wedge(const VBForm& a, const VBForm& b);

    bool operator==(const VBForm& o) const;
    bool operator!=(const VBForm& o) const { return !(*this == o); }

    /// Coefficient Poly of the exact leg combination (canonical order).
    Poly coefficient_of(const std::vector<Variable>& vlegs, const std::vector<int>& hlegs) const;
    /// The (p, q-2)-form multiplying dx^i ^ dx^j (i < j), for extracting
    /// pair components of horizontal 2-form expansions.
    VBForm horizontal_pair_component(int i, int j) const;

    /// "(-2i)*e2 * δ[f1] ∧ dx[2] + ..." (coefficients in polyring format).
    std::string str() const;

private:
    friend VBForm canonicalized(std::vector<VBTerm> raw);
    std::vector<VBTerm> terms_;
};

/// delta: (p,q) -> (p+1,q). Satisfies delta^2 = 0.
VBForm vertical_delta(const VBForm& w);

/// d over an explicit finite set of active times: (p,q) -> (p,q+1).
/// Jet variables are raised one step in the acting time (off-shell total
/// derivative); d(delta u) = -delta(d u). Satisfies d^2 = 0, d delta = -delta d.
VBForm horizontal_d(const VBForm& w, const std::vector<int>& times);

/// Vector field / multivector field: finite sum of Poly-weighted wedges of
/// the generators d/d(variable) and d/dx^t.
struct VFGenerator {
    bool vertical = true;
    Variable var;  // when vertical
    int time = 0;  // when horizontal
    static VFGenerator partial(const Variable& v) { return {true, v, 0}; }
    static VFGenerator partial_time(int t) { return {false, Variable{}, t}; }
};

struct VFTerm {
    Poly coeff;
    std::vector<VFGenerator> factors;
};

class VectorField {
public:
    VectorField() = default;
    static VectorField term(Poly coeff, std::vector<VFGenerator> factors);
    VectorField& operator+=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { a += b; return a; }
    const std::vector<VFTerm>& terms() const { return terms_; }
    bool is_zero() const;
    std::string str() const;

private:
    std::vector<VFTerm> terms_;
};

/// Graded interior product; a multivector xi_1 ^ ... ^ xi_r contracts as
/// i(xi_1) o ... o i(xi_r) (rightmost factor applied first).
VBForm interior(const VectorField& xi, const VBForm& w);

/// Contraction with the vertical lift of d/dx^k: every vertical leg delta(v)
/// may be replaced by the jet variable v raised in time k, with graded signs.
VBForm vertical_lift_contract(int k, const VBForm& w);

/// Recursively rewrites every e/f jet variable to its on-shell polynomial:
/// v^{(alpha + unit_k)} -> D_k(reduce(v^{(alpha)})). The result carries no
/// jet variables. Flow tables must cover every time occurring in jets.
Poly onshell_reduce(const Poly& p, const FlowSet& flows);
/// Form version: coefficients are reduced and vertical legs delta(jet) are
/// expanded through delta of the reduced polynomial.
VBForm onshell_reduce(const VBForm& w, const FlowSet& flows);

/// Rewrites a form over the phase variables into the q, r chart:
/// coefficients through the chart, vertical legs delta(v) through delta of
/// the charted polynomial.
VBForm ef_to_qr(const QrChart& chart, const VBForm& w);

}  // namespace aknsmf
